//! Fixtures shared by the criterion benchmarks in `benches/`.

use hdtheta::checks::fuzz_diagram;
use hdtheta::moves::FuzzConfig;
use hdtheta::Diagram;

/// A fuzzed diagram with at least `crossings` crossings, found by lengthening the move walk.
pub fn diagram_with_at_least(crossings: usize, seed: u64) -> Diagram {
    let mut steps = 4;
    loop {
        let d = fuzz_diagram(
            seed,
            &FuzzConfig {
                steps,
                genus_max: 4,
                max_crossings: 4 * crossings,
            },
        );
        if d.n() >= crossings {
            return d;
        }
        steps += 4;
    }
}
