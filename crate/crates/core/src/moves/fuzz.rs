use super::{
    bigon_birth, bigon_death, bigon_sites, death_sites, handle_slide_beta, join_components,
    relabel, slide_sites, stabilize,
};
use crate::diagram::{example_s3, Diagram};
use crate::layout::{apply_full_twist, Side};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    BigonBirth,
    BigonDeath,
    Slide,
    Stabilize,
    Twist,
    Relabel,
}

/// Parameters of the random diagram generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub steps: usize,
    pub genus_max: usize,
    /// moves that would exceed this many crossings are skipped
    pub max_crossings: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            steps: 8,
            genus_max: 3,
            max_crossings: 200,
        }
    }
}

impl FuzzConfig {
    /// Start from the genus-one S³ diagram and apply `steps` random moves. Births 40%,
    /// twists 25%, slides 20%, deaths 10%, stabilizations 5%; a final relabeling shuffles
    /// curve numbers and names. Inapplicable draws count as a step and change nothing.
    pub fn generate(&self, seed: u64) -> Diagram {
        self.generate_from(&example_s3(), seed)
    }

    /// Like [`FuzzConfig::generate`] but starting from `base`; every move preserves Θ̃.
    pub fn generate_from(&self, base: &Diagram, seed: u64) -> Diagram {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut d = base.clone();
        for _ in 0..self.steps {
            let kind = match rng.gen_range(0..100) {
                0..=39 => MoveKind::BigonBirth,
                40..=64 => MoveKind::Twist,
                65..=84 => MoveKind::Slide,
                85..=94 => MoveKind::BigonDeath,
                _ => MoveKind::Stabilize,
            };
            if let Some(next) = self.step(&d, kind, &mut rng) {
                d = next;
            }
        }
        relabel(&d, &mut rng)
    }

    fn step(&self, d: &Diagram, kind: MoveKind, rng: &mut ChaCha8Rng) -> Option<Diagram> {
        match kind {
            MoveKind::BigonBirth => {
                if d.n() + 2 > self.max_crossings {
                    return None;
                }
                let sites = bigon_sites(d).ok()?;
                let site = sites.choose(rng)?;
                bigon_birth(d, site).ok().map(|b| b.diagram)
            }
            MoveKind::BigonDeath => {
                let sites = death_sites(d).ok()?;
                let &f = sites.choose(rng)?;
                // a death may undo a joining finger; keep the curves connected
                bigon_death(d, f).ok().filter(|e| e.is_connected())
            }
            MoveKind::Slide => {
                let sites = slide_sites(d).ok()?;
                let site = sites.choose(rng)?;
                if d.n() + d.beta(d.beta_of(site.over.start)).len() > self.max_crossings {
                    return None;
                }
                handle_slide_beta(d, site).ok().map(|s| s.diagram)
            }
            MoveKind::Stabilize => {
                if d.genus() >= self.genus_max || d.n() + 3 > self.max_crossings {
                    return None;
                }
                join_components(&stabilize(d)).ok()
            }
            MoveKind::Twist => {
                let i = rng.gen_range(0..d.genus());
                let side = if rng.gen_bool(0.5) {
                    Side::Prime
                } else {
                    Side::DoublePrime
                };
                let sense = if rng.gen_bool(0.5) { 1 } else { -1 };
                apply_full_twist(d, i, side, sense).ok()
            }
            MoveKind::Relabel => Some(relabel(d, rng)),
        }
    }
}

/// [`FuzzConfig::generate`] with the default crossing cap.
pub fn random_diagram(seed: u64, steps: usize, genus_max: usize) -> Diagram {
    FuzzConfig {
        steps,
        genus_max,
        ..FuzzConfig::default()
    }
    .generate(seed)
}
