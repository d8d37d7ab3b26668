use crate::output::{print_json, print_table, q};
use crate::{Ctx, Failure};
use hdtheta::checks::fuzz_diagram;
use hdtheta::diagram::{example_d1, example_d2, example_s3};
use hdtheta::invariants::Summary;
use hdtheta::layout::check_drawing;
use hdtheta::moves::FuzzConfig;
use hdtheta::{fmt_q, to_hdg, Q};
use rayon::prelude::*;
use serde_json::json;

#[derive(clap::Args)]
pub struct Args {
    /// number of diagrams
    #[arg(long, default_value_t = 20)]
    count: u64,
    /// random moves per diagram
    #[arg(long, default_value_t = 8)]
    steps: usize,
    /// genus cap
    #[arg(long, default_value_t = 3)]
    genus_max: usize,
    /// print every generated diagram in HDG form
    #[arg(long)]
    print_diagrams: bool,
}

struct Case {
    base: &'static str,
    genus: usize,
    crossings: usize,
    theta: Q,
    expected: Q,
    ok: bool,
    hdg: String,
}

pub fn run(ctx: &Ctx, args: &Args) -> Result<(), Failure> {
    if args.genus_max == 0 {
        return Err(Failure::Input("--genus-max must be at least 1".into()));
    }
    let cfg = FuzzConfig {
        steps: args.steps,
        genus_max: args.genus_max,
        ..FuzzConfig::default()
    };
    let bases = [
        ("S3", example_s3()),
        ("D1", example_d1()),
        ("D2", example_d2()),
    ];
    let expected: Vec<Q> = bases
        .iter()
        .map(|(_, d)| Summary::of(d).expect("examples are valid").theta_tilde)
        .collect();
    let cases: Vec<Case> = (0..args.count)
        .into_par_iter()
        .map(|k| {
            let s = ctx.seed ^ k;
            let b = (s % 3) as usize;
            let d = fuzz_diagram(s, &cfg);
            let theta = Summary::of(&d)
                .map(|x| x.theta_tilde)
                .unwrap_or_else(|_| Q::from_integer((-999).into()));
            let ok = check_drawing(&d).is_ok() && d.is_connected() && theta == expected[b];
            Case {
                base: bases[b].0,
                genus: d.genus(),
                crossings: d.n(),
                theta,
                expected: expected[b].clone(),
                ok,
                hdg: to_hdg(&d),
            }
        })
        .collect();
    let failures = cases.iter().filter(|c| !c.ok).count();
    if ctx.json {
        let list: Vec<_> = cases
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let mut v = json!({
                    "index": k,
                    "base": c.base,
                    "genus": c.genus,
                    "crossings": c.crossings,
                    "theta_tilde": q(&c.theta),
                    "expected": q(&c.expected),
                    "ok": c.ok,
                });
                if args.print_diagrams || !c.ok {
                    v["hdg"] = c.hdg.clone().into();
                }
                v
            })
            .collect();
        print_json(&json!({
            "command": "fuzz",
            "seed": ctx.seed,
            "count": args.count,
            "steps": args.steps,
            "cases": list,
            "failures": failures,
        }));
    } else {
        let mut rows = vec![vec![
            "#".into(),
            "base".into(),
            "genus".into(),
            "crossings".into(),
            "theta_tilde".into(),
            "status".into(),
        ]];
        for (k, c) in cases.iter().enumerate() {
            rows.push(vec![
                k.to_string(),
                c.base.into(),
                c.genus.to_string(),
                c.crossings.to_string(),
                fmt_q(&c.theta),
                if c.ok {
                    "ok".into()
                } else {
                    format!("FAIL (expected {})", fmt_q(&c.expected))
                },
            ]);
        }
        print_table(&rows);
        for (k, c) in cases.iter().enumerate() {
            if args.print_diagrams || !c.ok {
                println!("\n# diagram {k}\n{}", c.hdg.trim_end());
            }
        }
        println!("\n{} diagrams, {failures} failures", cases.len());
    }
    if failures > 0 {
        Err(Failure::Property)
    } else {
        Ok(())
    }
}
