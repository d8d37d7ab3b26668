use crate::output::{input_error, print_json, print_table, read_input};
use crate::{Ctx, Failure};
use hdtheta::checks::{
    case_rng, fuzz_diagram, run as run_check, Check, Failure as CheckFailure, Outcome,
};
use hdtheta::moves::FuzzConfig;
use hdtheta::{parse_hdg, Diagram};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::path::PathBuf;

#[derive(clap::Args)]
pub struct Args {
    /// diagram in HDG format (or use --fuzz)
    file: Option<PathBuf>,
    /// draw a fresh random diagram for every iteration
    #[arg(long)]
    fuzz: bool,
    /// comma-separated suites: twist, bigon, slide, w-change, m-change, square, s-ell, basepoint, structure
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    /// random cases per suite
    #[arg(long, default_value_t = 20)]
    iters: u64,
    /// moves per fuzzed diagram
    #[arg(long, default_value_t = 8)]
    steps: usize,
    /// genus cap for fuzzed diagrams
    #[arg(long, default_value_t = 3)]
    genus_max: usize,
}

#[derive(Default, Clone, Copy)]
struct Tally {
    passed: u64,
    skipped: u64,
    failed: u64,
}

struct Found {
    iteration: u64,
    steps: Option<usize>,
    failure: CheckFailure,
}

pub fn run(ctx: &Ctx, args: &Args) -> Result<(), Failure> {
    let checks: Vec<Check> = if args.checks.is_empty() {
        Check::ALL.to_vec()
    } else {
        args.checks
            .iter()
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|e: hdtheta::Error| Failure::Input(e.to_string()))
            })
            .collect::<Result<_, _>>()?
    };
    let cfg = FuzzConfig {
        steps: args.steps,
        genus_max: args.genus_max,
        ..FuzzConfig::default()
    };
    let (source, digest, fixed) = match (&args.file, args.fuzz) {
        (Some(path), false) => {
            let (text, digest) = read_input(path)?;
            let d = parse_hdg(&text).map_err(|e| input_error(path, e))?;
            d.inverse_intersection().map_err(|e| input_error(path, e))?;
            (path.display().to_string(), Some(digest), Some(d))
        }
        (None, true) => ("fuzz".to_string(), None, None),
        _ => {
            return Err(Failure::Input(
                "give either a diagram file or --fuzz".into(),
            ))
        }
    };
    let seed = ctx.seed;
    let diagram = |k: u64, cfg: &FuzzConfig| -> Diagram {
        match &fixed {
            Some(d) => d.clone(),
            None => fuzz_diagram(seed ^ k, cfg),
        }
    };
    let results: Vec<Vec<Outcome>> = (0..args.iters)
        .into_par_iter()
        .map(|k| {
            let d = diagram(k, &cfg);
            checks
                .iter()
                .map(|&c| run_check(c, &d, &mut case_rng(seed, k, c)))
                .collect()
        })
        .collect();

    let mut tallies = vec![Tally::default(); checks.len()];
    let mut first: Option<(u64, usize)> = None;
    for (k, row) in results.iter().enumerate() {
        for (ci, o) in row.iter().enumerate() {
            let t = &mut tallies[ci];
            match o {
                Outcome::Pass { .. } => t.passed += 1,
                Outcome::Skipped { .. } => t.skipped += 1,
                Outcome::Fail(_) => {
                    t.failed += 1;
                    first.get_or_insert((k as u64, ci));
                }
            }
        }
    }
    let found = first.map(|(k, ci)| {
        let check = checks[ci];
        let Outcome::Fail(f) = &results[k as usize][ci] else {
            unreachable!("recorded as a failure")
        };
        // shrink a fuzzed case to the shortest move sequence that still fails
        if fixed.is_none() {
            for s in 0..args.steps {
                let d = diagram(k, &FuzzConfig { steps: s, ..cfg });
                if let Outcome::Fail(g) = run_check(check, &d, &mut case_rng(seed, k, check)) {
                    return Found {
                        iteration: k,
                        steps: Some(s),
                        failure: g,
                    };
                }
            }
        }
        Found {
            iteration: k,
            steps: fixed.is_none().then_some(args.steps),
            failure: f.clone(),
        }
    });

    if ctx.json {
        let per: Vec<Value> = checks
            .iter()
            .zip(&tallies)
            .map(|(c, t)| json!({"check": c.name(), "passed": t.passed, "skipped": t.skipped, "failed": t.failed}))
            .collect();
        let failure = found.as_ref().map(|f| {
            json!({
                "check": f.failure.check.name(),
                "iteration": f.iteration,
                "fuzz_steps": f.steps,
                "case": f.failure.case,
                "detail": f.failure.detail,
                "reproducer": f.failure.reproducer,
            })
        });
        print_json(&json!({
            "command": "verify",
            "input": source,
            "sha256": digest,
            "seed": seed,
            "iters": args.iters,
            "checks": per,
            "status": if found.is_some() { "fail" } else { "pass" },
            "failure": failure,
        }));
    } else {
        println!("input  {source}");
        println!("seed   {seed}");
        println!("iters  {}", args.iters);
        println!();
        let mut rows = vec![vec![
            "check".into(),
            "passed".into(),
            "skipped".into(),
            "failed".into(),
        ]];
        for (c, t) in checks.iter().zip(&tallies) {
            let status = if t.failed > 0 {
                "FAIL"
            } else if t.passed == 0 {
                "skipped"
            } else {
                "ok"
            };
            rows.push(vec![
                c.name().into(),
                t.passed.to_string(),
                t.skipped.to_string(),
                t.failed.to_string(),
                status.into(),
            ]);
        }
        print_table(&rows);
        if let Some(f) = &found {
            println!();
            println!(
                "first failure: {} (iteration {})",
                f.failure.check, f.iteration
            );
            if let Some(s) = f.steps {
                println!("fuzz steps: {s}");
            }
            println!("case: {}", f.failure.case);
            println!("detail: {}", f.failure.detail);
            println!("reproducer:");
            print!("{}", f.failure.reproducer);
        } else {
            println!();
            println!("result: pass");
        }
    }
    if found.is_some() {
        Err(Failure::Property)
    } else {
        Ok(())
    }
}
