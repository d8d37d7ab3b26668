use crate::output::{input_error, print_json, print_pairs, q, read_input};
use crate::{Ctx, Failure};
use hdtheta::invariants::Summary;
use hdtheta::{fmt_q, parse_hdg};
use serde_json::json;
use std::path::PathBuf;

#[derive(clap::Args)]
pub struct Args {
    /// diagram in HDG format
    file: PathBuf,
}

pub fn run(ctx: &Ctx, args: &Args) -> Result<(), Failure> {
    let (text, digest) = read_input(&args.file)?;
    let d = parse_hdg(&text).map_err(|e| input_error(&args.file, e))?;
    let s = Summary::of(&d).map_err(|e| input_error(&args.file, e))?;
    let n = s.j.n;
    let rows: Vec<Vec<String>> = (0..n)
        .map(|r| (0..n).map(|c| fmt_q(s.j.get(r, c))).collect())
        .collect();
    if ctx.json {
        print_json(&json!({
            "command": "compute",
            "input": args.file.display().to_string(),
            "sha256": digest,
            "genus": s.genus,
            "det": s.det.to_string(),
            "J": rows,
            "ell2": q(&s.ell2),
            "s_ell": q(&s.s_ell),
            "e": q(&s.e),
            "theta_tilde": q(&s.theta_tilde),
        }));
    } else {
        let j = rows
            .iter()
            .map(|r| r.join(" "))
            .collect::<Vec<_>>()
            .join("; ");
        print_pairs(&[
            ("input", args.file.display().to_string()),
            ("sha256", digest),
            ("genus", s.genus.to_string()),
            ("det", s.det.to_string()),
            ("J", format!("[{j}]")),
            ("ell2", fmt_q(&s.ell2)),
            ("s_ell", fmt_q(&s.s_ell)),
            ("e", fmt_q(&s.e)),
            ("theta_tilde", fmt_q(&s.theta_tilde)),
        ]);
    }
    Ok(())
}
