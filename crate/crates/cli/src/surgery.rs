use crate::output::{input_error, int, print_json, print_pairs, q, read_input};
use crate::{Ctx, Failure};
use hdtheta::fmt_q;
use hdtheta::surgery::{
    alexander, casson_surgery_delta, delta_second_derivative_at_one, lambda_prime, SeifertData,
};
use serde_json::{Map, Value};
use std::path::PathBuf;

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Emit {
    Alexander,
    Lambda,
    All,
}

#[derive(clap::Args)]
pub struct Args {
    /// whitespace-separated 2g×2g integers, L[a][b] = lk(z_a⁺, z_b)
    #[arg(long)]
    linking_matrix: PathBuf,
    /// surgery coefficient 1/n
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    n: i64,
    #[arg(long, value_enum, default_value = "all")]
    emit: Emit,
}

pub fn run(ctx: &Ctx, args: &Args) -> Result<(), Failure> {
    let (text, digest) = read_input(&args.linking_matrix)?;
    let s = SeifertData::parse(&text).map_err(|e| input_error(&args.linking_matrix, e))?;
    let err = |e| input_error(&args.linking_matrix, e);
    let lam = lambda_prime(&s);
    let delta = casson_surgery_delta(&s, args.n).map_err(|e| Failure::Input(e.to_string()))?;
    let alex = alexander(&s).map_err(err)?;
    let half = delta_second_derivative_at_one(&s).map_err(err)?;
    let (show_alex, show_lambda) = (args.emit != Emit::Lambda, args.emit != Emit::Alexander);
    if ctx.json {
        let mut m = Map::new();
        m.insert("command".into(), "surgery".into());
        m.insert(
            "input".into(),
            args.linking_matrix.display().to_string().into(),
        );
        m.insert("sha256".into(), digest.into());
        m.insert("g".into(), s.genus().into());
        if show_lambda {
            m.insert("lambda_prime".into(), int(&lam));
        }
        if show_alex {
            let coeffs: Map<String, Value> =
                alex.terms().map(|(e, c)| (e.to_string(), int(c))).collect();
            m.insert("alexander".into(), Value::Object(coeffs));
        }
        if show_lambda {
            m.insert("delta_second_half".into(), q(&half));
            m.insert("n".into(), args.n.into());
            m.insert("surgery_delta".into(), int(&delta));
        }
        print_json(&Value::Object(m));
    } else {
        let mut rows = vec![
            ("input", args.linking_matrix.display().to_string()),
            ("g", s.genus().to_string()),
        ];
        if show_lambda {
            rows.push(("lambda_prime", lam.to_string()));
        }
        if show_alex {
            rows.push(("alexander", alex.to_string()));
        }
        if show_lambda {
            rows.push(("delta_second_half", fmt_q(&half)));
            rows.push(("surgery_delta", format!("{delta} (n = {})", args.n)));
        }
        print_pairs(&rows);
    }
    Ok(())
}
