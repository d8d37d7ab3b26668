use crate::Failure;
use hdtheta::{fmt_q, Error, Q};
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::path::Path;

/// File contents and their SHA-256.
pub fn read_input(path: &Path) -> Result<(String, String), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let digest = format!("{:x}", Sha256::digest(text.as_bytes()));
    Ok((text, digest))
}

/// An error about `path`, with the line number when there is one.
pub fn input_error(path: &Path, e: Error) -> Failure {
    match e {
        Error::Parse { line, msg } if line > 0 => {
            Failure::Input(format!("{}:{line}: {msg}", path.display()))
        }
        e => Failure::Input(format!("{}: {e}", path.display())),
    }
}

pub fn q(x: &Q) -> Value {
    Value::String(fmt_q(x))
}

pub fn int<T: ToString + TryInto<i64> + Clone>(x: &T) -> Value {
    match x.clone().try_into() {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(x.to_string()),
    }
}

pub fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("values serialize")
    );
}

/// Two aligned columns.
pub fn print_pairs(rows: &[(&str, String)]) {
    let w = rows
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    for (k, v) in rows {
        println!("{k:<w$}  {v}");
    }
}

/// A table with a header row, columns right-aligned except the first.
pub fn print_table(rows: &[Vec<String>]) {
    let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| {
                if c == 0 {
                    format!("{s:<w$}", w = widths[c])
                } else {
                    format!("{s:>w$}", w = widths[c])
                }
            })
            .collect();
        println!("{}", line.join("  ").trim_end());
    }
}
