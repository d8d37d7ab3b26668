//! The line-oriented HDG text format.
//!
//! ```text
//! genus <g>
//! alpha <i>: <id> <id> ...
//! beta <j>: <id>:<+|->:<t> ...
//! matching: <id_1> ... <id_g>
//! ```

use super::{BetaEntry, Diagram, DiagramSpec};
use crate::error::{Error, Result};
use std::fmt::Write;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn valid_id(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn curve_index(line: usize, s: &str, g: usize) -> Result<usize> {
    let i: usize = s
        .trim()
        .parse()
        .map_err(|_| perr(line, format!("bad curve index `{}`", s.trim())))?;
    if i == 0 || i > g {
        return Err(perr(line, format!("curve index {i} outside 1..={g}")));
    }
    Ok(i - 1)
}

/// Parse and fully validate, including the planar-drawing check of the turnings.
pub fn parse_hdg(text: &str) -> Result<Diagram> {
    let spec = parse_spec(text)?;
    let d = Diagram::from_spec(&spec)?;
    crate::layout::check_drawing(&d)?;
    Ok(d)
}

/// Parse without building the diagram.
pub fn parse_spec(text: &str) -> Result<DiagramSpec> {
    let mut genus: Option<usize> = None;
    let mut alpha: Vec<Option<Vec<String>>> = Vec::new();
    let mut beta: Vec<Option<Vec<BetaEntry>>> = Vec::new();
    let mut matching: Option<Vec<String>> = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (head, rest) = match body.split_once(char::is_whitespace) {
            Some((h, r)) => (h, r.trim()),
            None => (body, ""),
        };
        if head == "genus" {
            if genus.is_some() {
                return Err(perr(line, "genus given twice"));
            }
            let g: usize = rest
                .parse()
                .map_err(|_| perr(line, format!("bad genus `{rest}`")))?;
            if g == 0 {
                return Err(perr(line, "genus must be positive"));
            }
            genus = Some(g);
            alpha = vec![None; g];
            beta = vec![None; g];
            continue;
        }
        if head == "matching:" || (head == "matching" && rest.starts_with(':')) {
            let ids = if head == "matching" { &rest[1..] } else { rest };
            let ids: Vec<String> = ids.split_whitespace().map(str::to_string).collect();
            if let Some(bad) = ids.iter().find(|s| !valid_id(s)) {
                return Err(perr(line, format!("bad crossing id `{bad}`")));
            }
            if matching.replace(ids).is_some() {
                return Err(perr(line, "matching given twice"));
            }
            continue;
        }
        let g = genus.ok_or_else(|| perr(line, "`genus` must come first"))?;
        let (idx, list) = rest
            .split_once(':')
            .ok_or_else(|| perr(line, "expected `<index>: ...`"))?;
        let idx = curve_index(line, idx, g)?;
        match head {
            "alpha" => {
                let ids: Vec<String> = list.split_whitespace().map(str::to_string).collect();
                if let Some(bad) = ids.iter().find(|s| !valid_id(s)) {
                    return Err(perr(line, format!("bad crossing id `{bad}`")));
                }
                if ids.is_empty() {
                    return Err(perr(line, "empty alpha curve"));
                }
                if alpha[idx].replace(ids).is_some() {
                    return Err(perr(line, format!("alpha {} given twice", idx + 1)));
                }
            }
            "beta" => {
                let mut entries = Vec::new();
                for tok in list.split_whitespace() {
                    let parts: Vec<&str> = tok.split(':').collect();
                    if parts.len() != 3 || !valid_id(parts[0]) {
                        return Err(perr(
                            line,
                            format!("bad beta entry `{tok}`, expected id:+:t"),
                        ));
                    }
                    let sign = match parts[1] {
                        "+" => 1,
                        "-" => -1,
                        s => return Err(perr(line, format!("bad sign `{s}` in `{tok}`"))),
                    };
                    let turn: i64 = parts[2].parse().map_err(|_| {
                        perr(line, format!("bad turning `{}` in `{tok}`", parts[2]))
                    })?;
                    entries.push(BetaEntry {
                        id: parts[0].to_string(),
                        sign,
                        turn,
                    });
                }
                if entries.is_empty() {
                    return Err(perr(line, "empty beta curve"));
                }
                if beta[idx].replace(entries).is_some() {
                    return Err(perr(line, format!("beta {} given twice", idx + 1)));
                }
            }
            other => return Err(perr(line, format!("unknown keyword `{other}`"))),
        }
    }
    let genus = genus.ok_or_else(|| perr(0, "missing `genus` line"))?;
    let alpha = alpha
        .into_iter()
        .enumerate()
        .map(|(i, a)| a.ok_or_else(|| perr(0, format!("missing alpha {}", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    let beta = beta
        .into_iter()
        .enumerate()
        .map(|(j, b)| b.ok_or_else(|| perr(0, format!("missing beta {}", j + 1))))
        .collect::<Result<Vec<_>>>()?;
    Ok(DiagramSpec {
        genus,
        alpha,
        beta,
        matching: matching.unwrap_or_default(),
    })
}

pub fn to_hdg(d: &Diagram) -> String {
    let spec = d.to_spec();
    let mut out = String::new();
    writeln!(out, "genus {}", spec.genus).unwrap();
    for (i, a) in spec.alpha.iter().enumerate() {
        writeln!(out, "alpha {}: {}", i + 1, a.join(" ")).unwrap();
    }
    for (j, b) in spec.beta.iter().enumerate() {
        let items: Vec<String> = b
            .iter()
            .map(|e| format!("{}:{}:{}", e.id, if e.sign > 0 { '+' } else { '-' }, e.turn))
            .collect();
        writeln!(out, "beta {}: {}", j + 1, items.join(" ")).unwrap();
    }
    writeln!(out, "matching: {}", spec.matching.join(" ")).unwrap();
    out
}
