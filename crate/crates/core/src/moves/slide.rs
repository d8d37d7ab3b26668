use super::Namer;
use crate::diagram::{BetaEntry, Dart, Diagram, Kind};
use crate::error::{Error, Result};
use crate::layout::{chord_turn, outer_faces, Frame};
use crate::rational::{q, qi, Q};
use std::collections::HashMap;

/// Slide β₁ (through `target`) over β₂ (through `over`) along a band inside `face`.
///
/// Both darts are backward β darts of the face, on different β curves. The band
/// runs from the arc of `target` to the arc of `over` without meeting α.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlideSite {
    pub face: usize,
    pub target: Dart,
    pub over: Dart,
}

#[derive(Clone, Debug)]
pub struct Slide {
    pub diagram: Diagram,
    /// index of β₁ and β₂
    pub target: usize,
    pub over: usize,
    /// the first crossing of β₂ met by the parallel copy, in the original diagram
    pub e: usize,
    /// c ↦ c⁺, crossings of β₂ to their copies on the new β₁ (indices in the new diagram)
    pub copies: Vec<(usize, usize)>,
}

/// Sites in inner faces only; a band next to the exterior point is not allowed.
pub fn slide_sites(d: &Diagram) -> Result<Vec<SlideSite>> {
    let faces = d.faces();
    let outer = outer_faces(d, &faces)?;
    let mut out = Vec::new();
    for f in 0..faces.len() {
        if outer.contains(&f) {
            continue;
        }
        let bw: Vec<Dart> = faces
            .darts(f)
            .iter()
            .copied()
            .filter(|x| x.kind == Kind::Beta && !x.forward)
            .collect();
        for &x in &bw {
            for &y in &bw {
                if d.beta_of(x.start) != d.beta_of(y.start) {
                    out.push(SlideSite {
                        face: f,
                        target: x,
                        over: y,
                    });
                }
            }
        }
    }
    Ok(out)
}

pub fn handle_slide_beta(d: &Diagram, site: &SlideSite) -> Result<Slide> {
    let faces = d.faces();
    let outer = outer_faces(d, &faces)?;
    let valid = site.face < faces.len()
        && !outer.contains(&site.face)
        && site.target.kind == Kind::Beta
        && site.over.kind == Kind::Beta
        && !site.target.forward
        && !site.over.forward
        && faces.face_of(site.target) == site.face
        && faces.face_of(site.over) == site.face
        && d.beta_of(site.target.start) != d.beta_of(site.over.start);
    if !valid {
        return Err(Error::InvalidSite(
            "slide needs two backward β darts of different curves in an inner face".into(),
        ));
    }
    let frame = Frame::new(d, &faces, site.face, 0)?;
    let ch = chord_turn(frame.port(d, site.target)?, frame.port(d, site.over)?);
    if ch % 2 != 0 {
        return Err(Error::InvalidSite("band chord has odd turning".into()));
    }
    let (v1, v2) = (site.target.start, site.over.start);
    let (j1, j2) = (d.beta_of(v1), d.beta_of(v2));
    let mut namer = Namer::new(d, "s");
    let plus: HashMap<usize, String> = d.beta(j2).iter().map(|&c| (c, namer.fresh())).collect();
    let mut spec = d.to_spec();
    for (i, list) in spec.alpha.iter_mut().enumerate() {
        let mut out = Vec::with_capacity(list.len());
        for &c in d.alpha(i) {
            match plus.get(&c) {
                Some(p) if d.sign(c) < 0 => {
                    out.push(p.clone());
                    out.push(d.name(c).to_string());
                }
                Some(p) => {
                    out.push(d.name(c).to_string());
                    out.push(p.clone());
                }
                None => out.push(d.name(c).to_string()),
            }
        }
        *list = out;
    }
    let e = d.bsucc(v2);
    let seq = d.walk(Kind::Beta, e, v2);
    let t1 = d.turn(v1);
    let mut nb = Vec::new();
    for &c in d.beta(j1) {
        if c == v1 {
            nb.push(BetaEntry {
                id: d.name(c).to_string(),
                sign: d.sign(c),
                turn: d.turn(v2) + (ch - 2) / 2,
            });
            for &x in &seq {
                let turn = if x == v2 {
                    t1 + (-ch - 2) / 2
                } else {
                    d.turn(x)
                };
                nb.push(BetaEntry {
                    id: plus[&x].clone(),
                    sign: d.sign(x),
                    turn,
                });
            }
        } else {
            nb.push(BetaEntry {
                id: d.name(c).to_string(),
                sign: d.sign(c),
                turn: d.turn(c),
            });
        }
    }
    // the copy of m₂ sits at the other point of its circle: half a turn more on each side
    let m2 = d.matching()[j2];
    let k = nb
        .iter()
        .position(|b| b.id == plus[&m2])
        .expect("copy present");
    let len = nb.len();
    nb[(k + len - 1) % len].turn += 1;
    nb[k].turn += 1;
    spec.beta[j1] = nb;
    let diagram = Diagram::from_spec(&spec)?;
    let copies = d
        .beta(j2)
        .iter()
        .map(|&c| (c, diagram.crossing(&plus[&c]).expect("copy present")))
        .collect();
    Ok(Slide {
        diagram,
        target: j1,
        over: j2,
        e,
        copies,
    })
}

/// Predicted changes of ℓ₂, s_ℓ and e under a slide, from data of the original diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlideDeltas {
    pub ell2: Q,
    pub s_ell: Q,
    pub e: Q,
}

/// With e the first crossing after the band on β₂ and `[e,c|` closed at e, half at c:
///
/// * Δℓ₂ = Σ_{c∈β₂} Σ_{x∈[e,c|} σ(c)σ(x) J_{1,i(c)} J_{2,i(x)}
/// * Δs_ℓ = Σ_{x∈β₂} Σ_{c∈[e,x|} σ(c)σ(x) J_{1,i(c)} J_{2,i(x)} − Σ_{c∈[e,m₂|} σ(c) J_{1,i(c)}
/// * Δe = Σ_{c∈|m₂,e[} σ(c) J_{1,i(c)}, where |m₂,e[ is the complement of [e,m₂| in β₂
pub fn slide_deltas(d: &Diagram, site: &SlideSite) -> Result<SlideDeltas> {
    let j = d.inverse_intersection()?.q;
    let (j1, j2) = (d.beta_of(site.target.start), d.beta_of(site.over.start));
    let e = d.bsucc(site.over.start);
    let beta2 = d.walk(Kind::Beta, e, d.bpred(e));
    let sg = |c: usize| qi(d.sign(c) as i64);
    let j1c = |c: usize| j.get(j1, d.alpha_of(c)).clone();
    let j2c = |c: usize| j.get(j2, d.alpha_of(c)).clone();
    // weight of x in [e, c| by positions along β₂ starting at e
    let w = |x: usize, c: usize| -> Q {
        let (px, pc) = (
            beta2.iter().position(|&y| y == x).unwrap(),
            beta2.iter().position(|&y| y == c).unwrap(),
        );
        if px < pc {
            qi(1)
        } else if px == pc {
            q(1, 2)
        } else {
            qi(0)
        }
    };
    let mut ell2 = qi(0);
    let mut s_ell = qi(0);
    for &c in &beta2 {
        for &x in &beta2 {
            let wx = w(x, c);
            if wx != qi(0) {
                ell2 += &wx * sg(c) * sg(x) * j1c(c) * j2c(x);
                // the same weight read with the roles of the two slots exchanged
                s_ell += wx * sg(c) * sg(x) * j1c(x) * j2c(c);
            }
        }
    }
    let m2 = d.matching()[j2];
    let mut de = qi(0);
    for &c in &beta2 {
        let wc = w(c, m2);
        s_ell -= &wc * sg(c) * j1c(c);
        de += (qi(1) - wc) * sg(c) * j1c(c);
    }
    Ok(SlideDeltas { ell2, s_ell, e: de })
}
