use super::Namer;
use crate::diagram::{BetaEntry, Dart, Diagram, Kind};
use crate::error::{Error, Result};
use crate::layout::{chord_turn, outer_faces, Frame};
use crate::rational::{q, Q};

/// A finger of β pushed across α inside one face.
///
/// `alpha` and `beta` are darts of `face`; the new bigon sits between them. In the
/// outer face `gate` fixes on which side of the finger the exterior point stays.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BigonSite {
    pub face: usize,
    pub alpha: Dart,
    pub beta: Dart,
    pub gate: usize,
}

/// Whether the two new crossings are met first from the same end by α and β.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    SameStart,
    OppositeStart,
}

impl BigonSite {
    pub fn orientation(&self) -> Orientation {
        if self.alpha.forward != self.beta.forward {
            Orientation::SameStart
        } else {
            Orientation::OppositeStart
        }
    }
}

#[derive(Clone, Debug)]
pub struct BigonBirth {
    pub diagram: Diagram,
    /// the new crossings, first met along β
    pub x: usize,
    pub y: usize,
    pub i: usize,
    pub j: usize,
    pub orientation: Orientation,
}

/// All sites: every (α dart, β dart) pair of every face, with every gate in the outer faces.
pub fn bigon_sites(d: &Diagram) -> Result<Vec<BigonSite>> {
    let faces = d.faces();
    let outer = outer_faces(d, &faces)?;
    let mut out = Vec::new();
    for f in 0..faces.len() {
        let darts = faces.darts(f);
        let gates = if outer.contains(&f) { darts.len() } else { 1 };
        for &a in darts.iter().filter(|x| x.kind == Kind::Alpha) {
            for &b in darts.iter().filter(|x| x.kind == Kind::Beta) {
                for gate in 0..gates {
                    out.push(BigonSite {
                        face: f,
                        alpha: a,
                        beta: b,
                        gate,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Insert the bigon. The finger's three β arcs get their turnings from the chord from
/// the β dart to the α dart inside the face.
pub fn bigon_birth(d: &Diagram, site: &BigonSite) -> Result<BigonBirth> {
    let faces = d.faces();
    if site.face >= faces.len() || site.alpha.kind != Kind::Alpha || site.beta.kind != Kind::Beta {
        return Err(Error::InvalidSite(
            "bigon site needs an α dart and a β dart of one face".into(),
        ));
    }
    let frame = Frame::new(
        d,
        &faces,
        site.face,
        site.gate % faces.darts(site.face).len(),
    )?;
    let pb = frame.port(d, site.beta)?;
    let pa = frame.port(d, site.alpha)?;
    let ch = chord_turn(pb, pa);
    let c1 = if site.beta.forward { 1 } else { -1 };
    if (c1 + ch) % 2 != 0 {
        return Err(Error::InvalidSite("finger chord has odd turning".into()));
    }
    let mut namer = Namer::new(d, "b");
    let (xn, yn) = (namer.fresh(), namer.fresh());
    let sx: i8 = if site.alpha.forward { -1 } else { 1 };
    let orientation = site.orientation();
    let mut spec = d.to_spec();
    let i = d.alpha_of(site.alpha.start);
    let j = d.beta_of(site.beta.start);
    let ka = d.alpha_pos(site.alpha.start);
    let ins = if orientation == Orientation::SameStart {
        [xn.clone(), yn.clone()]
    } else {
        [yn.clone(), xn.clone()]
    };
    spec.alpha[i].splice(ka + 1..ka + 1, ins);
    let kb = d.beta_pos(site.beta.start);
    let t = d.turn(site.beta.start);
    spec.beta[j][kb].turn = (c1 + ch) / 2;
    spec.beta[j].splice(
        kb + 1..kb + 1,
        [
            BetaEntry {
                id: xn.clone(),
                sign: sx,
                turn: -c1,
            },
            BetaEntry {
                id: yn.clone(),
                sign: -sx,
                turn: t + (c1 - ch) / 2,
            },
        ],
    );
    let diagram = Diagram::from_spec(&spec)?;
    let x = diagram.crossing(&xn)?;
    let y = diagram.crossing(&yn)?;
    Ok(BigonBirth {
        diagram,
        x,
        y,
        i,
        j,
        orientation,
    })
}

/// Predicted change of both ℓ₂ and e: +J_ji/2 for same-start bigons, −J_ji/2 otherwise.
pub fn bigon_delta(d: &Diagram, site: &BigonSite) -> Result<Q> {
    let j = d.inverse_intersection()?.q;
    let v = j.get(d.beta_of(site.beta.start), d.alpha_of(site.alpha.start)) * q(1, 2);
    Ok(match site.orientation() {
        Orientation::SameStart => v,
        Orientation::OppositeStart => -v,
    })
}

/// Faces that are removable bigons: one α and one β side, inner, both corners unmatched,
/// and removing them leaves every curve nonempty.
pub fn death_sites(d: &Diagram) -> Result<Vec<usize>> {
    let faces = d.faces();
    let outer = outer_faces(d, &faces)?;
    let mut out = Vec::new();
    for f in 0..faces.len() {
        if outer.contains(&f) {
            continue;
        }
        let darts = faces.darts(f);
        if darts.len() != 2 {
            continue;
        }
        let b = match darts.iter().find(|x| x.kind == Kind::Beta) {
            Some(&b) => b,
            None => continue,
        };
        let x = b.start;
        let y = d.bsucc(x);
        if x == y || d.is_matched(x) || d.is_matched(y) {
            continue;
        }
        if d.beta(d.beta_of(x)).len() <= 2 || d.alpha(d.alpha_of(x)).len() <= 2 {
            continue;
        }
        out.push(f);
    }
    Ok(out)
}

/// Remove the bigon `face`; the three β arcs through it merge into one.
pub fn bigon_death(d: &Diagram, face: usize) -> Result<Diagram> {
    if !death_sites(d)?.contains(&face) {
        return Err(Error::InvalidSite("face is not a removable bigon".into()));
    }
    let faces = d.faces();
    let b = *faces
        .darts(face)
        .iter()
        .find(|x| x.kind == Kind::Beta)
        .expect("checked");
    let x = b.start;
    let y = d.bsucc(x);
    let prev = d.bpred(x);
    let mut spec = d.to_spec();
    let j = d.beta_of(x);
    let merged = d.turn(prev) + d.turn(x) + d.turn(y);
    let (xn, yn) = (d.name(x).to_string(), d.name(y).to_string());
    for e in spec.beta[j].iter_mut() {
        if e.id == d.name(prev) {
            e.turn = merged;
        }
    }
    spec.beta[j].retain(|e| e.id != xn && e.id != yn);
    let i = d.alpha_of(x);
    spec.alpha[i].retain(|id| *id != xn && *id != yn);
    Diagram::from_spec(&spec)
}
