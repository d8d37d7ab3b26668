//! Ribbon-graph faces of the curve union.
//!
//! Rotation at a crossing, counterclockwise: (α-out, β-out, α-in, β-in) when σ = +1,
//! (α-out, β-in, α-in, β-out) when σ = −1. A face is traced by leaving each vertex
//! through the half-edge clockwise-next to the arriving one, so faces lie to the left.

use super::Diagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Alpha,
    Beta,
}

impl Kind {
    pub fn other(self) -> Kind {
        match self {
            Kind::Alpha => Kind::Beta,
            Kind::Beta => Kind::Alpha,
        }
    }
}

/// An oriented edge: the arc from `start` to its successor on the curve,
/// traversed forward or backward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub kind: Kind,
    pub start: usize,
    pub forward: bool,
}

impl Dart {
    pub fn new(kind: Kind, start: usize, forward: bool) -> Dart {
        Dart {
            kind,
            start,
            forward,
        }
    }

    pub fn reversed(self) -> Dart {
        Dart {
            forward: !self.forward,
            ..self
        }
    }

    pub fn id(self) -> usize {
        4 * self.start + 2 * (self.kind == Kind::Beta) as usize + (!self.forward) as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Half {
    AlphaOut,
    AlphaIn,
    BetaOut,
    BetaIn,
}

fn rotation(sign: i8) -> [Half; 4] {
    use Half::*;
    if sign > 0 {
        [AlphaOut, BetaOut, AlphaIn, BetaIn]
    } else {
        [AlphaOut, BetaIn, AlphaIn, BetaOut]
    }
}

fn head(d: &Diagram, x: Dart) -> (usize, Half) {
    match (x.kind, x.forward) {
        (Kind::Alpha, true) => (d.asucc(x.start), Half::AlphaIn),
        (Kind::Alpha, false) => (x.start, Half::AlphaOut),
        (Kind::Beta, true) => (d.bsucc(x.start), Half::BetaIn),
        (Kind::Beta, false) => (x.start, Half::BetaOut),
    }
}

fn leave(d: &Diagram, v: usize, h: Half) -> Dart {
    match h {
        Half::AlphaOut => Dart::new(Kind::Alpha, v, true),
        Half::AlphaIn => Dart::new(Kind::Alpha, d.apred(v), false),
        Half::BetaOut => Dart::new(Kind::Beta, v, true),
        Half::BetaIn => Dart::new(Kind::Beta, d.bpred(v), false),
    }
}

/// The dart following `x` along the boundary of its face.
pub(crate) fn next_dart(d: &Diagram, x: Dart) -> Dart {
    let (v, h) = head(d, x);
    let rot = rotation(d.sign(v));
    let k = rot
        .iter()
        .position(|&r| r == h)
        .expect("half-edge in rotation");
    leave(d, v, rot[(k + 3) % 4])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Quadrants {
    pub n: usize,
    pub w: usize,
    pub s: usize,
    pub e: usize,
}

#[derive(Clone, Debug)]
pub struct Faces {
    faces: Vec<Vec<Dart>>,
    /// (face, position) per dart id
    loc: Vec<(usize, usize)>,
}

impl Faces {
    pub fn new(d: &Diagram) -> Faces {
        let total = 4 * d.n();
        let mut loc = vec![(usize::MAX, 0); total];
        let mut faces = Vec::new();
        for c in 0..d.n() {
            for kind in [Kind::Alpha, Kind::Beta] {
                for forward in [true, false] {
                    let first = Dart::new(kind, c, forward);
                    if loc[first.id()].0 != usize::MAX {
                        continue;
                    }
                    let f = faces.len();
                    let mut orbit = Vec::new();
                    let mut x = first;
                    while loc[x.id()].0 == usize::MAX {
                        loc[x.id()] = (f, orbit.len());
                        orbit.push(x);
                        x = next_dart(d, x);
                    }
                    faces.push(orbit);
                }
            }
        }
        Faces { faces, loc }
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn darts(&self, f: usize) -> &[Dart] {
        &self.faces[f]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Dart]> {
        self.faces.iter().map(|v| v.as_slice())
    }

    pub fn face_of(&self, x: Dart) -> usize {
        self.loc[x.id()].0
    }

    pub fn position(&self, x: Dart) -> usize {
        self.loc[x.id()].1
    }

    /// The four regions at a crossing, named with α heading south:
    /// `n` left of α before the crossing, `w` right before, `s` right after, `e` left after.
    pub fn around(&self, d: &Diagram, c: usize) -> Quadrants {
        let p = d.apred(c);
        Quadrants {
            n: self.face_of(Dart::new(Kind::Alpha, p, true)),
            w: self.face_of(Dart::new(Kind::Alpha, p, false)),
            s: self.face_of(Dart::new(Kind::Alpha, c, false)),
            e: self.face_of(Dart::new(Kind::Alpha, c, true)),
        }
    }
}
