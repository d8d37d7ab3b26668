//! Cumulative boundary turning inside one face, used to draw chords across it.

use super::model::{corner, dart_geometry};
use crate::diagram::{Dart, Diagram, Faces, Kind};
use crate::error::{Error, Result};
use std::collections::HashMap;

/// A point on a face boundary: `key` orders points along the boundary starting at the
/// gate, `cum` is the boundary turning (quarter turns) accumulated up to that point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Port {
    pub key: i64,
    pub cum: i64,
}

/// The boundary of a face read from a chosen gate position.
///
/// The gate sits just before dart `gate` and stands for where a path enters or leaves
/// the face; in the outer face it marks the side of the puncture w.
#[derive(Clone, Debug)]
pub struct Frame {
    darts: Vec<Dart>,
    cum: Vec<i64>,
    pos: HashMap<Dart, usize>,
}

impl Frame {
    pub fn new(d: &Diagram, faces: &Faces, face: usize, gate: usize) -> Result<Frame> {
        let orbit = faces.darts(face);
        let k = orbit.len();
        let darts: Vec<Dart> = (0..k).map(|s| orbit[(gate + s) % k]).collect();
        let geo: Vec<_> = darts.iter().map(|&x| dart_geometry(d, x)).collect();
        let mut cum = vec![0; k];
        let mut acc = 0;
        for s in 0..k {
            cum[s] = acc;
            acc += geo[s].turning;
            if s + 1 < k {
                acc += corner(&geo[s], &geo[s + 1])?;
            }
        }
        let pos = darts.iter().enumerate().map(|(s, &x)| (x, s)).collect();
        Ok(Frame { darts, cum, pos })
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Where a chord meets dart `x`: near the arc start on β darts, and near the
    /// unmatched end (the downward point of the circle) on α darts.
    pub fn port(&self, d: &Diagram, x: Dart) -> Result<Port> {
        let &s = self
            .pos
            .get(&x)
            .ok_or_else(|| Error::InvalidSite("dart is not on this face".into()))?;
        let t = dart_geometry(d, x).turning;
        let base = 10 * s as i64;
        let (near_start, near_end) = (
            Port {
                key: base + 1,
                cum: self.cum[s],
            },
            Port {
                key: base + 9,
                cum: self.cum[s] + t,
            },
        );
        let p = match x.kind {
            Kind::Beta => {
                if x.forward {
                    near_start
                } else {
                    near_end
                }
            }
            Kind::Alpha => {
                let u_free = !d.is_matched(x.start);
                let v_free = !d.is_matched(d.asucc(x.start));
                if u_free {
                    if x.forward {
                        near_start
                    } else {
                        near_end
                    }
                } else if v_free {
                    if x.forward {
                        near_end
                    } else {
                        near_start
                    }
                } else {
                    Port {
                        key: base + 5,
                        cum: self.cum[s] + t / 2,
                    }
                }
            }
        };
        Ok(p)
    }

    /// The gate as an end point: `which` separates two paths using the same gate.
    pub fn gate(&self, which: u8) -> Port {
        Port {
            key: 10 * self.darts.len() as i64 + which as i64,
            cum: 4,
        }
    }
}

/// Turning (quarter turns) of a chord drawn inside the face from port `p` to port `q`,
/// so that it closes with the boundary from `q` forward to `p` into a disk.
pub fn chord_turn(p: Port, q: Port) -> i64 {
    let tb = if p.key > q.key {
        p.cum - q.cum
    } else {
        p.cum - q.cum + 4
    };
    2 - tb
}

/// Signed crossing number of two chords of the same face: +1 when the second chord
/// starts inside the arc (P₁, Q₁) and ends outside, −1 for the reverse, 0 if disjoint.
pub fn chord_sign(a: (Port, Port), b: (Port, Port)) -> i64 {
    let inside = |x: i64, lo: i64, hi: i64| {
        if lo < hi {
            lo < x && x < hi
        } else {
            x > lo || x < hi
        }
    };
    let p2 = inside(b.0.key, a.0.key, a.1.key);
    let q2 = inside(b.1.key, a.0.key, a.1.key);
    match (p2, q2) {
        (true, false) => 1,
        (false, true) => -1,
        _ => 0,
    }
}
