use crate::diagram::{Dart, Diagram, Faces, Kind};
use crate::error::{Error, Result};

/// Horizontal direction of β at a crossing, in quarter turns: 0 east, 2 west.
pub fn dir(d: &Diagram, c: usize) -> i64 {
    if (d.sign(c) > 0) != d.is_matched(c) {
        0
    } else {
        2
    }
}

/// Turning of a dart in quarter turns, its tangent directions (mod 4) at both ends,
/// and the circle copy (1 = α′, 2 = α″) it starts and ends on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DartGeometry {
    pub turning: i64,
    pub start_tangent: i64,
    pub end_tangent: i64,
    pub start_copy: u8,
    pub end_copy: u8,
}

pub fn dart_geometry(d: &Diagram, x: Dart) -> DartGeometry {
    match x.kind {
        Kind::Beta => {
            let c = x.start;
            let n = d.bsucc(c);
            let t = 2 * d.turn(c);
            // β leaves through α″ at a positive crossing and arrives through α′
            let sc = if d.sign(c) > 0 { 2 } else { 1 };
            let ec = if d.sign(n) > 0 { 1 } else { 2 };
            if x.forward {
                DartGeometry {
                    turning: t,
                    start_tangent: dir(d, c),
                    end_tangent: (dir(d, c) + t).rem_euclid(4),
                    start_copy: sc,
                    end_copy: ec,
                }
            } else {
                DartGeometry {
                    turning: -t,
                    start_tangent: (dir(d, n) + 2) % 4,
                    end_tangent: (dir(d, c) + 2) % 4,
                    start_copy: ec,
                    end_copy: sc,
                }
            }
        }
        Kind::Alpha => {
            let u = x.start;
            let v = d.asucc(u);
            let t = -2 * (d.is_matched(u) as i64 + d.is_matched(v) as i64);
            if x.forward {
                let tg = |c| if d.is_matched(c) { 1 } else { 3 };
                DartGeometry {
                    turning: t,
                    start_tangent: tg(u),
                    end_tangent: tg(v),
                    start_copy: 2,
                    end_copy: 2,
                }
            } else {
                let tg = |c| if d.is_matched(c) { 3 } else { 1 };
                DartGeometry {
                    turning: t,
                    start_tangent: tg(v),
                    end_tangent: tg(u),
                    start_copy: 1,
                    end_copy: 1,
                }
            }
        }
    }
}

/// Exterior angle between consecutive darts of a face: +1 for a left quarter turn, −1 for a right one.
pub fn corner(prev: &DartGeometry, next: &DartGeometry) -> Result<i64> {
    if prev.end_copy != next.start_copy {
        return Err(Error::LayoutInvalid(
            "β arc attaches to the wrong copy of an α circle".into(),
        ));
    }
    match (next.start_tangent - prev.end_tangent).rem_euclid(4) {
        1 => Ok(1),
        3 => Ok(-1),
        _ => Err(Error::LayoutInvalid(
            "consecutive boundary arcs are not transverse".into(),
        )),
    }
}

/// Total turning of a face boundary in quarter turns: 4 for a disk, −4 for the outer region.
pub fn face_total(d: &Diagram, darts: &[Dart]) -> Result<i64> {
    let geo: Vec<DartGeometry> = darts.iter().map(|&x| dart_geometry(d, x)).collect();
    let mut total = 0;
    for k in 0..geo.len() {
        total += geo[k].turning + corner(&geo[k], &geo[(k + 1) % geo.len()])?;
    }
    Ok(total)
}

pub fn face_totals(d: &Diagram, faces: &Faces) -> Result<Vec<i64>> {
    faces.iter().map(|f| face_total(d, f)).collect()
}

fn check_parity(d: &Diagram) -> Result<()> {
    for c in 0..d.n() {
        if (dir(d, c) + 2 * d.turn(c)).rem_euclid(4) != dir(d, d.bsucc(c)) {
            return Err(Error::LayoutInvalid(format!(
                "turning {} after `{}` does not reach the horizontal direction required at `{}`",
                d.turn(c),
                d.name(c),
                d.name(d.bsucc(c))
            )));
        }
    }
    Ok(())
}

/// The outer face of every connected component (ordered by component label), after
/// checking that the turnings describe a planar drawing: every face bounds a disk
/// (total +4) except exactly one outer face per component (total −4).
pub fn outer_faces(d: &Diagram, faces: &Faces) -> Result<Vec<usize>> {
    check_parity(d)?;
    let totals = face_totals(d, faces)?;
    let (label, k) = d.components();
    let mut outer = vec![usize::MAX; k];
    for (f, &t) in totals.iter().enumerate() {
        let comp = label[faces.darts(f)[0].start];
        match t {
            4 => {}
            -4 if outer[comp] == usize::MAX => outer[comp] = f,
            _ => {
                return Err(Error::LayoutInvalid(format!(
                    "a face has total turning {t}/4 of a turn"
                )));
            }
        }
    }
    if outer.contains(&usize::MAX) {
        return Err(Error::LayoutInvalid("a component has no outer face".into()));
    }
    Ok(outer)
}

pub fn check_drawing(d: &Diagram) -> Result<()> {
    outer_faces(d, &d.faces()).map(|_| ())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{example_d1, example_d2, example_s3};

    #[test]
    fn examples_are_drawings() {
        for d in [example_d1(), example_d2(), example_s3()] {
            let f = d.faces();
            let outer = outer_faces(&d, &f).unwrap();
            assert_eq!(outer.len(), 1);
            let totals = face_totals(&d, &f).unwrap();
            assert_eq!(totals.iter().sum::<i64>(), 4 * (f.len() as i64 - 2));
        }
    }

    #[test]
    fn shifting_one_arc_breaks_the_drawing() {
        let d = example_d1();
        let mut t = d.turns().to_vec();
        t[0] += 2;
        assert!(check_drawing(&d.with_turns(t)).is_err());
    }
}
