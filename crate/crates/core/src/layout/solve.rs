use super::model::{dir, face_totals};
use crate::diagram::{Dart, Diagram, Faces, Kind};
use crate::error::{Error, Result};
use std::collections::VecDeque;

/// Choose turnings for the arcs marked `free` so that the faces in `outer` total −4
/// quarter turns and every other face +4. Arcs that are not free keep their turning.
///
/// A free arc gets the smallest turning compatible with the horizontal directions at its
/// ends plus an even correction 2u. Raising u by one adds a full turn to the face left
/// of the arc and removes one from the face on its right, so the corrections form a flow
/// on the dual graph, solved on a spanning forest.
pub fn solve_turnings(
    d: &Diagram,
    faces: &Faces,
    outer: &[usize],
    free: &[bool],
) -> Result<Vec<i64>> {
    let n = d.n();
    let mut turn = d.turns().to_vec();
    for c in 0..n {
        if free[c] {
            turn[c] = ((dir(d, d.bsucc(c)) - dir(d, c)) / 2).rem_euclid(2);
        }
    }
    let base = d.with_turns(turn.clone());
    let totals = face_totals(&base, faces)?;
    let nf = faces.len();
    let mut residual = vec![0i64; nf];
    for f in 0..nf {
        let target = if outer.contains(&f) { -4 } else { 4 };
        let diff = target - totals[f];
        if diff % 4 != 0 {
            return Err(Error::LayoutInvalid(
                "face turning cannot be corrected by full turns".into(),
            ));
        }
        residual[f] = diff / 4;
    }
    // dual edges: arc c joins the face of its forward dart (left) and of its backward dart (right)
    let left = |c: usize| faces.face_of(Dart::new(Kind::Beta, c, true));
    let right = |c: usize| faces.face_of(Dart::new(Kind::Beta, c, false));
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nf];
    for c in (0..n).filter(|&c| free[c]) {
        let (l, r) = (left(c), right(c));
        if l != r {
            adj[l].push(c);
            adj[r].push(c);
        }
    }
    let mut u = vec![0i64; n];
    let mut seen = vec![false; nf];
    for root in 0..nf {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut order = vec![root];
        let mut parent_edge = vec![usize::MAX; nf];
        let mut queue = VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            for &c in &adj[f] {
                let g = if left(c) == f { right(c) } else { left(c) };
                if !seen[g] {
                    seen[g] = true;
                    parent_edge[g] = c;
                    order.push(g);
                    queue.push_back(g);
                }
            }
        }
        for &f in order.iter().rev() {
            let need = residual[f];
            if f == root {
                if need != 0 {
                    return Err(Error::LayoutInvalid(
                        "face turnings cannot be balanced".into(),
                    ));
                }
                continue;
            }
            let c = parent_edge[f];
            let (p, val) = if left(c) == f {
                (right(c), need)
            } else {
                (left(c), -need)
            };
            u[c] = val;
            residual[f] = 0;
            // the same correction moves the opposite amount into the parent face
            residual[p] += need;
        }
    }
    for c in 0..n {
        if free[c] {
            turn[c] += 2 * u[c];
        }
    }
    Ok(turn)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{example_d1, example_d2};
    use crate::layout::{check_drawing, outer_faces};

    #[test]
    fn recovers_a_valid_drawing() {
        for d in [example_d1(), example_d2()] {
            let f = d.faces();
            let outer = outer_faces(&d, &f).unwrap();
            let t = solve_turnings(&d, &f, &outer, &vec![true; d.n()]).unwrap();
            let e = d.with_turns(t);
            check_drawing(&e).unwrap();
            assert_eq!(outer_faces(&e, &f).unwrap(), outer);
        }
    }
}
