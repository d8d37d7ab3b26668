use super::Namer;
use crate::diagram::{BetaEntry, Dart, Diagram, DiagramSpec, Kind};
use crate::error::{Error, Result};
use crate::layout::{check_drawing, outer_faces, solve_turnings};
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::{HashMap, HashSet};

/// Juxtaposition of the two rectangles: curves of `b` are numbered after those of `a`,
/// crossings of `b` whose names clash are renamed. The result has two components.
pub fn connected_sum(a: &Diagram, b: &Diagram) -> Diagram {
    let mut spec = a.to_spec();
    let sb = b.to_spec();
    let mut taken: HashSet<String> = a.names().iter().chain(b.names()).cloned().collect();
    let mut rename = HashMap::new();
    let mut k = 1;
    for id in b.names() {
        let new = if a.index_of(id).is_some() {
            loop {
                let s = format!("{id}_{k}");
                k += 1;
                if taken.insert(s.clone()) {
                    break s;
                }
            }
        } else {
            id.clone()
        };
        rename.insert(id.clone(), new);
    }
    spec.genus += sb.genus;
    spec.alpha.extend(
        sb.alpha
            .iter()
            .map(|l| l.iter().map(|id| rename[id].clone()).collect()),
    );
    spec.beta.extend(sb.beta.iter().map(|l| {
        l.iter()
            .map(|e| BetaEntry {
                id: rename[&e.id].clone(),
                ..e.clone()
            })
            .collect()
    }));
    spec.matching
        .extend(sb.matching.iter().map(|id| rename[id].clone()));
    Diagram::from_spec(&spec).expect("a disjoint union of valid diagrams is valid")
}

/// Connected sum with the genus-one diagram of S³.
pub fn stabilize(d: &Diagram) -> Diagram {
    connected_sum(d, &crate::diagram::example_s3())
}

/// Make the curve union connected by finger moves: a β arc on the outer boundary of the
/// first component is pushed across an α arc on the outer boundary of another one.
/// This is an isotopy of the curves, so every invariant is unchanged.
pub fn join_components(d: &Diagram) -> Result<Diagram> {
    let mut d = d.clone();
    loop {
        let (label, k) = d.components();
        if k == 1 {
            return Ok(d);
        }
        d = join_once(&d, &label)?;
    }
}

fn join_once(d: &Diagram, label: &[usize]) -> Result<Diagram> {
    let faces = d.faces();
    let outer = outer_faces(d, &faces)?;
    let base = outer[0];
    let other = *outer
        .iter()
        .find(|&&f| label[faces.darts(f)[0].start] != 0)
        .expect("two components");
    let reference = *faces
        .darts(base)
        .iter()
        .find(|x| x.kind == Kind::Alpha)
        .expect("faces alternate");
    for &b in faces.darts(base).iter().filter(|x| x.kind == Kind::Beta) {
        for &a in faces.darts(other).iter().filter(|x| x.kind == Kind::Alpha) {
            if let Ok(joined) = finger(d, a, b, reference) {
                return Ok(joined);
            }
        }
    }
    Err(Error::LayoutInvalid(
        "components cannot be joined by a finger move".into(),
    ))
}

fn finger(d: &Diagram, a: Dart, b: Dart, reference: Dart) -> Result<Diagram> {
    let mut namer = Namer::new(d, "j");
    let (xn, yn) = (namer.fresh(), namer.fresh());
    let sx: i8 = if a.forward { -1 } else { 1 };
    let mut spec = d.to_spec();
    let i = d.alpha_of(a.start);
    let ka = d.alpha_pos(a.start);
    let ins = if a.forward != b.forward {
        [xn.clone(), yn.clone()]
    } else {
        [yn.clone(), xn.clone()]
    };
    spec.alpha[i].splice(ka + 1..ka + 1, ins);
    let j = d.beta_of(b.start);
    let kb = d.beta_pos(b.start);
    spec.beta[j].splice(
        kb + 1..kb + 1,
        [
            BetaEntry {
                id: xn.clone(),
                sign: sx,
                turn: 0,
            },
            BetaEntry {
                id: yn.clone(),
                sign: -sx,
                turn: 0,
            },
        ],
    );
    let joined = Diagram::from_spec(&spec)?;
    let faces = joined.faces();
    let r = Dart {
        start: joined.crossing(d.name(reference.start))?,
        ..reference
    };
    let mut free = vec![false; joined.n()];
    free[joined.crossing(d.name(b.start))?] = true;
    free[joined.crossing(&xn)?] = true;
    free[joined.crossing(&yn)?] = true;
    let turns = solve_turnings(&joined, &faces, &[faces.face_of(r)], &free)?;
    let out = joined.with_turns(turns);
    check_drawing(&out)?;
    Ok(out)
}

/// Renumber the curves, rotate the cyclic listings and rename every crossing.
pub fn relabel<R: Rng + ?Sized>(d: &Diagram, rng: &mut R) -> Diagram {
    let spec = d.to_spec();
    let g = spec.genus;
    let mut pa: Vec<usize> = (0..g).collect();
    let mut pb: Vec<usize> = (0..g).collect();
    pa.shuffle(rng);
    pb.shuffle(rng);
    let mut order: Vec<usize> = (0..d.n()).collect();
    order.shuffle(rng);
    let names: HashMap<String, String> = order
        .iter()
        .enumerate()
        .map(|(k, &c)| (d.name(c).to_string(), format!("r{}", k + 1)))
        .collect();
    let mut alpha = Vec::with_capacity(g);
    for &i in &pa {
        let mut l: Vec<String> = spec.alpha[i].iter().map(|id| names[id].clone()).collect();
        let r = rng.gen_range(0..l.len());
        l.rotate_left(r);
        alpha.push(l);
    }
    let mut beta = Vec::with_capacity(g);
    let mut matching = Vec::with_capacity(g);
    for &j in &pb {
        let mut l: Vec<BetaEntry> = spec.beta[j]
            .iter()
            .map(|e| BetaEntry {
                id: names[&e.id].clone(),
                ..e.clone()
            })
            .collect();
        let r = rng.gen_range(0..l.len());
        l.rotate_left(r);
        beta.push(l);
        matching.push(names[&spec.matching[j]].clone());
    }
    Diagram::from_spec(&DiagramSpec {
        genus: g,
        alpha,
        beta,
        matching,
    })
    .expect("relabeling keeps validity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{example_d1, example_d2, example_s3};
    use crate::invariants::Summary;
    use crate::rational::q;
    use rand::SeedableRng;

    #[test]
    fn sums_add() {
        let d1 = example_d1();
        let s = connected_sum(&d1, &d1);
        assert_eq!(s.genus(), 2);
        assert_eq!(Summary::of(&s).unwrap().theta_tilde, q(1, 2));
        let st = stabilize(&example_s3());
        let v = Summary::of(&st).unwrap();
        assert_eq!(
            (v.ell2, v.s_ell, v.e, v.theta_tilde),
            (q(0, 1), q(0, 1), q(0, 1), q(0, 1))
        );
    }

    #[test]
    fn joining_keeps_values() {
        for d in [example_d1(), example_d2(), example_s3()] {
            let s = stabilize(&d);
            let j = join_components(&s).unwrap();
            assert!(j.is_connected());
            let (a, b) = (Summary::of(&s).unwrap(), Summary::of(&j).unwrap());
            assert_eq!((a.ell2, a.s_ell, a.e), (b.ell2, b.s_ell, b.e));
        }
    }

    #[test]
    fn relabel_keeps_values() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let d = example_d2();
        let base = Summary::of(&d).unwrap();
        for _ in 0..10 {
            let r = relabel(&d, &mut rng);
            let v = Summary::of(&r).unwrap();
            assert_eq!(
                (&v.ell2, &v.s_ell, &v.e),
                (&base.ell2, &base.s_ell, &base.e)
            );
        }
    }
}
