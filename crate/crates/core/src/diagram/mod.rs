//! Decorated Heegaard diagrams: combinatorics, validation and queries.

mod faces;
mod hdg;
mod matching;

pub use faces::{Dart, Faces, Kind, Quadrants};
pub use hdg::{parse_hdg, to_hdg};
pub use matching::find_matching_in;

use crate::error::{Error, Result};
use crate::linalg::{invert, IntMatrix, Inverse};
use std::collections::HashMap;

/// One entry of a β listing: crossing, sign, and half-turns of the arc leaving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaEntry {
    pub id: String,
    pub sign: i8,
    pub turn: i64,
}

/// Name-level description of a diagram; the input of [`Diagram::from_spec`].
///
/// An empty `matching` asks for [`find_matching_in`] to choose one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramSpec {
    pub genus: usize,
    pub alpha: Vec<Vec<String>>,
    pub beta: Vec<Vec<BetaEntry>>,
    pub matching: Vec<String>,
}

/// A validated decorated diagram. Crossings are indexed `0..n` in β-listing order.
#[derive(Clone, Debug)]
pub struct Diagram {
    genus: usize,
    names: Vec<String>,
    index: HashMap<String, usize>,
    alpha: Vec<Vec<usize>>,
    beta: Vec<Vec<usize>>,
    sign: Vec<i8>,
    turn: Vec<i64>,
    matching: Vec<usize>,
    ia: Vec<usize>,
    pa: Vec<usize>,
    jb: Vec<usize>,
    pb: Vec<usize>,
    matched: Vec<bool>,
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        self.to_spec() == other.to_spec()
    }
}

impl Eq for Diagram {}

impl Diagram {
    pub fn from_spec(spec: &DiagramSpec) -> Result<Diagram> {
        let g = spec.genus;
        if g == 0 {
            return Err(Error::InvalidArgument("genus must be positive".into()));
        }
        if spec.alpha.len() != g || spec.beta.len() != g {
            return Err(Error::InvalidArgument(format!(
                "expected {g} alpha and {g} beta curves, got {} and {}",
                spec.alpha.len(),
                spec.beta.len()
            )));
        }
        let mut names = Vec::new();
        let mut index = HashMap::new();
        let mut sign = Vec::new();
        let mut turn = Vec::new();
        let mut beta = Vec::with_capacity(g);
        for (j, b) in spec.beta.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidArgument(format!(
                    "beta {} has no crossings",
                    j + 1
                )));
            }
            let mut row = Vec::with_capacity(b.len());
            for e in b {
                if index.contains_key(&e.id) {
                    return Err(Error::DuplicateCrossing(e.id.clone()));
                }
                if e.sign != 1 && e.sign != -1 {
                    return Err(Error::InvalidArgument(format!(
                        "sign of `{}` must be +1 or -1",
                        e.id
                    )));
                }
                index.insert(e.id.clone(), names.len());
                row.push(names.len());
                names.push(e.id.clone());
                sign.push(e.sign);
                turn.push(e.turn);
            }
            beta.push(row);
        }
        let n = names.len();
        let mut seen = vec![false; n];
        let mut alpha = Vec::with_capacity(g);
        for (i, a) in spec.alpha.iter().enumerate() {
            if a.is_empty() {
                return Err(Error::InvalidArgument(format!(
                    "alpha {} has no crossings",
                    i + 1
                )));
            }
            let mut row = Vec::with_capacity(a.len());
            for id in a {
                let &c = index
                    .get(id)
                    .ok_or_else(|| Error::MissingCrossing(id.clone()))?;
                if seen[c] {
                    return Err(Error::DuplicateCrossing(id.clone()));
                }
                seen[c] = true;
                row.push(c);
            }
            alpha.push(row);
        }
        if let Some(c) = seen.iter().position(|s| !s) {
            return Err(Error::MissingCrossing(names[c].clone()));
        }
        let mut d = Diagram {
            genus: g,
            names,
            index,
            alpha,
            beta,
            sign,
            turn,
            matching: Vec::new(),
            ia: vec![0; n],
            pa: vec![0; n],
            jb: vec![0; n],
            pb: vec![0; n],
            matched: vec![false; n],
        };
        for (i, a) in d.alpha.iter().enumerate() {
            for (k, &c) in a.iter().enumerate() {
                d.ia[c] = i;
                d.pa[c] = k;
            }
        }
        for (j, b) in d.beta.iter().enumerate() {
            for (k, &c) in b.iter().enumerate() {
                d.jb[c] = j;
                d.pb[c] = k;
            }
        }
        let matching = if spec.matching.is_empty() {
            find_matching_in(g, &d.beta, &d.ia)?
        } else {
            let mut m = Vec::with_capacity(spec.matching.len());
            for id in &spec.matching {
                let &c = d
                    .index
                    .get(id)
                    .ok_or_else(|| Error::InvalidMatching(format!("unknown crossing `{id}`")))?;
                m.push(c);
            }
            m
        };
        d.set_matching(matching)?;
        d.check_euler()?;
        Ok(d)
    }

    fn set_matching(&mut self, m: Vec<usize>) -> Result<()> {
        let g = self.genus;
        if m.len() != g {
            return Err(Error::InvalidMatching(format!(
                "expected {g} crossings, got {}",
                m.len()
            )));
        }
        let mut used = vec![false; g];
        for (j, &c) in m.iter().enumerate() {
            if self.jb[c] != j {
                return Err(Error::InvalidMatching(format!(
                    "entry {} (`{}`) is not on beta {}",
                    j + 1,
                    self.names[c],
                    j + 1
                )));
            }
            if std::mem::replace(&mut used[self.ia[c]], true) {
                return Err(Error::InvalidMatching(format!(
                    "two matched crossings on alpha {}",
                    self.ia[c] + 1
                )));
            }
        }
        self.matched = vec![false; self.names.len()];
        for &c in &m {
            self.matched[c] = true;
        }
        self.matching = m;
        Ok(())
    }

    fn check_euler(&self) -> Result<()> {
        let v = self.n() as i64;
        let f = self.faces().len() as i64;
        let k = self.components().1 as i64;
        let got = v - 2 * v + f;
        let expected = 2 * k - 2 * self.genus as i64;
        if got != expected {
            return Err(Error::EulerCheckFailed { got, expected });
        }
        Ok(())
    }

    pub fn to_spec(&self) -> DiagramSpec {
        DiagramSpec {
            genus: self.genus,
            alpha: self
                .alpha
                .iter()
                .map(|a| a.iter().map(|&c| self.names[c].clone()).collect())
                .collect(),
            beta: self
                .beta
                .iter()
                .map(|b| {
                    b.iter()
                        .map(|&c| BetaEntry {
                            id: self.names[c].clone(),
                            sign: self.sign[c],
                            turn: self.turn[c],
                        })
                        .collect()
                })
                .collect(),
            matching: self
                .matching
                .iter()
                .map(|&c| self.names[c].clone())
                .collect(),
        }
    }

    /// Same diagram with new arc turnings (indexed by the arc's start crossing).
    pub fn with_turns(&self, turn: Vec<i64>) -> Diagram {
        assert_eq!(turn.len(), self.n());
        let mut d = self.clone();
        d.turn = turn;
        d
    }

    /// Same curves and layout with another matching; turnings are not adjusted.
    pub fn with_matching(&self, m: Vec<usize>) -> Result<Diagram> {
        let mut d = self.clone();
        d.set_matching(m)?;
        Ok(d)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }
    pub fn n(&self) -> usize {
        self.names.len()
    }
    pub fn name(&self, c: usize) -> &str {
        &self.names[c]
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }
    pub fn crossing(&self, id: &str) -> Result<usize> {
        self.index_of(id)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown crossing `{id}`")))
    }
    pub fn alpha(&self, i: usize) -> &[usize] {
        &self.alpha[i]
    }
    pub fn beta(&self, j: usize) -> &[usize] {
        &self.beta[j]
    }
    pub fn sign(&self, c: usize) -> i8 {
        self.sign[c]
    }
    pub fn turn(&self, c: usize) -> i64 {
        self.turn[c]
    }
    pub fn turns(&self) -> &[i64] {
        &self.turn
    }
    pub fn matching(&self) -> &[usize] {
        &self.matching
    }
    pub fn is_matched(&self, c: usize) -> bool {
        self.matched[c]
    }
    /// i(c)
    pub fn alpha_of(&self, c: usize) -> usize {
        self.ia[c]
    }
    /// j(c)
    pub fn beta_of(&self, c: usize) -> usize {
        self.jb[c]
    }
    pub fn alpha_pos(&self, c: usize) -> usize {
        self.pa[c]
    }
    pub fn beta_pos(&self, c: usize) -> usize {
        self.pb[c]
    }
    /// The matched crossing lying on α_i.
    pub fn matched_on_alpha(&self, i: usize) -> usize {
        *self
            .matching
            .iter()
            .find(|&&c| self.ia[c] == i)
            .expect("matching covers every alpha")
    }
    pub fn asucc(&self, c: usize) -> usize {
        let a = &self.alpha[self.ia[c]];
        a[(self.pa[c] + 1) % a.len()]
    }
    pub fn apred(&self, c: usize) -> usize {
        let a = &self.alpha[self.ia[c]];
        a[(self.pa[c] + a.len() - 1) % a.len()]
    }
    pub fn bsucc(&self, c: usize) -> usize {
        let b = &self.beta[self.jb[c]];
        b[(self.pb[c] + 1) % b.len()]
    }
    pub fn bpred(&self, c: usize) -> usize {
        let b = &self.beta[self.jb[c]];
        b[(self.pb[c] + b.len() - 1) % b.len()]
    }

    /// Crossings from `from` to `to` inclusive along the curve through `from`.
    pub fn walk(&self, kind: Kind, from: usize, to: usize) -> Vec<usize> {
        let mut out = vec![from];
        let mut c = from;
        while c != to {
            c = match kind {
                Kind::Alpha => self.asucc(c),
                Kind::Beta => self.bsucc(c),
            };
            out.push(c);
        }
        out
    }

    /// Entry (j, i) is ⟨α_i, β_j⟩.
    pub fn intersection_matrix(&self) -> IntMatrix {
        let mut m = vec![vec![0i64; self.genus]; self.genus];
        for c in 0..self.n() {
            m[self.jb[c]][self.ia[c]] += self.sign[c] as i64;
        }
        IntMatrix::from_rows(&m)
    }

    /// J with `J.q.get(j, i)` = J_ji, so that Σ_i J_ji ⟨α_i, β_k⟩ = δ_jk.
    pub fn inverse_intersection(&self) -> Result<Inverse> {
        invert(&self.intersection_matrix().transpose())
    }

    /// Component label of every crossing in the union of all curves, and the component count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for c in 0..n {
            for d in [self.asucc(c), self.bsucc(c)] {
                let (a, b) = (find(&mut parent, c), find(&mut parent, d));
                parent[a] = b;
            }
        }
        let mut label = vec![usize::MAX; n];
        let mut roots = HashMap::new();
        for c in 0..n {
            let r = find(&mut parent, c);
            let k = roots.len();
            label[c] = *roots.entry(r).or_insert(k);
        }
        (label, roots.len())
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 == 1
    }

    pub fn faces(&self) -> Faces {
        Faces::new(self)
    }

    /// Any matching of this diagram, chosen deterministically from the input order.
    pub fn find_matching(&self) -> Result<Vec<usize>> {
        find_matching_in(self.genus, &self.beta, &self.ia)
    }

    /// Some matching, found with crossings tried in a shuffled order.
    pub fn random_matching<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Result<Vec<usize>> {
        use rand::seq::SliceRandom;
        let mut beta = self.beta.clone();
        for b in beta.iter_mut() {
            b.shuffle(rng);
        }
        find_matching_in(self.genus, &beta, &self.ia)
    }

    /// All matchings (used by tests and the m-change suite).
    pub fn all_matchings(&self) -> Vec<Vec<usize>> {
        let g = self.genus;
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(g);
        let mut used = vec![false; g];
        fn rec(
            d: &Diagram,
            j: usize,
            cur: &mut Vec<usize>,
            used: &mut [bool],
            out: &mut Vec<Vec<usize>>,
        ) {
            if j == d.genus {
                out.push(cur.clone());
                return;
            }
            for &c in &d.beta[j] {
                let i = d.ia[c];
                if !used[i] {
                    used[i] = true;
                    cur.push(c);
                    rec(d, j + 1, cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        rec(self, 0, &mut cur, &mut used, &mut out);
        out
    }

    /// Exchange the roles of α and β. This reverses the orientation of the surface, so crossing
    /// signs are kept, the intersection matrix is transposed and the picture is mirrored; the
    /// layout is re-solved with the same outer region.
    pub fn swap_roles(&self) -> Result<Diagram> {
        let faces = self.faces();
        let outer = crate::layout::outer_faces(self, &faces)?;
        let spec = DiagramSpec {
            genus: self.genus,
            alpha: self
                .beta
                .iter()
                .map(|b| b.iter().map(|&c| self.names[c].clone()).collect())
                .collect(),
            beta: self
                .alpha
                .iter()
                .map(|a| {
                    a.iter()
                        .map(|&c| BetaEntry {
                            id: self.names[c].clone(),
                            sign: self.sign[c],
                            turn: 0,
                        })
                        .collect()
                })
                .collect(),
            matching: {
                let mut m = vec![String::new(); self.genus];
                for &c in &self.matching {
                    m[self.ia[c]] = self.names[c].clone();
                }
                m
            },
        };
        let swapped = Diagram::from_spec(&spec)?;
        // Mirrored ribbon graph: a region left of a dart now lies left of the reversed dart.
        let new_faces = swapped.faces();
        let targets: Vec<usize> = outer
            .iter()
            .map(|&f| {
                let d = faces.darts(f)[0];
                let mapped = Dart {
                    kind: d.kind.other(),
                    start: swapped.crossing(&self.names[d.start]).expect("same names"),
                    forward: !d.forward,
                };
                new_faces.face_of(mapped)
            })
            .collect();
        let free = vec![true; swapped.n()];
        let turns = crate::layout::solve_turnings(&swapped, &new_faces, &targets, &free)?;
        Ok(swapped.with_turns(turns))
    }

    /// Mirror image: presents −M. Signs and turnings are negated, cyclic orders kept.
    pub fn reverse_orientation(&self) -> Diagram {
        let mut d = self.clone();
        for c in 0..d.n() {
            d.sign[c] = -d.sign[c];
            d.turn[c] = -d.turn[c];
        }
        d
    }
}

/// D₁: a genus-one diagram of RP³.
pub fn example_d1() -> Diagram {
    parse_hdg(EXAMPLE_D1).expect("built-in example parses")
}

/// D₂: a genus-two diagram with determinant 2.
pub fn example_d2() -> Diagram {
    parse_hdg(EXAMPLE_D2).expect("built-in example parses")
}

/// Genus-one diagram of S³ with a single positive crossing.
pub fn example_s3() -> Diagram {
    parse_hdg(EXAMPLE_S3).expect("built-in example parses")
}

pub const EXAMPLE_D1: &str = "\
# genus-one diagram of RP^3
genus 1
alpha 1: c d
beta 1: c:+:1 d:+:3
matching: c
";

pub const EXAMPLE_D2: &str = "\
# genus-two diagram, det 2
genus 2
alpha 1: c d
alpha 2: e f
beta 1: c:+:1 d:+:0 f:+:-1
beta 2: e:+:0
matching: c e
";

pub const EXAMPLE_S3: &str = "\
# genus-one diagram of S^3
genus 1
alpha 1: a
beta 1: a:+:0
matching: a
";

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn examples_parse_with_expected_shape() {
        let d1 = example_d1();
        assert_eq!((d1.genus(), d1.n()), (1, 2));
        assert_eq!(d1.intersection_matrix().to_rows_i64(), vec![vec![2]]);
        let s3 = example_s3();
        assert_eq!(s3.intersection_matrix().to_rows_i64(), vec![vec![1]]);
        let d2 = example_d2();
        let j = d2.inverse_intersection().unwrap().q;
        assert_eq!(
            (j.get(0, 0), j.get(0, 1), j.get(1, 0), j.get(1, 1)),
            (&q(1, 2), &q(0, 1), &q(-1, 2), &q(1, 1))
        );
    }

    #[test]
    fn j_inverts_the_pairing() {
        for d in [example_d1(), example_d2(), example_s3()] {
            let m = d.intersection_matrix();
            let j = d.inverse_intersection().unwrap().q;
            let g = d.genus();
            for jj in 0..g {
                for k in 0..g {
                    let mut s = q(0, 1);
                    for i in 0..g {
                        s += j.get(jj, i) * crate::rational::Q::from_integer(m.get(k, i).clone());
                    }
                    assert_eq!(s, q((jj == k) as i64, 1));
                }
            }
        }
    }

    #[test]
    fn matching_on_one_alpha_twice_is_rejected() {
        let text = "genus 2\nalpha 1: a b\nalpha 2: c\nbeta 1: a:+:0\nbeta 2: b:+:0 c:+:0\nmatching: a b\n";
        assert!(matches!(parse_hdg(text), Err(Error::InvalidMatching(_))));
    }

    #[test]
    fn swap_roles_transposes() {
        let d2 = example_d2();
        let s = d2.swap_roles().unwrap();
        let m = d2.intersection_matrix();
        let ms = s.intersection_matrix();
        for r in 0..2 {
            for c in 0..2 {
                assert_eq!(ms.get(r, c), m.get(c, r));
            }
        }
        let back = s.swap_roles().unwrap();
        assert_eq!(back.to_spec().alpha, d2.to_spec().alpha);
        assert_eq!(back.intersection_matrix(), m);
        assert_eq!(back.matching(), d2.matching());
    }

    #[test]
    fn reverse_is_an_involution() {
        let d = example_d2();
        assert_eq!(d.reverse_orientation().reverse_orientation(), d);
    }
}
