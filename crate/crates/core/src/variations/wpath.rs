use crate::diagram::{Dart, Diagram, Faces, Kind};
use crate::error::{Error, Result};
use crate::invariants::{l_cycle, FlowCycle};
use crate::layout::{chord_sign, chord_turn, de_beta, outer_faces, Frame, Port};
use crate::rational::{q, qi, Q};
use std::collections::VecDeque;

/// The α-avoiding path crosses the β arc leaving `arc` (on β_j).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlphaHit {
    pub j: usize,
    pub arc: usize,
    pub sign: i8,
}

/// The β-avoiding path crosses the α arc leaving `arc` (on α_i).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BetaHit {
    pub i: usize,
    pub arc: usize,
    pub sign: i8,
}

/// A pair of paths [w,w′]_α and [w,w′]_β from the exterior point to a new region,
/// recorded by their crossings with the curves and their turning in the planar drawing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WPath {
    pub target_face: usize,
    pub alpha_hits: Vec<AlphaHit>,
    pub beta_hits: Vec<BetaHit>,
    pub de_alpha: Q,
    pub de_beta: Q,
    /// ⟨]w,w′[_α, ]w,w′[_β⟩
    pub mutual: i64,
}

fn bfs(d: &Diagram, faces: &Faces, from: usize, to: usize, through: Kind) -> Vec<Dart> {
    let mut prev: Vec<Option<(usize, Dart)>> = vec![None; faces.len()];
    let mut seen = vec![false; faces.len()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(f) = queue.pop_front() {
        if f == to {
            break;
        }
        for &x in faces.darts(f).iter().filter(|x| x.kind == through) {
            let g = faces.face_of(x.reversed());
            if !seen[g] {
                seen[g] = true;
                prev[g] = Some((f, x));
                queue.push_back(g);
            }
        }
    }
    let _ = d;
    let mut path = Vec::new();
    let mut f = to;
    while let Some((p, x)) = prev[f] {
        path.push(x);
        f = p;
    }
    path.reverse();
    path
}

type Chord = (usize, (Port, Port));

fn chords(
    d: &Diagram,
    faces: &Faces,
    frames: &[Frame],
    start: usize,
    exits: &[Dart],
    alpha_role: bool,
) -> Result<(Vec<Chord>, i64)> {
    let (g_in, g_out) = if alpha_role { (1, 0) } else { (0, 1) };
    let mut out = Vec::new();
    let mut cur = start;
    let mut p = frames[start].gate(g_in);
    for &x in exits {
        let q0 = frames[cur].port(d, x)?;
        out.push((cur, (p, q0)));
        cur = faces.face_of(x.reversed());
        p = frames[cur].port(d, x.reversed())?;
    }
    out.push((cur, (p, frames[cur].gate(g_out))));
    let turn = out.iter().map(|(_, (a, b))| chord_turn(*a, *b)).sum();
    Ok((out, turn))
}

impl WPath {
    pub fn empty(target_face: usize) -> WPath {
        WPath {
            target_face,
            alpha_hits: vec![],
            beta_hits: vec![],
            de_alpha: qi(0),
            de_beta: qi(0),
            mutual: 0,
        }
    }

    /// Shortest paths through the face graph from the outer face to `target`. The α path
    /// crosses only β arcs and the β path only α arcs. `gates[f]` fixes where paths meet
    /// the boundary of face f (any value gives the same variation).
    pub fn to_face(d: &Diagram, target: usize, gates: &[usize]) -> Result<WPath> {
        if !d.is_connected() {
            return Err(Error::InconsistentPath(
                "paths need a connected curve union".into(),
            ));
        }
        let faces = d.faces();
        if target >= faces.len() {
            return Err(Error::InconsistentPath(format!("no face {target}")));
        }
        let w = outer_faces(d, &faces)?[0];
        if target == w {
            return Ok(WPath::empty(w));
        }
        let frames = (0..faces.len())
            .map(|f| {
                Frame::new(
                    d,
                    &faces,
                    f,
                    gates.get(f).copied().unwrap_or(0) % faces.darts(f).len(),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        let alpha_exits = bfs(d, &faces, w, target, Kind::Beta);
        let beta_exits = bfs(d, &faces, w, target, Kind::Alpha);
        let (ac, at) = chords(d, &faces, &frames, w, &alpha_exits, true)?;
        let (bc, bt) = chords(d, &faces, &frames, w, &beta_exits, false)?;
        let mut mutual = 0;
        for (fa, ca) in &ac {
            for (fb, cb) in &bc {
                if fa == fb {
                    mutual += chord_sign(*ca, *cb);
                }
            }
        }
        let alpha_hits = alpha_exits
            .iter()
            .map(|x| AlphaHit {
                j: d.beta_of(x.start),
                arc: x.start,
                sign: if x.forward { 1 } else { -1 },
            })
            .collect();
        let beta_hits = beta_exits
            .iter()
            .map(|x| BetaHit {
                i: d.alpha_of(x.start),
                arc: x.start,
                sign: if x.forward { -1 } else { 1 },
            })
            .collect();
        Ok(WPath {
            target_face: target,
            alpha_hits,
            beta_hits,
            de_alpha: q(at, 4),
            de_beta: q(bt, 4),
            mutual,
        })
    }

    pub fn validate(&self, d: &Diagram) -> Result<()> {
        let g = d.genus();
        for h in &self.alpha_hits {
            if h.j >= g || h.arc >= d.n() || d.beta_of(h.arc) != h.j || h.sign.abs() != 1 {
                return Err(Error::InconsistentPath(format!("bad α-path hit {h:?}")));
            }
        }
        for h in &self.beta_hits {
            if h.i >= g || h.arc >= d.n() || d.alpha_of(h.arc) != h.i || h.sign.abs() != 1 {
                return Err(Error::InconsistentPath(format!("bad β-path hit {h:?}")));
            }
        }
        Ok(())
    }

    /// ⟨[w,w′]_α, β_j⟩ for every j.
    pub fn alpha_pairings(&self, g: usize) -> Vec<i64> {
        let mut v = vec![0; g];
        for h in &self.alpha_hits {
            v[h.j] += h.sign as i64;
        }
        v
    }

    /// ⟨α_i, [w,w′]_β⟩ for every i.
    pub fn beta_pairings(&self, g: usize) -> Vec<i64> {
        let mut v = vec![0; g];
        for h in &self.beta_hits {
            v[h.i] += h.sign as i64;
        }
        v
    }

    /// ⟨[w,w′]_α, X⟩ where X is the part of β(c) from `from` up to c: the arcs leaving
    /// the crossings of [from, c[.
    fn alpha_through(&self, d: &Diagram, from: usize, c: usize) -> i64 {
        let j = d.beta_of(c);
        let len = d.beta(j).len();
        let rel = |x: usize| (d.beta_pos(x) + len - d.beta_pos(from)) % len;
        let rc = rel(c);
        self.alpha_hits
            .iter()
            .filter(|h| h.j == j && rel(h.arc) < rc)
            .map(|h| h.sign as i64)
            .sum()
    }

    /// Hits and degrees added; the paths are followed one after the other.
    pub fn concat(&self, next: &WPath) -> WPath {
        WPath {
            target_face: next.target_face,
            alpha_hits: self
                .alpha_hits
                .iter()
                .chain(&next.alpha_hits)
                .copied()
                .collect(),
            beta_hits: self
                .beta_hits
                .iter()
                .chain(&next.beta_hits)
                .copied()
                .collect(),
            de_alpha: &self.de_alpha + &next.de_alpha,
            de_beta: &self.de_beta + &next.de_beta,
            mutual: self.mutual + next.mutual,
        }
    }
}

/// p₁(X(w′,m)) − p₁(X(w,m)) = 4d_e([w,w′]_α) − 4d_e([w,w′]_β)
/// + 4Σ J_ji ⟨α_i,[w,w′]_β⟩ d_e(β_j) + 4Σ J_ji ⟨α_i,[w,w′]_β⟩⟨[w,w′]_α,β_j⟩ − 4⟨]w,w′[_α, ]w,w′[_β⟩.
pub fn p1_prime_w(d: &Diagram, path: &WPath) -> Result<Q> {
    path.validate(d)?;
    let j = d.inverse_intersection()?.q;
    let g = d.genus();
    let a = path.alpha_pairings(g);
    let b = path.beta_pairings(g);
    let mut v = (&path.de_alpha - &path.de_beta) * qi(4) - qi(4 * path.mutual);
    for i in 0..g {
        if b[i] == 0 {
            continue;
        }
        for jj in 0..g {
            v += j.get(jj, i) * qi(4 * b[i]) * (de_beta(d, jj) + qi(a[jj]));
        }
    }
    Ok(v)
}

/// lk(K, L(w′,w)) = Σ_c k_c ⟨[w,w′]_α, [m_{j(c)}, c|_β⟩ − Σ_c k_c Σ_{i,j} J_ji ⟨α_i, [m_{j(c)}, c|_β⟩⟨[w,w′]_α, β_j⟩.
pub fn lk_with_l_w(d: &Diagram, k: &FlowCycle, path: &WPath) -> Result<Q> {
    k.check(d)?;
    path.validate(d)?;
    let j = d.inverse_intersection()?.q;
    let g = d.genus();
    let a = path.alpha_pairings(g);
    // Σ_j J_ji a_j, per i
    let ja: Vec<Q> = (0..g)
        .map(|i| (0..g).map(|jj| j.get(jj, i) * qi(a[jj])).sum())
        .collect();
    let mut v = qi(0);
    for c in 0..d.n() {
        if k.coeffs[c] == qi(0) {
            continue;
        }
        let m = d.matching()[d.beta_of(c)];
        let mut term = qi(path.alpha_through(d, m, c));
        // ⟨α_i, [m, c|_β⟩ in halves: m closed, c half, [c,c| = {c: ½}
        let mut x = m;
        loop {
            let w = if x == c { 1 } else { 2 };
            term -= &ja[d.alpha_of(x)] * q(d.sign(x) as i64 * w, 2);
            if x == c {
                break;
            }
            x = d.bsucc(x);
        }
        v += &k.coeffs[c] * term;
    }
    Ok(v)
}

/// Θ̃(D,w′,m) − Θ̃(D,w,m) = 2Σ_c J_{j(c)i(c)} σ(c) (Σ J_sr ⟨α_r,|m,c|_β⟩⟨[w,w′]_α,β_s⟩ − ⟨[w,w′]_α,|m,c|_β⟩).
pub fn theta_delta_w(d: &Diagram, path: &WPath) -> Result<Q> {
    path.validate(d)?;
    let j = d.inverse_intersection()?.q;
    let g = d.genus();
    let a = path.alpha_pairings(g);
    let ja: Vec<Q> = (0..g)
        .map(|r| (0..g).map(|s| j.get(s, r) * qi(a[s])).sum())
        .collect();
    let mut v = qi(0);
    for c in 0..d.n() {
        let jc = j.get(d.beta_of(c), d.alpha_of(c));
        if *jc == qi(0) {
            continue;
        }
        let m = d.matching()[d.beta_of(c)];
        let mut term = -qi(path.alpha_through(d, m, c));
        if m != c {
            let mut x = m;
            loop {
                let w = if x == m || x == c { 1 } else { 2 };
                term += &ja[d.alpha_of(x)] * q(d.sign(x) as i64 * w, 2);
                if x == c {
                    break;
                }
                x = d.bsucc(x);
            }
        }
        v += jc * qi(2 * d.sign(c) as i64) * term;
    }
    Ok(v)
}

/// The drawing seen from w′: every β arc crossed by the α path gains a full turn,
/// so that the region reached becomes the outer one.
pub fn redraw_for_w(d: &Diagram, path: &WPath) -> Result<Diagram> {
    path.validate(d)?;
    let mut turn = d.turns().to_vec();
    for h in &path.alpha_hits {
        turn[h.arc] += 4 * h.sign as i64;
    }
    Ok(d.with_turns(turn))
}

/// Both sides of the square relation at a crossing off the matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareRelation {
    /// p₁′(N) + p₁′(S) − p₁′(w) − p₁′(E), all measured from the outer face
    pub d1: Q,
    /// the same combination of lk(L(D,m), L(·, w₀))
    pub d2: Q,
    /// −8σ(d) J_{j(d)i(d)}
    pub expected: Q,
}

impl SquareRelation {
    pub fn holds(&self) -> bool {
        self.d1 == &self.d2 * qi(8) && self.d1 == self.expected
    }
}

pub fn square_relation_check(d: &Diagram, c: usize) -> Result<SquareRelation> {
    if d.is_matched(c) {
        return Err(Error::InvalidArgument(format!(
            "`{}` is matched",
            d.name(c)
        )));
    }
    let faces = d.faces();
    let quad = faces.around(d, c);
    let l = l_cycle(d)?;
    let gates = vec![0; faces.len()];
    let mut d1 = qi(0);
    let mut d2 = qi(0);
    for (f, s) in [(quad.n, 1), (quad.s, 1), (quad.w, -1), (quad.e, -1)] {
        let path = WPath::to_face(d, f, &gates)?;
        d1 += p1_prime_w(d, &path)? * qi(s);
        d2 += lk_with_l_w(d, &l, &path)? * qi(s);
    }
    let j = d.inverse_intersection()?.q;
    let expected = j.get(d.beta_of(c), d.alpha_of(c)) * qi(-8 * d.sign(c) as i64);
    Ok(SquareRelation { d1, d2, expected })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{example_d1, example_d2, example_s3};
    use crate::invariants::{theta_tilde, Summary};
    use crate::layout::check_drawing;
    use crate::moves::FuzzConfig;

    fn corpus() -> Vec<Diagram> {
        let mut v = vec![example_d1(), example_d2()];
        let cfg = FuzzConfig {
            steps: 10,
            ..FuzzConfig::default()
        };
        for seed in 0..6 {
            v.push(cfg.generate_from(&example_d1(), seed));
            v.push(cfg.generate_from(&example_d2(), seed));
            v.push(cfg.generate(seed));
        }
        v
    }

    #[test]
    fn w_change_laws() {
        for d in corpus() {
            let t0 = theta_tilde(&d).unwrap();
            let l = l_cycle(&d).unwrap();
            let nf = d.faces().len();
            for f in 0..nf {
                for gate in [0, 1] {
                    let path = WPath::to_face(&d, f, &vec![gate; nf]).unwrap();
                    let e = redraw_for_w(&d, &path).unwrap();
                    check_drawing(&e).unwrap();
                    assert_eq!(outer_faces(&e, &e.faces()).unwrap()[0], f);
                    let dt = theta_tilde(&e).unwrap() - &t0;
                    assert_eq!(theta_delta_w(&d, &path).unwrap(), dt, "face {f}");
                    assert_eq!(p1_prime_w(&d, &path).unwrap(), &dt * qi(4), "face {f}");
                    assert_eq!(
                        lk_with_l_w(&d, &l, &path).unwrap() * qi(8),
                        &dt * qi(4),
                        "face {f}"
                    );
                }
            }
        }
    }

    #[test]
    fn composition() {
        let d = example_d2();
        let nf = d.faces().len();
        let gates = vec![0; nf];
        for f in 0..nf {
            let p = WPath::to_face(&d, f, &gates).unwrap();
            let e = redraw_for_w(&d, &p).unwrap();
            for g in 0..e.faces().len() {
                let p2 = WPath::to_face(&e, g, &gates).unwrap();
                let both = p.concat(&p2);
                assert_eq!(
                    theta_delta_w(&d, &both).unwrap(),
                    theta_delta_w(&d, &p).unwrap() + theta_delta_w(&e, &p2).unwrap()
                );
            }
        }
    }

    #[test]
    fn square_relation() {
        let mut nonzero = 0;
        for d in corpus() {
            for c in (0..d.n()).filter(|&c| !d.is_matched(c)) {
                let s = square_relation_check(&d, c).unwrap();
                assert!(s.holds(), "{} {s:?}", d.name(c));
                nonzero += (s.expected != qi(0)) as usize;
            }
        }
        assert!(nonzero > 20, "{nonzero}");
    }

    #[test]
    fn s3_has_one_face_pair() {
        let d = example_s3();
        let s = Summary::of(&d).unwrap();
        assert_eq!(s.theta_tilde, qi(0));
        assert!(square_relation_check(&d, 0).is_err());
    }
}
