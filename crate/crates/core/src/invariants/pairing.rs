use crate::arcs::{pair, subarc, End, WeightedArcSet};
use crate::diagram::{Diagram, Kind};
use crate::error::{Error, Result};
use crate::linalg::Inverse;
use crate::rational::{qb, Q};
use num_bigint::BigInt;
use num_traits::Zero;

/// A basepoint on every α and every β curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basepoints {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl Basepoints {
    /// p(α_i) = the matched crossing on α_i, p(β_j) = m_j.
    pub fn from_matching(d: &Diagram) -> Basepoints {
        Basepoints {
            alpha: (0..d.genus()).map(|i| d.matched_on_alpha(i)).collect(),
            beta: d.matching().to_vec(),
        }
    }

    pub fn validate(&self, d: &Diagram) -> Result<()> {
        let g = d.genus();
        if self.alpha.len() != g || self.beta.len() != g {
            return Err(Error::InvalidArgument(format!(
                "need {g} basepoints on each side"
            )));
        }
        for (i, &p) in self.alpha.iter().enumerate() {
            if p >= d.n() || d.alpha_of(p) != i {
                return Err(Error::CrossingNotOnCurve(format!(
                    "alpha basepoint {}",
                    i + 1
                )));
            }
        }
        for (j, &p) in self.beta.iter().enumerate() {
            if p >= d.n() || d.beta_of(p) != j {
                return Err(Error::CrossingNotOnCurve(format!(
                    "beta basepoint {}",
                    j + 1
                )));
            }
        }
        Ok(())
    }
}

/// ⟨A, B⟩ − Σ_{i,j} J_ji ⟨A, β_j⟩⟨α_i, B⟩ with A = |p(α(c)), c|_α and B = |p(β(e)), e|_β
/// (or `[`-started arcs when `start` is closed). Computed straight from the definition.
pub fn ell_with_start(d: &Diagram, bp: &Basepoints, c: usize, e: usize, start: End) -> Result<Q> {
    bp.validate(d)?;
    let j = d.inverse_intersection()?.q;
    let a = subarc(d, Kind::Alpha, bp.alpha[d.alpha_of(c)], c, start, End::Half)?;
    let b = subarc(d, Kind::Beta, bp.beta[d.beta_of(e)], e, start, End::Half)?;
    let mut v = pair(d, &a, &b);
    for jj in 0..d.genus() {
        let ab = pair(d, &a, &WeightedArcSet::whole(d, Kind::Beta, jj));
        if ab.is_zero() {
            continue;
        }
        for i in 0..d.genus() {
            v -= j.get(jj, i) * &ab * pair(d, &WeightedArcSet::whole(d, Kind::Alpha, i), &b);
        }
    }
    Ok(v)
}

/// ℓ̃(c, e) with half-open starts at the basepoints.
pub fn ell_tilde(d: &Diagram, bp: &Basepoints, c: usize, e: usize) -> Result<Q> {
    ell_with_start(d, bp, c, e, End::Half)
}

/// ℓ(c, e) with closed starts at the basepoints.
pub fn ell(d: &Diagram, bp: &Basepoints, c: usize, e: usize) -> Result<Q> {
    ell_with_start(d, bp, c, e, End::Closed)
}

/// All values ℓ(c, e) at once, as integers X(c, e) = 4·det·ℓ(c, e).
///
/// With J = N/det, a₂ and b₂ the doubled pairings with whole curves and P₄ the
/// quadrupled arc pairing, X = det·P₄ − Σ_i (Nᵀa₂)_i b₂_i.
#[derive(Clone, Debug)]
pub struct Pairings {
    pub n: usize,
    pub inverse: Inverse,
    x: Vec<BigInt>,
}

impl Pairings {
    pub fn new(d: &Diagram, bp: &Basepoints, start: End) -> Result<Pairings> {
        bp.validate(d)?;
        let inverse = d.inverse_intersection()?;
        let n = d.n();
        let g = d.genus();
        let ws: i64 = if start == End::Closed { 2 } else { 1 };
        let sign: Vec<i64> = (0..n).map(|c| d.sign(c) as i64).collect();

        // b₂[e][i] = 2⟨α_i, B_e⟩, accumulated along each β from its basepoint
        let mut b2 = vec![vec![0i64; g]; n];
        for &p in &bp.beta {
            let mut run = vec![0i64; g];
            let mut e = p;
            loop {
                let mut v = run.clone();
                let end_w = if e == p { ws - 1 } else { 1 };
                v[d.alpha_of(e)] += sign[e] * end_w;
                b2[e] = v;
                run[d.alpha_of(e)] += sign[e] * if e == p { ws } else { 2 };
                e = d.bsucc(e);
                if e == p {
                    break;
                }
            }
        }

        let mut x = vec![BigInt::zero(); n * n];
        let mut wa = vec![0i64; n];
        for c in 0..n {
            // halves of A_c along its α curve
            wa.iter_mut().for_each(|w| *w = 0);
            let p = bp.alpha[d.alpha_of(c)];
            if p == c {
                wa[c] = ws - 1;
            } else {
                let mut y = p;
                loop {
                    wa[y] = if y == p {
                        ws
                    } else if y == c {
                        1
                    } else {
                        2
                    };
                    if y == c {
                        break;
                    }
                    y = d.asucc(y);
                }
            }
            let mut a2 = vec![0i64; g];
            for y in d.walk(Kind::Alpha, p, d.apred(p)) {
                a2[d.beta_of(y)] += sign[y] * wa[y];
            }
            let u: Vec<BigInt> = (0..g)
                .map(|i| (0..g).map(|jj| inverse.adj.get(jj, i) * a2[jj]).sum())
                .collect();
            for &q0 in &bp.beta {
                let mut run = 0i64;
                let mut e = q0;
                loop {
                    let end_w = if e == q0 { ws - 1 } else { 1 };
                    let p4 = run + sign[e] * wa[e] * end_w;
                    run += sign[e] * wa[e] * if e == q0 { ws } else { 2 };
                    let mut v = &inverse.det * p4;
                    for i in 0..g {
                        if b2[e][i] != 0 {
                            v -= &u[i] * b2[e][i];
                        }
                    }
                    x[c * n + e] = v;
                    e = d.bsucc(e);
                    if e == q0 {
                        break;
                    }
                }
            }
        }
        Ok(Pairings { n, inverse, x })
    }

    /// ℓ̃ for the matching basepoints.
    pub fn tilde_m(d: &Diagram) -> Result<Pairings> {
        Pairings::new(d, &Basepoints::from_matching(d), End::Half)
    }

    /// 4·det·ℓ(c, e).
    pub fn x(&self, c: usize, e: usize) -> &BigInt {
        &self.x[c * self.n + e]
    }

    pub fn value(&self, c: usize, e: usize) -> Q {
        qb(self.x(c, e).clone(), &self.inverse.det * 4)
    }

    /// J_ji as the integer N_ji = det·J_ji.
    pub fn n_ji(&self, j: usize, i: usize) -> &BigInt {
        self.inverse.adj.get(j, i)
    }

    pub fn det(&self) -> &BigInt {
        &self.inverse.det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{example_d1, example_d2};
    use crate::rational::q;

    #[test]
    fn example_tables_vanish() {
        let d1 = example_d1();
        let bp = Basepoints::from_matching(&d1);
        for x in ["c", "d"] {
            for y in ["c", "d"] {
                let v =
                    ell_tilde(&d1, &bp, d1.crossing(x).unwrap(), d1.crossing(y).unwrap()).unwrap();
                assert_eq!(v, q(0, 1), "{x}{y}");
            }
        }
        let d2 = example_d2();
        let bp = Basepoints::from_matching(&d2);
        for x in ["c", "d", "e", "f"] {
            for y in ["c", "d", "e", "f"] {
                let v =
                    ell_tilde(&d2, &bp, d2.crossing(x).unwrap(), d2.crossing(y).unwrap()).unwrap();
                assert_eq!(v, q(0, 1), "{x}{y}");
            }
        }
    }

    #[test]
    fn engine_matches_definition() {
        for d in [example_d1(), example_d2()] {
            let last = Basepoints {
                alpha: (0..d.genus())
                    .map(|i| *d.alpha(i).last().unwrap())
                    .collect(),
                beta: (0..d.genus()).map(|j| *d.beta(j).last().unwrap()).collect(),
            };
            let bps = [Basepoints::from_matching(&d), last];
            for bp in &bps {
                for start in [End::Half, End::Closed] {
                    let e = Pairings::new(&d, bp, start).unwrap();
                    for c in 0..d.n() {
                        for x in 0..d.n() {
                            assert_eq!(e.value(c, x), ell_with_start(&d, bp, c, x, start).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bad_basepoint() {
        let d = example_d2();
        let bp = Basepoints {
            alpha: vec![d.crossing("e").unwrap(), d.crossing("e").unwrap()],
            beta: d.matching().to_vec(),
        };
        assert!(matches!(
            ell(&d, &bp, 0, 0),
            Err(Error::CrossingNotOnCurve(_))
        ));
    }
}
