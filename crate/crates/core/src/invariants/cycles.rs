use super::pairing::{Basepoints, Pairings};
use crate::arcs::End;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::rational::{dot_q_int, qb, qi, Q};
use num_bigint::BigInt;
use num_traits::Zero;

/// K = Σ k_c γ(c), a rational combination of flow lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowCycle {
    pub coeffs: Vec<Q>,
}

impl FlowCycle {
    pub fn zero(n: usize) -> FlowCycle {
        FlowCycle {
            coeffs: vec![Q::zero(); n],
        }
    }

    /// γ(c) runs from a point of α(c) to a point of β(c), so ∂K = 0 means
    /// Σ_{c∈α_i} k_c = 0 and Σ_{c∈β_j} k_c = 0 for every curve.
    pub fn check(&self, d: &Diagram) -> Result<()> {
        if self.coeffs.len() != d.n() {
            return Err(Error::NotACycle(
                "coefficient count differs from crossing count".into(),
            ));
        }
        for i in 0..d.genus() {
            let s: Q = d.alpha(i).iter().map(|&c| &self.coeffs[c]).sum();
            if !s.is_zero() {
                return Err(Error::NotACycle(format!(
                    "boundary on alpha {} is {}",
                    i + 1,
                    s
                )));
            }
        }
        for j in 0..d.genus() {
            let s: Q = d.beta(j).iter().map(|&c| &self.coeffs[c]).sum();
            if !s.is_zero() {
                return Err(Error::NotACycle(format!(
                    "boundary on beta {} is {}",
                    j + 1,
                    s
                )));
            }
        }
        Ok(())
    }

    pub fn sub(&self, other: &FlowCycle) -> FlowCycle {
        FlowCycle {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// L(D, m) = Σ_j γ(m_j) − Σ_c J_{j(c)i(c)} σ(c) γ(c).
pub fn l_cycle(d: &Diagram) -> Result<FlowCycle> {
    let j = d.inverse_intersection()?.q;
    let coeffs = (0..d.n())
        .map(|c| {
            qi(d.is_matched(c) as i64) - j.get(d.beta_of(c), d.alpha_of(c)) * qi(d.sign(c) as i64)
        })
        .collect();
    Ok(FlowCycle { coeffs })
}

/// lk(K, L_∥) = Σ_{c,e} k_c l_e ℓ̃_m(c, e).
pub fn lk_parallel(d: &Diagram, k: &FlowCycle, l: &FlowCycle) -> Result<Q> {
    k.check(d)?;
    l.check(d)?;
    Ok(lk_parallel_with(&Pairings::tilde_m(d)?, k, l))
}

/// [`lk_parallel`] on precomputed pairings, without the cycle check.
pub fn lk_parallel_with(p: &Pairings, k: &FlowCycle, l: &FlowCycle) -> Q {
    let mut inner = Vec::with_capacity(p.n);
    for c in 0..p.n {
        if k.coeffs[c].is_zero() {
            continue;
        }
        let row = dot_q_int((0..p.n).map(|e| (&l.coeffs[e], p.x(c, e).clone())));
        inner.push((c, row));
    }
    let total: Q = inner.into_iter().map(|(c, r)| &k.coeffs[c] * r).sum();
    total / Q::from_integer(p.det() * 4)
}

/// G = Σ g_{ce} γ(c) × γ(e)_∥, dense over pairs of crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCycle {
    pub n: usize,
    pub coeffs: Vec<Q>,
}

impl TwoCycle {
    pub fn zero(n: usize) -> TwoCycle {
        TwoCycle {
            n,
            coeffs: vec![Q::zero(); n * n],
        }
    }

    pub fn get(&self, c: usize, e: usize) -> &Q {
        &self.coeffs[c * self.n + e]
    }

    pub fn set(&mut self, c: usize, e: usize, v: Q) {
        self.coeffs[c * self.n + e] = v;
    }

    /// G(D): g_ce = J_{j(c)i(e)} J_{j(e)i(c)} σ(c)σ(e) − δ_ce J_{j(c)i(c)} σ(c).
    pub fn of_diagram(d: &Diagram) -> Result<TwoCycle> {
        let inv = d.inverse_intersection()?;
        let n = d.n();
        let det2 = &inv.det * &inv.det;
        let mut g = TwoCycle::zero(n);
        for c in 0..n {
            for e in 0..n {
                let mut v: BigInt = inv.adj.get(d.beta_of(c), d.alpha_of(e))
                    * inv.adj.get(d.beta_of(e), d.alpha_of(c));
                v *= d.sign(c) as i64 * d.sign(e) as i64;
                if c == e {
                    v -= inv.adj.get(d.beta_of(c), d.alpha_of(c)) * &inv.det * d.sign(c) as i64;
                }
                g.set(c, e, qb(v, det2.clone()));
            }
        }
        Ok(g)
    }

    /// For every curve and every fixed other index, the sums over the curve vanish in both slots.
    pub fn check(&self, d: &Diagram) -> Result<()> {
        if self.n != d.n() {
            return Err(Error::NotACycle(
                "coefficient count differs from crossing count".into(),
            ));
        }
        let curves: Vec<(&str, usize, &[usize])> = (0..d.genus())
            .flat_map(|i| [("alpha", i, d.alpha(i)), ("beta", i, d.beta(i))])
            .collect();
        for (name, idx, list) in curves {
            for other in 0..self.n {
                let first: Q = list.iter().map(|&c| self.get(c, other)).sum();
                let second: Q = list.iter().map(|&c| self.get(other, c)).sum();
                if !first.is_zero() || !second.is_zero() {
                    return Err(Error::NotACycle(format!(
                        "nonzero boundary on {name} {} against `{}`",
                        idx + 1,
                        d.name(other)
                    )));
                }
            }
        }
        Ok(())
    }
}

/// ℓ⁽²⁾(G) = Σ g_ce ℓ(c, e) with closed-start arcs at the basepoints.
pub fn ell2_of_2cycle(d: &Diagram, bp: &Basepoints, g: &TwoCycle) -> Result<Q> {
    g.check(d)?;
    let p = Pairings::new(d, bp, End::Closed)?;
    let s = dot_q_int(
        (0..d.n())
            .flat_map(|c| (0..d.n()).map(move |e| (c, e)))
            .map(|(c, e)| (g.get(c, e), p.x(c, e).clone())),
    );
    Ok(s / Q::from_integer(p.det() * 4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{example_d1, example_d2, example_s3};
    use crate::rational::q;

    #[test]
    fn l_cycle_examples() {
        let d1 = example_d1();
        let l = l_cycle(&d1).unwrap();
        assert_eq!(l.coeffs[d1.crossing("c").unwrap()], q(1, 2));
        assert_eq!(l.coeffs[d1.crossing("d").unwrap()], q(-1, 2));
        l.check(&d1).unwrap();
        assert_eq!(l_cycle(&example_s3()).unwrap(), FlowCycle::zero(1));
        assert_eq!(lk_parallel(&d1, &l, &l).unwrap(), q(0, 1));
    }

    #[test]
    fn g_of_diagram_is_a_cycle() {
        for d in [example_d1(), example_d2()] {
            let g = TwoCycle::of_diagram(&d).unwrap();
            g.check(&d).unwrap();
            assert_eq!(
                ell2_of_2cycle(&d, &Basepoints::from_matching(&d), &g).unwrap(),
                q(0, 1)
            );
        }
        let d = example_d1();
        let mut bad = TwoCycle::zero(d.n());
        bad.set(0, 0, q(1, 1));
        assert!(matches!(
            ell2_of_2cycle(&d, &Basepoints::from_matching(&d), &bad),
            Err(Error::NotACycle(_))
        ));
        assert_eq!(
            ell2_of_2cycle(&d, &Basepoints::from_matching(&d), &TwoCycle::zero(d.n())).unwrap(),
            q(0, 1)
        );
    }

    #[test]
    fn non_cycle_rejected() {
        let d = example_d1();
        let mut k = FlowCycle::zero(d.n());
        k.coeffs[0] = q(1, 1);
        assert!(matches!(lk_parallel(&d, &k, &k), Err(Error::NotACycle(_))));
    }
}
