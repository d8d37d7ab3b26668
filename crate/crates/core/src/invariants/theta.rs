use super::pairing::Pairings;
use crate::diagram::Diagram;
use crate::error::Result;
use crate::layout::euler_term_with;
use crate::linalg::RationalMatrix;
use crate::rational::{qb, Q};
use num_bigint::BigInt;
use num_traits::Zero;

/// Everything `compute` reports for a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summary {
    pub genus: usize,
    pub det: BigInt,
    pub j: RationalMatrix,
    pub ell2: Q,
    pub s_ell: Q,
    pub e: Q,
    pub theta_tilde: Q,
}

impl Summary {
    pub fn of(d: &Diagram) -> Result<Summary> {
        let p = Pairings::tilde_m(d)?;
        let (ell2, s_ell) = quadratic_terms(d, &p);
        let e = euler_term_with(d, &p.inverse.q);
        let theta_tilde = &ell2 + &s_ell - &e;
        Ok(Summary {
            genus: d.genus(),
            det: p.det().clone(),
            j: p.inverse.q.clone(),
            ell2,
            s_ell,
            e,
            theta_tilde,
        })
    }
}

/// (ℓ₂, s_ℓ) from the ℓ̃_m table, summed over integers with the common denominator 4·det³.
pub(crate) fn quadratic_terms(d: &Diagram, p: &Pairings) -> (Q, Q) {
    let (cross, diag, sl) = split_terms(d, p);
    (cross + diag, sl)
}

/// ℓ₂ split as (Σ J_{j(c)i(d)}J_{j(d)i(c)}σ(c)σ(d)ℓ̃_m(c,d), −Σ J_{j(c)i(c)}σ(c)ℓ̃_m(c,c)).
pub fn ell2_parts(d: &Diagram) -> Result<(Q, Q)> {
    let (cross, diag, _) = split_terms(d, &Pairings::tilde_m(d)?);
    Ok((cross, diag))
}

fn split_terms(d: &Diagram, p: &Pairings) -> (Q, Q, Q) {
    let n = d.n();
    let det = p.det();
    let diag: Vec<BigInt> = (0..n)
        .map(|c| p.n_ji(d.beta_of(c), d.alpha_of(c)) * d.sign(c) as i64)
        .collect();
    let mut l2 = BigInt::zero();
    let mut sl = BigInt::zero();
    let mut l2_diag = BigInt::zero();
    for c in 0..n {
        let (jc, ic) = (d.beta_of(c), d.alpha_of(c));
        for e in 0..n {
            let x = p.x(c, e);
            if x.is_zero() {
                continue;
            }
            let (je, ie) = (d.beta_of(e), d.alpha_of(e));
            let cross = p.n_ji(jc, ie) * p.n_ji(je, ic);
            if !cross.is_zero() {
                l2 += cross * x * (d.sign(c) as i64 * d.sign(e) as i64);
            }
            if !diag[c].is_zero() && !diag[e].is_zero() {
                sl += &diag[c] * &diag[e] * x;
            }
        }
        l2_diag += &diag[c] * p.x(c, c);
    }
    let den: BigInt = det * det * det * 4;
    (
        qb(l2, den.clone()),
        qb(-det * l2_diag, den.clone()),
        qb(sl, den),
    )
}

pub fn ell2(d: &Diagram) -> Result<Q> {
    Ok(quadratic_terms(d, &Pairings::tilde_m(d)?).0)
}

pub fn s_ell(d: &Diagram) -> Result<Q> {
    Ok(quadratic_terms(d, &Pairings::tilde_m(d)?).1)
}

/// Θ̃(D, w, m) = ℓ₂(D) + s_ℓ(D, m) − e(D, w, m).
pub fn theta_tilde(d: &Diagram) -> Result<Q> {
    Ok(Summary::of(d)?.theta_tilde)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{example_d1, example_d2, example_s3};
    use crate::invariants::{ell_tilde, Basepoints};
    use crate::rational::q;

    #[test]
    fn examples() {
        let s = Summary::of(&example_d1()).unwrap();
        assert_eq!(
            (s.ell2, s.s_ell, s.e, s.theta_tilde),
            (q(0, 1), q(0, 1), q(-1, 4), q(1, 4))
        );
        let s = Summary::of(&example_d2()).unwrap();
        assert_eq!(
            (s.ell2, s.s_ell, s.e, s.theta_tilde),
            (q(0, 1), q(0, 1), q(1, 4), q(-1, 4))
        );
        let s = Summary::of(&example_s3()).unwrap();
        assert_eq!(
            (s.ell2, s.s_ell, s.e, s.theta_tilde),
            (q(0, 1), q(0, 1), q(0, 1), q(0, 1))
        );
    }

    /// Straight transcription of the defining double sums, over rationals.
    fn oracle(d: &Diagram) -> (Q, Q) {
        let j = d.inverse_intersection().unwrap().q;
        let bp = Basepoints::from_matching(d);
        let jj = |c: usize, e: usize| j.get(d.beta_of(c), d.alpha_of(e)).clone();
        let s = |c: usize| Q::from_integer(d.sign(c).into());
        let (mut l2, mut sl) = (Q::zero(), Q::zero());
        for c in 0..d.n() {
            for e in 0..d.n() {
                let l = ell_tilde(d, &bp, c, e).unwrap();
                l2 += jj(c, e) * jj(e, c) * s(c) * s(e) * &l;
                sl += jj(c, c) * jj(e, e) * s(c) * s(e) * &l;
            }
            l2 -= jj(c, c) * s(c) * ell_tilde(d, &bp, c, c).unwrap();
        }
        (l2, sl)
    }

    #[test]
    fn engine_agrees_with_oracle() {
        for d in [example_d1(), example_d2(), example_s3()] {
            let (l2, sl) = oracle(&d);
            assert_eq!(ell2(&d).unwrap(), l2);
            assert_eq!(s_ell(&d).unwrap(), sl);
        }
    }
}
