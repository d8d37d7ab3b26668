//! Casson-type surgery formulas from the linking data of a Seifert surface.

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::rational::{q, Q};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use std::collections::BTreeMap;
use std::fmt;

/// Linking data of a genus gΣ Seifert surface with a symplectic basis z₁..z_{2g}:
/// `linking[a][b] = lk(z_a⁺, z_b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertData {
    genus: usize,
    linking: Vec<Vec<i64>>,
}

/// ⟨z_a, z_b⟩ for the standard symplectic basis (0-based indices).
fn omega(a: usize, b: usize) -> i64 {
    if a / 2 != b / 2 || a == b {
        0
    } else if a.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The partner of z_a: 2r ↔ 2r−1.
fn bar(a: usize) -> usize {
    a ^ 1
}

impl SeifertData {
    pub fn new(linking: Vec<Vec<i64>>) -> Result<SeifertData> {
        let n = linking.len();
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::SymplecticViolation(format!(
                "size {n} is not a positive even number"
            )));
        }
        if let Some(r) = linking.iter().position(|row| row.len() != n) {
            return Err(Error::SymplecticViolation(format!(
                "row {} has {} entries, expected {n}",
                r + 1,
                linking[r].len()
            )));
        }
        for a in 0..n {
            for b in 0..n {
                if linking[a][b] - linking[b][a] != omega(a, b) {
                    return Err(Error::SymplecticViolation(format!(
                        "L[{a}][{b}] - L[{b}][{a}] = {}, expected {}",
                        linking[a][b] - linking[b][a],
                        omega(a, b)
                    )));
                }
            }
        }
        Ok(SeifertData {
            genus: n / 2,
            linking,
        })
    }

    /// Whitespace-separated integers forming a square matrix, one row per line.
    pub fn parse(text: &str) -> Result<SeifertData> {
        let mut rows = Vec::new();
        for (k, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<i64>().map_err(|_| Error::Parse {
                        line: k + 1,
                        msg: format!("`{t}` is not an integer"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        SeifertData::new(rows)
    }

    /// Upper triangle and diagonal uniform in [−5, 5]; the lower triangle is then forced.
    pub fn random<R: Rng>(genus: usize, rng: &mut R) -> SeifertData {
        let n = 2 * genus;
        let mut l = vec![vec![0; n]; n];
        for a in 0..n {
            for b in a..n {
                l[a][b] = rng.gen_range(-5..=5);
            }
            for b in 0..a {
                l[a][b] = l[b][a] - omega(b, a);
            }
        }
        SeifertData { genus, linking: l }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn lk(&self, a: usize, b: usize) -> i64 {
        self.linking[a][b]
    }

    pub fn linking(&self) -> &[Vec<i64>] {
        &self.linking
    }

    /// Reorder the handle pairs: new pair k is old pair `perm[k]`.
    pub fn permute_handles(&self, perm: &[usize]) -> SeifertData {
        let n = 2 * self.genus;
        let src = |a: usize| 2 * perm[a / 2] + a % 2;
        let linking = (0..n)
            .map(|a| (0..n).map(|b| self.linking[src(a)][src(b)]).collect())
            .collect();
        SeifertData {
            genus: self.genus,
            linking,
        }
    }
}

/// Σ_{i,r} lk(z⁺_{2i},z_{2r}) lk(z⁺_{2i−1},z_{2r−1}) − lk(z⁺_{2i},z_{2r−1}) lk(z⁺_{2i−1},z_{2r})
pub fn lambda_prime(s: &SeifertData) -> BigInt {
    let mut v = BigInt::zero();
    for i in 0..s.genus {
        for r in 0..s.genus {
            let (o, e) = (2 * i, 2 * i + 1);
            let (ro, re) = (2 * r, 2 * r + 1);
            v += BigInt::from(s.lk(e, re)) * s.lk(o, ro) - BigInt::from(s.lk(e, ro)) * s.lk(o, re);
        }
    }
    v
}

/// Σ_{i,r} lk(z_r⁺,z_i) lk(z_ī⁺,z_r̄) ⟨z_i,z_ī⟩⟨z_r,z_r̄⟩, which equals 2λ′ − gΣ.
pub fn lambda_prime_plus(s: &SeifertData) -> BigInt {
    let n = 2 * s.genus;
    let mut v = BigInt::zero();
    for i in 0..n {
        for r in 0..n {
            v += BigInt::from(s.lk(r, i))
                * s.lk(bar(i), bar(r))
                * omega(i, bar(i))
                * omega(r, bar(r));
        }
    }
    v
}

/// Σ_{i,r} lk(z_r⁺,z_i) lk(z_r̄⁺,z_ī) ⟨z_i,z_ī⟩⟨z_r,z_r̄⟩, a second expression for 2λ′.
pub fn lambda_prime_symmetrized(s: &SeifertData) -> BigInt {
    let n = 2 * s.genus;
    let mut v = BigInt::zero();
    for i in 0..n {
        for r in 0..n {
            v += BigInt::from(s.lk(r, i))
                * s.lk(bar(r), bar(i))
                * omega(i, bar(i))
                * omega(r, bar(r));
        }
    }
    v
}

/// Integer Laurent polynomial, stored sparsely by exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn from_coeffs<I: IntoIterator<Item = (i64, BigInt)>>(it: I) -> Self {
        let mut p = LaurentPolynomial::default();
        for (e, c) in it {
            *p.coeffs.entry(e).or_default() += c;
        }
        p.coeffs.retain(|_, c| !c.is_zero());
        p
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// p(t⁻¹)
    pub fn invert_variable(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|(e, c)| (-e, c.clone())))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|(e, c)| (e - 1, c * e)))
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = mag.is_one() && *e != 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Δ(t) = t^{−gΣ} det(t·L − Lᵀ), found by exact interpolation of the determinant at t = 0..2gΣ.
pub fn alexander(s: &SeifertData) -> Result<LaurentPolynomial> {
    let n = 2 * s.genus;
    let values: Vec<Q> = (0..=n as i64)
        .map(|t| {
            let mut m = IntMatrix::zeros(n);
            for a in 0..n {
                for b in 0..n {
                    m.set(a, b, BigInt::from(t * s.lk(a, b) - s.lk(b, a)));
                }
            }
            Q::from_integer(m.det())
        })
        .collect();
    let coeffs = interpolate(&values);
    let mut terms = Vec::new();
    for (k, c) in coeffs.into_iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::SymplecticViolation(
                "determinant is not an integer polynomial".into(),
            ));
        }
        terms.push((k as i64 - s.genus as i64, c.to_integer()));
    }
    let p = LaurentPolynomial::from_coeffs(terms);
    if !p.eval_at_one().is_one() || p != p.invert_variable() {
        return Err(Error::SymplecticViolation(format!(
            "Δ = {p} is not normalized"
        )));
    }
    Ok(p)
}

/// Coefficients (lowest degree first) of the polynomial taking `values[k]` at t = k.
fn interpolate(values: &[Q]) -> Vec<Q> {
    // Newton divided differences on nodes 0..n, then expand the Newton basis.
    let n = values.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for k in (level..n).rev() {
            dd[k] = (&dd[k] - &dd[k - 1]) / Q::from_integer(BigInt::from(level));
        }
    }
    let mut poly = vec![Q::zero(); n];
    for k in (0..n).rev() {
        // poly = poly·(t − k) + dd[k]
        let mut next = vec![Q::zero(); n];
        for (e, c) in poly.iter().enumerate() {
            if e + 1 < n {
                next[e + 1] += c;
            }
            next[e] -= c * Q::from_integer(BigInt::from(k));
        }
        next[0] += &dd[k];
        poly = next;
    }
    poly
}

/// ½Δ″(1), by formal differentiation.
pub fn delta_second_derivative_at_one(s: &SeifertData) -> Result<Q> {
    let second = alexander(s)?.derivative().derivative();
    Ok(Q::from_integer(second.eval_at_one()) * q(1, 2))
}

/// λ̃ of 1/n surgery on the knot minus λ̃ of the ambient sphere: n·λ′.
pub fn casson_surgery_delta(s: &SeifertData, n: i64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "surgery coefficient 1/n needs n ≠ 0".into(),
        ));
    }
    Ok(lambda_prime(s) * n)
}

/// p₁(g) = 4g(g−1), the framing correction for a genus g surface.
pub fn p1_genus_constant(g: u64) -> BigInt {
    let g = BigInt::from(g);
    BigInt::from(4) * &g * (&g - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn knot(rows: &[[i64; 2]; 2]) -> SeifertData {
        SeifertData::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_coeffs(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn standard_knots() {
        let unknot = knot(&[[0, 1], [0, 0]]);
        let trefoil = knot(&[[-1, 1], [0, -1]]);
        let eight = knot(&[[1, 1], [0, -1]]);
        assert_eq!(lambda_prime(&unknot), BigInt::from(0));
        assert_eq!(lambda_prime(&trefoil), BigInt::from(1));
        assert_eq!(lambda_prime(&eight), BigInt::from(-1));
        assert_eq!(lambda_prime_plus(&unknot), BigInt::from(-1));
        assert_eq!(lambda_prime_plus(&trefoil), BigInt::from(1));
        assert_eq!(alexander(&unknot).unwrap(), lp(&[(0, 1)]));
        assert_eq!(
            alexander(&trefoil).unwrap(),
            lp(&[(1, 1), (0, -1), (-1, 1)])
        );
        assert_eq!(alexander(&eight).unwrap(), lp(&[(1, -1), (0, 3), (-1, -1)]));
        assert_eq!(alexander(&trefoil).unwrap().to_string(), "t - 1 + t^-1");
        assert_eq!(delta_second_derivative_at_one(&trefoil).unwrap(), q(1, 1));
        assert_eq!(delta_second_derivative_at_one(&unknot).unwrap(), q(0, 1));
        assert_eq!(casson_surgery_delta(&trefoil, 1).unwrap(), BigInt::from(1));
        assert_eq!(
            casson_surgery_delta(&trefoil, -1).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(casson_surgery_delta(&eight, 3).unwrap(), BigInt::from(-3));
        assert!(casson_surgery_delta(&eight, 0).is_err());
    }

    #[test]
    fn genus_constant() {
        assert_eq!(p1_genus_constant(0), BigInt::from(0));
        assert_eq!(p1_genus_constant(1), BigInt::from(0));
        assert_eq!(p1_genus_constant(2), BigInt::from(8));
    }

    #[test]
    fn rejects_non_symplectic() {
        assert!(matches!(
            SeifertData::new(vec![vec![0, 1], vec![1, 0]]),
            Err(Error::SymplecticViolation(_))
        ));
        assert!(SeifertData::new(vec![vec![0, 1, 0]]).is_err());
        assert!(matches!(
            SeifertData::parse("1 x\n0 1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert_eq!(
            SeifertData::parse("# trefoil\n-1 1\n0 -1\n").unwrap(),
            knot(&[[-1, 1], [0, -1]])
        );
    }

    #[test]
    fn random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for k in 0..200 {
            let s = SeifertData::random(1 + k % 3, &mut rng);
            assert!(SeifertData::new(s.linking().to_vec()).is_ok());
            let lam = lambda_prime(&s);
            assert_eq!(
                Q::from_integer(lam.clone()),
                delta_second_derivative_at_one(&s).unwrap()
            );
            assert_eq!(lambda_prime_plus(&s), &lam * 2 - s.genus());
            assert_eq!(lambda_prime_symmetrized(&s), &lam * 2);
        }
    }
}
