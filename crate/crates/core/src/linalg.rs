//! Small dense integer and rational matrices.

use crate::error::{Error, Result};
use crate::rational::Q;
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub n: usize,
    pub data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (c, v) in row.iter().enumerate() {
                m.data[r * n + c] = BigInt::from(*v);
            }
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.n + c] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn to_rows_i64(&self) -> Vec<Vec<i64>> {
        use num_traits::ToPrimitive;
        (0..self.n)
            .map(|r| {
                (0..self.n)
                    .map(|c| self.get(r, c).to_i64().expect("entry fits i64"))
                    .collect()
            })
            .collect()
    }

    /// Fraction-free Bareiss elimination.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for c in 0..n {
                    a.swap(k * n + c, p * n + c);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = v / &prev;
                }
            }
            prev = a[k * n + k].clone();
        }
        sign * &a[n * n - 1]
    }

    /// Adjugate: `self * adj = det * I`.
    pub fn adjugate(&self) -> Self {
        let n = self.n;
        let mut adj = Self::zeros(n);
        if n == 1 {
            adj.set(0, 0, BigInt::one());
            return adj;
        }
        for r in 0..n {
            for c in 0..n {
                let mut minor = Self::zeros(n - 1);
                for (mr, rr) in (0..n).filter(|&x| x != r).enumerate() {
                    for (mc, cc) in (0..n).filter(|&x| x != c).enumerate() {
                        minor.set(mr, mc, self.get(rr, cc).clone());
                    }
                }
                let cof = minor.det();
                let cof = if (r + c) % 2 == 0 { cof } else { -cof };
                adj.set(c, r, cof);
            }
        }
        adj
    }
}

/// Exact rational square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    pub n: usize,
    pub data: Vec<Q>,
}

impl RationalMatrix {
    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.n + c]
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![Q::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Q::one();
        }
        RationalMatrix { n, data }
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        let n = self.n;
        let mut data = vec![Q::zero(); n * n];
        for r in 0..n {
            for c in 0..n {
                let mut s = Q::zero();
                for k in 0..n {
                    s += self.get(r, k) * other.get(k, c);
                }
                data[r * n + c] = s;
            }
        }
        RationalMatrix { n, data }
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        RationalMatrix {
            n: m.n,
            data: m.data.iter().cloned().map(Q::from_integer).collect(),
        }
    }
}

/// `J = N / det` with integer `N`; kept together because most sums are done over `N`.
#[derive(Clone, Debug)]
pub struct Inverse {
    pub det: BigInt,
    pub adj: IntMatrix,
    pub q: RationalMatrix,
}

/// Inverse of an integer matrix, exact.
pub fn invert(m: &IntMatrix) -> Result<Inverse> {
    let det = m.det();
    if det.is_zero() {
        return Err(Error::SingularIntersection);
    }
    let adj = m.adjugate();
    let q = RationalMatrix {
        n: m.n,
        data: adj
            .data
            .iter()
            .map(|x| Q::new(x.clone(), det.clone()))
            .collect(),
    };
    Ok(Inverse { det, adj, q })
}
