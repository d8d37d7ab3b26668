//! Exact rational helpers. Everything numeric in the crate is a `Q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qb(n: BigInt, d: BigInt) -> Q {
    Q::new(n, d)
}

pub fn half() -> Q {
    q(1, 2)
}

/// Lowest-terms "p/q" rendering; integers print without a denominator.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Inverse of [`fmt_q`]; also accepts plain integers.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

pub fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    (a / a.gcd(b) * b).abs()
}

/// Exact sum of `coeff * value` for integer values, using one common denominator.
pub fn dot_q_int<'a, I>(terms: I) -> Q
where
    I: IntoIterator<Item = (&'a Q, BigInt)>,
{
    let terms: Vec<(&Q, BigInt)> = terms.into_iter().collect();
    let mut den = BigInt::one();
    for (c, _) in &terms {
        if !c.is_zero() {
            den = lcm(&den, c.denom());
        }
    }
    let mut acc = BigInt::zero();
    for (c, v) in terms {
        if c.is_zero() || v.is_zero() {
            continue;
        }
        acc += c.numer() * (&den / c.denom()) * v;
    }
    Q::new(acc, den)
}
