use crate::diagram::Diagram;
use crate::error::Result;
use crate::linalg::RationalMatrix;
use crate::rational::{q, Q};

/// d_e(β_j): half the total turning of β_j.
pub fn de_beta(d: &Diagram, j: usize) -> Q {
    q(d.beta(j).iter().map(|&c| d.turn(c)).sum(), 2)
}

/// d_e(|m_j, c|_β): turning from the matched crossing of β_{j(c)} up to c.
pub fn de_subarc(d: &Diagram, c: usize) -> Q {
    let mut x = d.matching()[d.beta_of(c)];
    let mut t = 0;
    while x != c {
        t += d.turn(x);
        x = d.bsucc(x);
    }
    q(t, 2)
}

/// ⟨α_r, |m_{j(c)}, c|_β⟩ for every r, in half units.
fn alpha_pairings_halves(d: &Diagram, c: usize) -> Vec<i64> {
    let mut v = vec![0i64; d.genus()];
    let m = d.matching()[d.beta_of(c)];
    if m == c {
        return v;
    }
    let mut x = m;
    loop {
        let w = if x == m || x == c { 1 } else { 2 };
        v[d.alpha_of(x)] += d.sign(x) as i64 * w;
        if x == c {
            break;
        }
        x = d.bsucc(x);
    }
    v
}

/// d_e(c) = d_e(|m,c|_β) − Σ_{r,s} J_sr ⟨α_r, |m,c|_β⟩ d_e(β_s).
pub fn de_crossing(d: &Diagram, c: usize) -> Result<Q> {
    Ok(de_crossing_with(d, &d.inverse_intersection()?.q, c))
}

pub fn de_crossing_with(d: &Diagram, j: &RationalMatrix, c: usize) -> Q {
    let a = alpha_pairings_halves(d, c);
    let mut v = de_subarc(d, c);
    for s in 0..d.genus() {
        let deb = de_beta(d, s);
        for (r, &ar) in a.iter().enumerate() {
            if ar != 0 {
                v -= j.get(s, r) * q(ar, 2) * &deb;
            }
        }
    }
    v
}

/// e(D, w, m) = Σ_c J_{j(c)i(c)} σ(c) d_e(c).
pub fn euler_term(d: &Diagram) -> Result<Q> {
    Ok(euler_term_with(d, &d.inverse_intersection()?.q))
}

pub fn euler_term_with(d: &Diagram, j: &RationalMatrix) -> Q {
    let mut e = q(0, 1);
    for c in 0..d.n() {
        let jc = j.get(d.beta_of(c), d.alpha_of(c));
        if jc != &q(0, 1) {
            e += jc * de_crossing_with(d, j, c) * Q::from_integer(d.sign(c).into());
        }
    }
    e
}
