use crate::diagram::Diagram;
use crate::error::Result;
use crate::invariants::{lk_parallel, FlowCycle};
use crate::layout::de_crossing_with;
use crate::rational::{qi, Q};

/// p₁(X(w,m′)) − p₁(X(w,m)) = 4Σ_j d_e(m′_j) − 4 lk(K, K_∥) with K = Σγ(m′_j) − Σγ(m_j),
/// all measured in the drawing for (w, m).
pub fn p1_delta_matching(d: &Diagram, m2: &[usize]) -> Result<Q> {
    d.with_matching(m2.to_vec())?;
    let j = d.inverse_intersection()?.q;
    let mut k = FlowCycle::zero(d.n());
    for &c in m2 {
        k.coeffs[c] += qi(1);
    }
    for &c in d.matching() {
        k.coeffs[c] -= qi(1);
    }
    let de: Q = m2.iter().map(|&c| de_crossing_with(d, &j, c)).sum();
    Ok(de * qi(4) - lk_parallel(d, &k, &k)? * qi(4))
}
