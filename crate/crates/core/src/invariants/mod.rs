//! ℓ̃, ℓ, ℓ₂, s_ℓ and Θ̃, together with the flow-cycle linking pairing.

mod cycles;
mod pairing;
mod theta;

pub use cycles::{ell2_of_2cycle, l_cycle, lk_parallel, lk_parallel_with, FlowCycle, TwoCycle};
pub use pairing::{ell, ell_tilde, ell_with_start, Basepoints, Pairings};
pub use theta::{ell2, ell2_parts, s_ell, theta_tilde, Summary};
