//! Variation of p₁ and Θ̃ when the exterior point w or the matching m changes.

mod matching;
mod wpath;

pub use matching::p1_delta_matching;
pub use wpath::{
    lk_with_l_w, p1_prime_w, redraw_for_w, square_relation_check, theta_delta_w, AlphaHit, BetaHit,
    SquareRelation, WPath,
};
