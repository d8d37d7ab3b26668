//! The rectangular planar drawing encoded by the β turnings.
//!
//! Cutting the surface along the α curves gives, for each α_i, two circles α′_i and α″_i
//! in a rectangle whose outside is the exterior point w. The turning stored with a β
//! crossing is the half-turn count of the β arc leaving it. Crossings sit at horizontal
//! tangents: matched crossings at the upward-tangent points of the circles, the others
//! at the downward ones.

mod degrees;
mod frame;
mod model;
mod solve;
mod twist;

pub use degrees::{de_beta, de_crossing, de_crossing_with, de_subarc, euler_term, euler_term_with};
pub use frame::{chord_sign, chord_turn, Frame, Port};
pub use model::{
    check_drawing, corner, dart_geometry, dir, face_total, face_totals, outer_faces, DartGeometry,
};
pub use solve::solve_turnings;
pub use twist::{apply_full_twist, relayout_for_matching, Side};
