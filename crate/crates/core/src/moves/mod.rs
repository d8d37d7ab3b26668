//! Diagram moves with their exact effect on the invariants, and the random generator.

mod bigon;
mod fuzz;
mod slide;
mod sum;

pub use bigon::{
    bigon_birth, bigon_death, bigon_delta, bigon_sites, death_sites, BigonBirth, BigonSite,
    Orientation,
};
pub use fuzz::{random_diagram, FuzzConfig, MoveKind};
pub use slide::{handle_slide_beta, slide_deltas, slide_sites, Slide, SlideDeltas, SlideSite};
pub use sum::{connected_sum, join_components, relabel, stabilize};

use crate::diagram::Diagram;
use std::collections::HashSet;

/// Unused crossing names `{prefix}{k}`, k counting up from 1.
pub(crate) struct Namer {
    taken: HashSet<String>,
    next: usize,
    prefix: &'static str,
}

impl Namer {
    pub(crate) fn new(d: &Diagram, prefix: &'static str) -> Namer {
        Namer {
            taken: d.names().iter().cloned().collect(),
            next: 1,
            prefix,
        }
    }

    pub(crate) fn fresh(&mut self) -> String {
        loop {
            let s = format!("{}{}", self.prefix, self.next);
            self.next += 1;
            if self.taken.insert(s.clone()) {
                return s;
            }
        }
    }
}
