//! Weighted subarcs `[d,e|` and the algebraic intersection pairing.

use crate::diagram::{Diagram, Kind};
use crate::error::{Error, Result};
use crate::rational::{q, Q};
use std::collections::BTreeMap;

/// How an arc end is counted: `[`/`]` closed (weight 1) or `|` half (weight ½).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    Closed,
    Half,
}

/// Crossing → weight in {0, ½, 1}, kept internally in half units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedArcSet {
    pub kind: Kind,
    pub curve: usize,
    halves: BTreeMap<usize, i64>,
}

impl WeightedArcSet {
    pub fn empty(kind: Kind, curve: usize) -> Self {
        WeightedArcSet {
            kind,
            curve,
            halves: BTreeMap::new(),
        }
    }

    /// The whole closed curve α_i or β_j, every crossing with weight 1.
    pub fn whole(d: &Diagram, kind: Kind, curve: usize) -> Self {
        let list = match kind {
            Kind::Alpha => d.alpha(curve),
            Kind::Beta => d.beta(curve),
        };
        WeightedArcSet {
            kind,
            curve,
            halves: list.iter().map(|&c| (c, 2)).collect(),
        }
    }

    pub fn weight(&self, c: usize) -> Q {
        q(self.halves.get(&c).copied().unwrap_or(0), 2)
    }

    /// Weight doubled, as an integer.
    pub fn halves(&self, c: usize) -> i64 {
        self.halves.get(&c).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Q)> + '_ {
        self.halves
            .iter()
            .filter(|(_, &h)| h != 0)
            .map(|(&c, &h)| (c, q(h, 2)))
    }

    pub fn is_empty(&self) -> bool {
        self.halves.values().all(|&h| h == 0)
    }
}

fn curve_of(d: &Diagram, kind: Kind, c: usize) -> usize {
    match kind {
        Kind::Alpha => d.alpha_of(c),
        Kind::Beta => d.beta_of(c),
    }
}

/// Crossings from `from` to `to` along the curve through `from`, ends weighted by `start`/`end`.
///
/// `from == to` is the degenerate arc: `[c,c] = {c:1}`, `[c,c| = |c,c] = {c:½}`, `|c,c| = ∅`.
pub fn subarc(
    d: &Diagram,
    kind: Kind,
    from: usize,
    to: usize,
    start: End,
    end: End,
) -> Result<WeightedArcSet> {
    let curve = curve_of(d, kind, from);
    if curve_of(d, kind, to) != curve {
        return Err(Error::CrossingNotOnCurve(d.name(to).to_string()));
    }
    let ws = if start == End::Closed { 2 } else { 1 };
    let we = if end == End::Closed { 2 } else { 1 };
    let mut halves = BTreeMap::new();
    if from == to {
        halves.insert(from, ws + we - 2);
    } else {
        for c in d.walk(kind, from, to) {
            halves.insert(c, 2);
        }
        halves.insert(from, ws);
        halves.insert(to, we);
    }
    Ok(WeightedArcSet {
        kind,
        curve,
        halves,
    })
}

/// Σ_c σ(c)·w_I(c)·w_J(c).
pub fn pair(d: &Diagram, a: &WeightedArcSet, b: &WeightedArcSet) -> Q {
    q(pair_quarters(d, a, b), 4)
}

/// The pairing times 4, exactly an integer.
pub fn pair_quarters(d: &Diagram, a: &WeightedArcSet, b: &WeightedArcSet) -> i64 {
    let (small, large) = if a.halves.len() <= b.halves.len() {
        (a, b)
    } else {
        (b, a)
    };
    small
        .halves
        .iter()
        .map(|(&c, &h)| d.sign(c) as i64 * h * large.halves(c))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::example_d1;

    #[test]
    fn degenerate_arcs() {
        let d = example_d1();
        let c = d.crossing("c").unwrap();
        let dd = d.crossing("d").unwrap();
        let s = subarc(&d, Kind::Alpha, c, c, End::Closed, End::Half).unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![(c, q(1, 2))]);
        assert!(subarc(&d, Kind::Alpha, dd, dd, End::Half, End::Half)
            .unwrap()
            .is_empty());
        let s = subarc(&d, Kind::Alpha, c, dd, End::Closed, End::Half).unwrap();
        assert_eq!(
            s.iter().collect::<Vec<_>>(),
            vec![(c, q(1, 1)), (dd, q(1, 2))]
        );
    }

    #[test]
    fn example_pairings() {
        let d = example_d1();
        let c = d.crossing("c").unwrap();
        let dd = d.crossing("d").unwrap();
        let a = |x, y| subarc(&d, Kind::Alpha, x, y, End::Closed, End::Half).unwrap();
        let b = |x, y| subarc(&d, Kind::Beta, x, y, End::Closed, End::Half).unwrap();
        let beta1 = WeightedArcSet::whole(&d, Kind::Beta, 0);
        assert_eq!(pair(&d, &a(c, c), &b(c, c)), q(1, 4));
        assert_eq!(pair(&d, &a(c, c), &b(c, dd)), q(1, 2));
        assert_eq!(pair(&d, &a(c, dd), &b(c, c)), q(1, 2));
        assert_eq!(pair(&d, &a(c, dd), &b(c, dd)), q(5, 4));
        assert_eq!(pair(&d, &a(c, c), &beta1), q(1, 2));
        assert_eq!(pair(&d, &a(c, dd), &beta1), q(3, 2));
    }

    #[test]
    fn wrong_curve() {
        let d = crate::diagram::example_d2();
        let c = d.crossing("c").unwrap();
        let e = d.crossing("e").unwrap();
        assert!(matches!(
            subarc(&d, Kind::Alpha, c, e, End::Closed, End::Closed),
            Err(Error::CrossingNotOnCurve(_))
        ));
    }
}
