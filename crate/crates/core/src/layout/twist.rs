use crate::diagram::Diagram;
use crate::error::{Error, Result};

/// Which copy of a cut-open α curve a twist runs around.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// α′
    Prime,
    /// α″
    DoublePrime,
}

/// Full twist of the β strands around the circle `side` of α_i.
///
/// Every crossing of α_i has exactly one β arc-end on the chosen circle. That arc gets
/// one extra full turn of sign −sense when it leaves the circle and +sense when it
/// arrives. The net effect on d_e(β_s) is ∓⟨α_i, β_s⟩ and each d_e(c) moves by
/// sense·(½δ_{i(c),i} − ½δ_{ρ(i),j(c)}), where ρ(i) is the β curve matched on α_i.
pub fn apply_full_twist(d: &Diagram, i: usize, side: Side, sense: i8) -> Result<Diagram> {
    if sense != 1 && sense != -1 {
        return Err(Error::InvalidArgument(
            "twist sense must be +1 or -1".into(),
        ));
    }
    if i >= d.genus() {
        return Err(Error::InvalidArgument(format!("no alpha curve {}", i + 1)));
    }
    let s = 2 * sense as i64;
    let mut turn = d.turns().to_vec();
    for &c in d.alpha(i) {
        // β arrives at c through α′ when σ(c) = +1 and through α″ when σ(c) = −1
        let incoming = match side {
            Side::Prime => d.sign(c) > 0,
            Side::DoublePrime => d.sign(c) < 0,
        };
        if incoming {
            turn[d.bpred(c)] += s;
        } else {
            turn[c] -= s;
        }
    }
    Ok(d.with_turns(turn))
}

/// The same diagram decorated by the matching `m2`, redrawn by sliding the crossings of
/// each α arc between the old and the new matched crossing around the circles.
///
/// Moving a crossing from the downward to the upward point of the circles (or back)
/// rotates its β strands by half a turn on each side; the crossings strictly between
/// the two matched points pass the whole bottom of the circles and rotate by a full turn.
pub fn relayout_for_matching(d: &Diagram, m2: &[usize]) -> Result<Diagram> {
    let target = d.with_matching(m2.to_vec())?;
    let mut turn = d.turns().to_vec();
    let mut shift = |c: usize, amount: i64| {
        turn[d.bpred(c)] -= amount;
        turn[c] -= amount;
    };
    for i in 0..d.genus() {
        let old = d.matched_on_alpha(i);
        let new = target.matched_on_alpha(i);
        if old == new {
            continue;
        }
        shift(old, d.sign(old) as i64);
        shift(new, d.sign(new) as i64);
        let mut c = d.asucc(old);
        while c != new {
            shift(c, 2 * d.sign(c) as i64);
            c = d.asucc(c);
        }
    }
    Ok(target.with_turns(turn))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{example_d1, example_d2};
    use crate::layout::{check_drawing, de_beta, euler_term};
    use crate::rational::q;

    #[test]
    fn twist_on_d1() {
        let d = example_d1();
        let t = apply_full_twist(&d, 0, Side::DoublePrime, 1).unwrap();
        assert_eq!(de_beta(&t, 0), q(0, 1));
        assert_eq!(euler_term(&t).unwrap(), q(-1, 4));
        check_drawing(&t).unwrap();
        assert_eq!(apply_full_twist(&t, 0, Side::DoublePrime, -1).unwrap(), d);
    }

    #[test]
    fn relayout_is_a_drawing() {
        for d in [example_d1(), example_d2()] {
            for m in d.all_matchings() {
                let r = relayout_for_matching(&d, &m).unwrap();
                check_drawing(&r).unwrap();
                assert_eq!(r.matching(), m.as_slice());
            }
            assert_eq!(relayout_for_matching(&d, d.matching()).unwrap(), d);
        }
    }
}
