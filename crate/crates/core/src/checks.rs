//! Randomized property suites, shared by the `verify` command and the test-suite.
//! Each run draws one random case for one diagram and reports pass, skip or failure.

use crate::diagram::{example_d1, example_d2, example_s3, to_hdg, Diagram};
use crate::error::{Error, Result};
use crate::invariants::{
    ell2_of_2cycle, ell2_parts, l_cycle, lk_parallel, Basepoints, Summary, TwoCycle,
};
use crate::layout::{
    apply_full_twist, check_drawing, de_crossing, euler_term, outer_faces, relayout_for_matching,
    Side,
};
use crate::moves::{
    bigon_birth, bigon_delta, bigon_sites, connected_sum, handle_slide_beta, join_components,
    relabel, slide_deltas, slide_sites, stabilize, FuzzConfig,
};
use crate::rational::{fmt_q, q, qi};
use crate::variations::{
    lk_with_l_w, p1_delta_matching, p1_prime_w, redraw_for_w, square_relation_check, theta_delta_w,
    WPath,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Twist,
    Bigon,
    Slide,
    WChange,
    MChange,
    Square,
    SEll,
    Basepoint,
    Structure,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Twist,
        Check::Bigon,
        Check::Slide,
        Check::WChange,
        Check::MChange,
        Check::Square,
        Check::SEll,
        Check::Basepoint,
        Check::Structure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Twist => "twist",
            Check::Bigon => "bigon",
            Check::Slide => "slide",
            Check::WChange => "w-change",
            Check::MChange => "m-change",
            Check::Square => "square",
            Check::SEll => "s-ell",
            Check::Basepoint => "basepoint",
            Check::Structure => "structure",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check `{s}`")))
    }
}

/// A violated identity, with everything needed to re-trigger it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub check: Check,
    pub case: String,
    pub detail: String,
    /// the diagram the case was drawn on, in HDG form
    pub reproducer: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass { case: String },
    Skipped { reason: String },
    Fail(Failure),
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }
}

enum Verdict {
    Pass(String),
    Skip(String),
    Fail(String, String),
}

macro_rules! expect_eq {
    ($case:expr, $what:expr, $got:expr, $want:expr) => {{
        let (got, want) = (&$got, &$want);
        if got != want {
            return Ok(Verdict::Fail(
                $case,
                format!("{}: got {}, expected {}", $what, fmt_q(got), fmt_q(want)),
            ));
        }
    }};
}

/// Run one random case of `check` on `d`.
pub fn run(check: Check, d: &Diagram, rng: &mut ChaCha8Rng) -> Outcome {
    let res = match check {
        Check::Twist => twist(d, rng),
        Check::Bigon => bigon(d, rng),
        Check::Slide => slide(d, rng),
        Check::WChange => w_change(d, rng),
        Check::MChange => m_change(d, rng),
        Check::Square => square(d, rng),
        Check::SEll => s_ell(d),
        Check::Basepoint => basepoint(d, rng),
        Check::Structure => structure(d, rng),
    };
    let fail = |case: String, detail: String| {
        Outcome::Fail(Failure {
            check,
            case,
            detail,
            reproducer: to_hdg(d),
        })
    };
    match res {
        Ok(Verdict::Pass(case)) => Outcome::Pass { case },
        Ok(Verdict::Skip(reason)) => Outcome::Skipped { reason },
        Ok(Verdict::Fail(case, detail)) => fail(case, detail),
        Err(e) => fail(String::from("(operation failed)"), e.to_string()),
    }
}

/// The diagram used for fuzz iteration `seed`: a random walk of moves from S³, D₁ or D₂.
pub fn fuzz_diagram(seed: u64, cfg: &FuzzConfig) -> Diagram {
    let base = match seed % 3 {
        0 => example_s3(),
        1 => example_d1(),
        _ => example_d2(),
    };
    cfg.generate_from(&base, seed)
}

/// Random source for one case: keyed by seed XOR index, with a separate stream per check so
/// that a case can be replayed on its own.
pub fn case_rng(seed: u64, index: u64, check: Check) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ index);
    rng.set_stream(1 + check as u64);
    rng
}

fn twist(d: &Diagram, rng: &mut ChaCha8Rng) -> Result<Verdict> {
    let i = rng.gen_range(0..d.genus());
    let side = if rng.gen_bool(0.5) {
        Side::Prime
    } else {
        Side::DoublePrime
    };
    let sense: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
    let case = format!("twist α{} {:?} sense {sense}", i + 1, side);
    let t = apply_full_twist(d, i, side, sense)?;
    check_drawing(&t)?;
    expect_eq!(case, "euler term", euler_term(&t)?, euler_term(d)?);
    let rho = d.beta_of(d.matched_on_alpha(i));
    for c in 0..d.n() {
        let k = (d.alpha_of(c) == i) as i64 - (d.beta_of(c) == rho) as i64;
        let want = q(sense as i64 * k, 2);
        expect_eq!(
            case,
            format!("shift of d_e({})", d.name(c)),
            de_crossing(&t, c)? - de_crossing(d, c)?,
            want
        );
    }
    if apply_full_twist(&t, i, side, -sense)? != *d {
        return Ok(Verdict::Fail(
            case,
            "the opposite twist does not restore the drawing".into(),
        ));
    }
    Ok(Verdict::Pass(case))
}

fn bigon(d: &Diagram, rng: &mut ChaCha8Rng) -> Result<Verdict> {
    let sites = bigon_sites(d)?;
    let Some(site) = sites.choose(rng) else {
        return Ok(Verdict::Skip("no bigon site".into()));
    };
    let case = format!(
        "bigon of {}-arc from {} and β-arc from {}",
        "α",
        d.name(site.alpha.start),
        d.name(site.beta.start)
    );
    let b = bigon_birth(d, site)?;
    check_drawing(&b.diagram)?;
    let (s0, s1) = (Summary::of(d)?, Summary::of(&b.diagram)?);
    let (c0, g0) = ell2_parts(d)?;
    let (c1, g1) = ell2_parts(&b.diagram)?;
    let delta = bigon_delta(d, site)?;
    expect_eq!(case, "Δℓ₂", &s1.ell2 - &s0.ell2, delta);
    expect_eq!(case, "Δ of the J-weighted diagonal term", g1 - g0, delta);
    expect_eq!(case, "Δ of the quadratic term", c1 - c0, qi(0));
    expect_eq!(case, "Δe", &s1.e - &s0.e, delta);
    expect_eq!(case, "Δs_ℓ", &s1.s_ell - &s0.s_ell, qi(0));
    expect_eq!(case, "ΔΘ̃", &s1.theta_tilde - &s0.theta_tilde, qi(0));
    Ok(Verdict::Pass(case))
}

fn slide(d: &Diagram, rng: &mut ChaCha8Rng) -> Result<Verdict> {
    let sites = slide_sites(d)?;
    let Some(site) = sites.choose(rng) else {
        return Ok(Verdict::Skip("no slide site".into()));
    };
    let case = format!(
        "slide β{} over β{} at {}",
        d.beta_of(site.target.start) + 1,
        d.beta_of(site.over.start) + 1,
        d.name(site.over.start)
    );
    let s = handle_slide_beta(d, site)?;
    check_drawing(&s.diagram)?;
    let (s0, s1) = (Summary::of(d)?, Summary::of(&s.diagram)?);
    let p = slide_deltas(d, site)?;
    expect_eq!(case, "Δℓ₂", &s1.ell2 - &s0.ell2, p.ell2);
    expect_eq!(case, "Δs_ℓ", &s1.s_ell - &s0.s_ell, p.s_ell);
    expect_eq!(case, "Δe", &s1.e - &s0.e, p.e);
    expect_eq!(
        case,
        "4(Δℓ₂ + Δs_ℓ − Δe)",
        (p.ell2 + p.s_ell - p.e) * qi(4),
        qi(0)
    );
    expect_eq!(case, "ΔΘ̃", &s1.theta_tilde - &s0.theta_tilde, qi(0));
    Ok(Verdict::Pass(case))
}

fn w_change(d: &Diagram, rng: &mut ChaCha8Rng) -> Result<Verdict> {
    let faces = d.faces();
    let w = outer_faces(d, &faces)?[0];
    // half the time an elementary step to a neighbour of w, otherwise any region
    let targets: Vec<usize> = if rng.gen_bool(0.5) {
        let mut v: Vec<usize> = faces
            .darts(w)
            .iter()
            .map(|x| faces.face_of(x.reversed()))
            .filter(|&f| f != w)
            .collect();
        v.dedup();
        v
    } else {
        (0..faces.len()).filter(|&f| f != w).collect()
    };
    let Some(&target) = targets.choose(rng) else {
        return Ok(Verdict::Skip("only one region".into()));
    };
    let gates: Vec<usize> = (0..faces.len())
        .map(|f| rng.gen_range(0..faces.darts(f).len()))
        .collect();
    let path = WPath::to_face(d, target, &gates)?;
    let case = format!(
        "w → region {target} ({} α-path hits, {} β-path hits)",
        path.alpha_hits.len(),
        path.beta_hits.len()
    );
    let e = redraw_for_w(d, &path)?;
    check_drawing(&e)?;
    let dt = Summary::of(&e)?.theta_tilde - Summary::of(d)?.theta_tilde;
    expect_eq!(case, "theta_delta_w", theta_delta_w(d, &path)?, dt);
    expect_eq!(case, "p₁′", p1_prime_w(d, &path)?, &dt * qi(4));
    expect_eq!(
        case,
        "8·lk(L, L(w′,w))",
        lk_with_l_w(d, &l_cycle(d)?, &path)? * qi(8),
        &dt * qi(4)
    );
    Ok(Verdict::Pass(case))
}

fn m_change(d: &Diagram, rng: &mut ChaCha8Rng) -> Result<Verdict> {
    let m2 = d.random_matching(rng)?;
    let case = format!(
        "m′ = {{{}}}",
        m2.iter().map(|&c| d.name(c)).collect::<Vec<_>>().join(",")
    );
    let e = relayout_for_matching(d, &m2)?;
    check_drawing(&e)?;
    let dt = Summary::of(&e)?.theta_tilde - Summary::of(d)?.theta_tilde;
    expect_eq!(case, "p₁ change", p1_delta_matching(d, &m2)?, dt * qi(4));
    Ok(Verdict::Pass(case))
}

fn square(d: &Diagram, rng: &mut ChaCha8Rng) -> Result<Verdict> {
    let free: Vec<usize> = (0..d.n()).filter(|&c| !d.is_matched(c)).collect();
    let Some(&c) = free.choose(rng) else {
        return Ok(Verdict::Skip("every crossing is matched".into()));
    };
    let case = format!("square at {}", d.name(c));
    let s = square_relation_check(d, c)?;
    expect_eq!(case, "p₁′ combination", s.d1, s.expected);
    expect_eq!(case, "8·lk combination", &s.d2 * qi(8), s.expected);
    Ok(Verdict::Pass(case))
}

fn s_ell(d: &Diagram) -> Result<Verdict> {
    let case = String::from("s_ℓ against lk(L, L∥)");
    let l = l_cycle(d)?;
    expect_eq!(case, "s_ℓ", Summary::of(d)?.s_ell, lk_parallel(d, &l, &l)?);
    Ok(Verdict::Pass(case))
}

fn basepoint(d: &Diagram, rng: &mut ChaCha8Rng) -> Result<Verdict> {
    let bp = Basepoints {
        alpha: (0..d.genus())
            .map(|i| *d.alpha(i).choose(rng).expect("curves are nonempty"))
            .collect(),
        beta: (0..d.genus())
            .map(|j| *d.beta(j).choose(rng).expect("curves are nonempty"))
            .collect(),
    };
    let case = format!(
        "basepoints α: {} β: {}",
        bp.alpha
            .iter()
            .map(|&c| d.name(c))
            .collect::<Vec<_>>()
            .join(","),
        bp.beta
            .iter()
            .map(|&c| d.name(c))
            .collect::<Vec<_>>()
            .join(",")
    );
    let g = TwoCycle::of_diagram(d)?;
    expect_eq!(
        case,
        "ℓ⁽²⁾(G(D))",
        ell2_of_2cycle(d, &bp, &g)?,
        Summary::of(d)?.ell2
    );
    Ok(Verdict::Pass(case))
}

fn structure(d: &Diagram, rng: &mut ChaCha8Rng) -> Result<Verdict> {
    let other = fuzz_diagram(
        rng.gen(),
        &FuzzConfig {
            steps: 4,
            genus_max: 2,
            max_crossings: 40,
        },
    );
    let case = format!("structure laws, partner:\n{}", to_hdg(&other));
    let s = Summary::of(d)?;
    let t = Summary::of(&other)?;
    let sum = connected_sum(d, &other);
    for (what, x) in [
        ("connected sum", Summary::of(&sum)?),
        ("joined sum", Summary::of(&join_components(&sum)?)?),
    ] {
        expect_eq!(case, format!("{what} ℓ₂"), x.ell2, &s.ell2 + &t.ell2);
        expect_eq!(case, format!("{what} s_ℓ"), x.s_ell, &s.s_ell + &t.s_ell);
        expect_eq!(case, format!("{what} e"), x.e, &s.e + &t.e);
        expect_eq!(
            case,
            format!("{what} Θ̃"),
            x.theta_tilde,
            &s.theta_tilde + &t.theta_tilde
        );
    }
    let st = Summary::of(&join_components(&stabilize(d))?)?;
    let rv = Summary::of(&d.reverse_orientation())?;
    let rl = Summary::of(&relabel(d, rng))?;
    for (what, x, sign) in [
        ("stabilization", &st, 1),
        ("reversal", &rv, -1),
        ("relabeling", &rl, 1),
    ] {
        let k = qi(sign);
        expect_eq!(case, format!("{what} ℓ₂"), x.ell2, &s.ell2 * &k);
        expect_eq!(case, format!("{what} s_ℓ"), x.s_ell, &s.s_ell * &k);
        expect_eq!(case, format!("{what} e"), x.e, &s.e * &k);
        expect_eq!(
            case,
            format!("{what} Θ̃"),
            x.theta_tilde,
            &s.theta_tilde * &k
        );
    }
    let sw = d.swap_roles()?;
    check_drawing(&sw)?;
    let sw = Summary::of(&sw)?;
    expect_eq!(case, "swapped ℓ₂", sw.ell2, s.ell2);
    expect_eq!(case, "swapped s_ℓ", sw.s_ell, s.s_ell);
    expect_eq!(case, "swapped e", sw.e, s.e);
    Ok(Verdict::Pass(case))
}
