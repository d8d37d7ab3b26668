//! The twelve acceptance criteria, one PASS/FAIL line each.

use hdtheta::arcs::{pair, subarc, End, WeightedArcSet};
use hdtheta::checks::{case_rng, fuzz_diagram, run, Check, Outcome};
use hdtheta::diagram::{example_d1, example_d2, example_s3, Kind};
use hdtheta::invariants::{ell_tilde, l_cycle, lk_parallel, Basepoints, Summary};
use hdtheta::layout::{check_drawing, outer_faces};
use hdtheta::moves::{handle_slide_beta, slide_deltas, slide_sites, FuzzConfig};
use hdtheta::rational::{q, qi};
use hdtheta::surgery::{
    alexander, casson_surgery_delta, delta_second_derivative_at_one, lambda_prime,
    lambda_prime_plus, p1_genus_constant, SeifertData,
};
use hdtheta::variations::{
    lk_with_l_w, p1_prime_w, redraw_for_w, square_relation_check, theta_delta_w, WPath,
};
use hdtheta::{fmt_q, Diagram, Q};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::process::ExitCode;
use std::time::{Duration, Instant};

type Verdict = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq(what: &str, got: &Q, want: &Q) -> Result<(), String> {
    ensure(got == want, || {
        format!("{what}: got {}, expected {}", fmt_q(got), fmt_q(want))
    })
}

fn in_time(t: Instant, limit: Duration) -> Result<Duration, String> {
    let e = t.elapsed();
    ensure(e < limit, || format!("took {e:.2?}, limit {limit:?}"))?;
    Ok(e)
}

/// Run `check` over the pool until `want` cases pass; any failure aborts.
fn count_passes(pool: &[Diagram], check: Check, want: usize, per_diagram: u64) -> Verdict {
    let mut passed = 0;
    for (k, d) in pool.iter().enumerate() {
        for r in 0..per_diagram {
            match run(check, d, &mut case_rng(r << 20, k as u64, check)) {
                Outcome::Pass { .. } => passed += 1,
                Outcome::Skipped { .. } => {}
                Outcome::Fail(f) => {
                    return Err(format!("{}: {}\n{}", f.case, f.detail, f.reproducer))
                }
            }
            if passed == want {
                return Ok(format!("{passed} cases"));
            }
        }
    }
    Err(format!("only {passed} of {want} cases could be drawn"))
}

fn c1_examples() -> Verdict {
    let t = Instant::now();
    let s = Summary::of(&example_d1()).map_err(|e| e.to_string())?;
    eq("D1 J11", s.j.get(0, 0), &q(1, 2))?;
    eq("D1 ell2", &s.ell2, &qi(0))?;
    eq("D1 s_ell", &s.s_ell, &qi(0))?;
    eq("D1 e", &s.e, &q(-1, 4))?;
    eq("D1 theta", &s.theta_tilde, &q(1, 4))?;
    let s = Summary::of(&example_d2()).map_err(|e| e.to_string())?;
    for (r, c, v) in [
        (0, 0, q(1, 2)),
        (0, 1, qi(0)),
        (1, 0, q(-1, 2)),
        (1, 1, qi(1)),
    ] {
        eq(&format!("D2 J[{r}][{c}]"), s.j.get(r, c), &v)?;
    }
    eq("D2 ell2", &s.ell2, &qi(0))?;
    eq("D2 s_ell", &s.s_ell, &qi(0))?;
    eq("D2 e", &s.e, &q(1, 4))?;
    eq("D2 theta", &s.theta_tilde, &q(-1, 4))?;
    let s = Summary::of(&example_s3()).map_err(|e| e.to_string())?;
    for (what, v) in [
        ("ell2", &s.ell2),
        ("s_ell", &s.s_ell),
        ("e", &s.e),
        ("theta", &s.theta_tilde),
    ] {
        eq(&format!("S3 {what}"), v, &qi(0))?;
    }
    let e = in_time(t, Duration::from_secs(1))?;
    Ok(format!("D1, D2, S3 exact in {e:.2?}"))
}

fn c2_pairings() -> Verdict {
    let d = example_d1();
    let c = d.crossing("c").unwrap();
    let x = d.crossing("d").unwrap();
    let a = |u, v| subarc(&d, Kind::Alpha, u, v, End::Closed, End::Half).unwrap();
    let b = |u, v| subarc(&d, Kind::Beta, u, v, End::Closed, End::Half).unwrap();
    let beta1 = WeightedArcSet::whole(&d, Kind::Beta, 0);
    let got = [
        pair(&d, &a(c, c), &b(c, c)),
        pair(&d, &a(c, c), &b(c, x)),
        pair(&d, &a(c, x), &b(c, c)),
        pair(&d, &a(c, x), &b(c, x)),
        pair(&d, &a(c, c), &beta1),
        pair(&d, &a(c, x), &beta1),
    ];
    let want = [q(1, 4), q(1, 2), q(1, 2), q(5, 4), q(1, 2), q(3, 2)];
    for (k, (g, w)) in got.iter().zip(&want).enumerate() {
        eq(&format!("pairing {}", k + 1), g, w)?;
    }
    Ok("1/4, 1/2, 1/2, 5/4, 1/2, 3/2".into())
}

fn c3_tables() -> Verdict {
    let mut n = 0;
    for d in [example_d1(), example_d2()] {
        let bp = Basepoints::from_matching(&d);
        for c in 0..d.n() {
            for x in 0..d.n() {
                let v = ell_tilde(&d, &bp, c, x).map_err(|e| e.to_string())?;
                eq(&format!("ell~({},{})", d.name(c), d.name(x)), &v, &qi(0))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} entries, all 0"))
}

fn c4_twist(pool: &[Diagram]) -> Verdict {
    let t = Instant::now();
    let v = count_passes(&pool[..200], Check::Twist, 1000, 5)?;
    let e = in_time(t, Duration::from_secs(30))?;
    Ok(format!("{v} in {e:.2?}"))
}

fn c5_s_ell(pool: &[Diagram]) -> Verdict {
    for d in &pool[..500] {
        let l = l_cycle(d).map_err(|e| e.to_string())?;
        let s = Summary::of(d).map_err(|e| e.to_string())?;
        eq(
            "s_ell vs lk(L, L||)",
            &s.s_ell,
            &lk_parallel(d, &l, &l).map_err(|e| e.to_string())?,
        )?;
    }
    Ok("500 diagrams".into())
}

fn c6_basepoints(pool: &[Diagram]) -> Verdict {
    count_passes(&pool[..200], Check::Basepoint, 1000, 5)
        .map(|v| format!("{v} (200 diagrams x 5 systems)"))
}

fn c7_bigons(pool: &[Diagram]) -> Verdict {
    count_passes(pool, Check::Bigon, 500, 1).map(|v| format!("{v} (births)"))
}

fn c8_slides(pool: &[Diagram]) -> Verdict {
    let mut n = 0;
    for d in pool {
        let s0 = Summary::of(d).map_err(|e| e.to_string())?;
        for site in slide_sites(d).map_err(|e| e.to_string())?.iter().take(4) {
            let s = handle_slide_beta(d, site).map_err(|e| e.to_string())?;
            check_drawing(&s.diagram).map_err(|e| e.to_string())?;
            let s1 = Summary::of(&s.diagram).map_err(|e| e.to_string())?;
            let p = slide_deltas(d, site).map_err(|e| e.to_string())?;
            eq("delta ell2", &(&s1.ell2 - &s0.ell2), &p.ell2)?;
            eq("delta s_ell", &(&s1.s_ell - &s0.s_ell), &p.s_ell)?;
            eq("delta e", &(&s1.e - &s0.e), &p.e)?;
            eq(
                "4(d ell2 + d s_ell - d e)",
                &((&p.ell2 + &p.s_ell - &p.e) * qi(4)),
                &qi(0),
            )?;
            n += 1;
            if n == 200 {
                return Ok("200 slides".into());
            }
        }
    }
    Err(format!("only {n} slides found"))
}

fn c9_w_change(pool: &[Diagram]) -> Verdict {
    let mut n = 0;
    'outer: for d in pool {
        let faces = d.faces();
        let w = outer_faces(d, &faces).map_err(|e| e.to_string())?[0];
        let mut next: Vec<usize> = faces
            .darts(w)
            .iter()
            .map(|x| faces.face_of(x.reversed()))
            .filter(|&f| f != w)
            .collect();
        next.sort_unstable();
        next.dedup();
        let t0 = Summary::of(d).map_err(|e| e.to_string())?.theta_tilde;
        let l = l_cycle(d).map_err(|e| e.to_string())?;
        for f in next {
            let path = WPath::to_face(d, f, &vec![0; faces.len()]).map_err(|e| e.to_string())?;
            let e = redraw_for_w(d, &path).map_err(|e| e.to_string())?;
            let dt = Summary::of(&e).map_err(|e| e.to_string())?.theta_tilde - &t0;
            let p1 = p1_prime_w(d, &path).map_err(|e| e.to_string())?;
            eq("p1' vs 4 dTheta", &p1, &(&dt * qi(4)))?;
            eq(
                "8 lk vs p1'",
                &(lk_with_l_w(d, &l, &path).map_err(|e| e.to_string())? * qi(8)),
                &p1,
            )?;
            eq(
                "theta_delta_w",
                &theta_delta_w(d, &path).map_err(|e| e.to_string())?,
                &dt,
            )?;
            n += 1;
            if n == 500 {
                break 'outer;
            }
        }
    }
    ensure(n == 500, || format!("only {n} elementary paths"))?;
    let mut squares = 0;
    let sample: Vec<&Diagram> = pool.iter().take(100).collect();
    let (d1, d2) = (example_d1(), example_d2());
    for d in [&d1, &d2].into_iter().chain(sample) {
        for c in (0..d.n()).filter(|&c| !d.is_matched(c)) {
            let s = square_relation_check(d, c).map_err(|e| e.to_string())?;
            ensure(s.holds(), || format!("square at {}: {s:?}", d.name(c)))?;
            squares += 1;
        }
    }
    Ok(format!(
        "500 elementary paths; square relation at {squares} crossings"
    ))
}

fn c10_m_change(pool: &[Diagram]) -> Verdict {
    let mut n = 0;
    for (k, d) in pool.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(k as u64);
        // prefer a matching different from the current one
        let m2 = (0..8)
            .map(|_| d.random_matching(&mut rng).unwrap())
            .find(|m| m != d.matching());
        let Some(m2) = m2 else { continue };
        let e = hdtheta::layout::relayout_for_matching(d, &m2).map_err(|e| e.to_string())?;
        check_drawing(&e).map_err(|e| e.to_string())?;
        let dt = Summary::of(&e).map_err(|e| e.to_string())?.theta_tilde
            - Summary::of(d).map_err(|e| e.to_string())?.theta_tilde;
        let p = hdtheta::variations::p1_delta_matching(d, &m2).map_err(|e| e.to_string())?;
        eq("p1 change vs 4 dTheta", &p, &(dt * qi(4)))?;
        n += 1;
        if n == 300 {
            return Ok("300 matching changes".into());
        }
    }
    Err(format!("only {n} matching changes"))
}

fn c11_structure(pool: &[Diagram]) -> Verdict {
    count_passes(&pool[..100], Check::Structure, 100, 1)
        .map(|v| format!("{v}: sums, stabilization, reversal, swap"))
}

fn c12_surgery() -> Verdict {
    let t = Instant::now();
    let knot =
        |rows: [[i64; 2]; 2]| SeifertData::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap();
    let checks = [
        (knot([[-1, 1], [0, -1]]), 1),
        (knot([[1, 1], [0, -1]]), -1),
        (knot([[0, 1], [0, 0]]), 0),
    ];
    for (s, want) in &checks {
        ensure(lambda_prime(s) == BigInt::from(*want), || {
            format!("lambda' {:?}", s.linking())
        })?;
    }
    ensure(
        casson_surgery_delta(&checks[1].0, 3).unwrap() == BigInt::from(-3),
        || "figure-eight n = 3".into(),
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for k in 0..500 {
        let g = 1 + k % 6;
        let s = SeifertData::random(g, &mut rng);
        let lam = lambda_prime(&s);
        let alex = alexander(&s).map_err(|e| e.to_string())?;
        ensure(
            alex.eval_at_one() == BigInt::from(1) && alex == alex.invert_variable(),
            || format!("normalization of {alex}"),
        )?;
        eq(
            "half second derivative",
            &delta_second_derivative_at_one(&s).unwrap(),
            &Q::from_integer(lam.clone()),
        )?;
        ensure(lambda_prime_plus(&s) == &lam * 2 - g, || {
            format!("lambda'_+ at {:?}", s.linking())
        })?;
    }
    ensure(p1_genus_constant(2) == BigInt::from(8), || "p1(2)".into())?;
    let e = in_time(t, Duration::from_secs(10))?;
    Ok(format!(
        "3 knots, 500 random matrices up to genus 6 in {e:.2?}"
    ))
}

fn main() -> ExitCode {
    let t = Instant::now();
    let cfg = FuzzConfig::default();
    let pool: Vec<Diagram> = (0..600).map(|k| fuzz_diagram(k, &cfg)).collect();
    println!("fuzz pool: {} diagrams in {:.2?}", pool.len(), t.elapsed());
    let criteria: Vec<Criterion> = vec![
        ("example regression", Box::new(c1_examples)),
        ("pairing micro-values", Box::new(c2_pairings)),
        ("ell~ tables", Box::new(c3_tables)),
        ("twist invariance", Box::new(|| c4_twist(&pool))),
        ("s_ell = lk(L, L||)", Box::new(|| c5_s_ell(&pool))),
        ("basepoint independence", Box::new(|| c6_basepoints(&pool))),
        ("bigon deltas", Box::new(|| c7_bigons(&pool))),
        ("handle-slide deltas", Box::new(|| c8_slides(&pool))),
        (
            "w-change 4:1 law and square relation",
            Box::new(|| c9_w_change(&pool)),
        ),
        ("m-change 4:1 law", Box::new(|| c10_m_change(&pool))),
        ("structure laws", Box::new(|| c11_structure(&pool))),
        ("surgery identities", Box::new(c12_surgery)),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(msg) => println!("PASS {:>2} {name}: {msg}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
