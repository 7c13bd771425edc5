//! End-to-end acceptance checks, one PASS/FAIL line each. Runs without the
//! libtest harness so the lines always appear in `cargo test` output.

mod common;

use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};
use rand::Rng;

use common::{corpus, independence, p, random_polynomial, rng, separation};
use np_preserve::cone::{check_ratio, compactify, ratio_value, RatioBudget, RatioCertificate, RatioStatus};
use np_preserve::halfline::{check_nonneg_halfline, polya_szego_certificate};
use np_preserve::matrix::{closed_form_image, falsify_random, horner_matrix_eval, posmatrix_generate, Matrix2, PosMatrixParams};
use np_preserve::preserver::{
    check_circulant2, check_p2, check_spectral, p3_necessary_screen, Condition, MembershipVerdict, ScreenOutcome, Status,
};
use np_preserve::rational::{int, pow2, rat};
use np_preserve::{Polynomial, Rational};

type Check<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn trail_labels(v: &MembershipVerdict) -> Vec<(Condition, &'static str)> {
    v.certificate_trail.iter().map(|e| (e.condition, e.status_label())).collect()
}

fn independence_ratio_failure() -> Outcome {
    let q = independence();
    let (v, elapsed) = timed(|| check_p2(&q, RatioBudget::default()));
    let (even, odd) = q.decompose_parity();
    let ok = v.status == Status::NotMember
        && q.derivative() == p(&[2, 0, -6, 0, 5])
        && even.is_zero()
        && odd == q
        && trail_labels(&v)
            == [
                (Condition::Derivative, "member"),
                (Condition::EvenPart, "member"),
                (Condition::OddPart, "member"),
                (Condition::Ratio, "fails"),
            ]
        && ratio_value(&q, &int(1), &rat(1, 2)) == rat(-9, 32)
        && v.witness_matrix == Some(Matrix2::new(int(0), int(1), rat(1, 2), rat(1, 2)))
        && v.image_negative_entry(&q) == Some((0, 0, rat(-3, 16)))
        && elapsed < Duration::from_secs(1);
    outcome(ok, format!("not_member via ratio, p(A)_11 = -3/16, {elapsed:?}"))
}

fn independence_spectral_failure() -> Outcome {
    let q = p(&[0, -1]);
    let v = check_p2(&q, RatioBudget::default());
    let ratio = check_ratio(&q, RatioBudget::default());
    let a = Matrix2::new(int(0), int(1), int(1), int(0));
    let ok = v.status == Status::NotMember
        && v.witness_matrix.as_ref() == Some(&a)
        && v.image(&q) == Some(Matrix2::new(int(0), int(-1), int(-1), int(0)))
        && ratio.status == RatioStatus::Holds
        && ratio.certificate == Some(RatioCertificate::ZeroCompactification);
    outcome(ok, "spectral fails with circulant witness, ratio holds identically")
}

fn separation_pair() -> Outcome {
    let q = separation();
    let (v, elapsed) = timed(|| check_p2(&q, RatioBudget::default()));
    let screen = p3_necessary_screen(&q);
    let ok = v.status == Status::Member
        && matches!(v.ratio_certificate(), Some(RatioCertificate::LinearOddPart))
        && screen == ScreenOutcome::Fail { index: 2, coefficient: int(-1) }
        && elapsed < Duration::from_secs(1);
    outcome(ok, format!("2x2 member via fast path, 3x3 screen fails on a_2 = -1, {elapsed:?}"))
}

fn circulant_equals_spectral(corpus: &[Polynomial]) -> Outcome {
    let mismatches = corpus
        .iter()
        .filter(|q| check_circulant2(q).status != check_spectral(q).status)
        .count();
    let q = independence();
    let example = check_circulant2(&q).status == Status::Member
        && check_p2(&q, RatioBudget::default()).status == Status::NotMember;
    let members = corpus.iter().filter(|q| check_circulant2(q).status == Status::Member).count();
    outcome(
        mismatches == 0 && example,
        format!("{} polynomials, {members} circulant preservers, {mismatches} mismatches", corpus.len()),
    )
}

fn oracle_consistency(verdicts: &[(Polynomial, MembershipVerdict)]) -> Outcome {
    let mut contradictions = Vec::new();
    let (mut members, mut rejected, mut unknown) = (0, 0, 0);
    for (q, v) in verdicts {
        match v.status {
            Status::Member => {
                members += 1;
                for seed in [1, 2, 3] {
                    if let Some(a) = falsify_random(q, 10_000, seed) {
                        contradictions.push(format!("{q}: sampled violation {a}"));
                    }
                }
            }
            Status::NotMember => {
                rejected += 1;
                let sound = v
                    .witness_matrix
                    .as_ref()
                    .is_some_and(|a| a.is_nonnegative() && horner_matrix_eval(q, a).first_negative_entry().is_some());
                if !sound {
                    contradictions.push(format!("{q}: witness does not violate"));
                }
            }
            Status::Unknown => unknown += 1,
        }
    }
    for c in &contradictions {
        println!("    contradiction: {c}");
    }
    outcome(
        contradictions.is_empty(),
        format!("{members} members x 3 seeds x 10^4 trials, {rejected} witnesses checked, {unknown} unknown"),
    )
}

fn random_params(r: &mut impl Rng) -> PosMatrixParams {
    loop {
        let rho = rat(r.gen_range(1..=64), r.gen_range(1..=16));
        let mu = &rho * rat(r.gen_range(-31..=31), 32);
        let alpha = if mu.is_negative() {
            let lo = -&mu / &rho;
            let hi = &rho / -&mu;
            &lo + (&hi - &lo) * rat(r.gen_range(1..=63), 64)
        } else {
            rat(r.gen_range(1..=64), r.gen_range(1..=16))
        };
        if let Ok(params) = PosMatrixParams::new(rho, mu, alpha) {
            return params;
        }
    }
}

fn closed_form_identity(corpus: &[Polynomial]) -> Outcome {
    let mut r = rng(6);
    let polys: Vec<&Polynomial> = corpus.iter().filter(|q| !q.is_zero()).take(20).collect();
    let mut failures = 0;
    for _ in 0..1000 {
        let params = random_params(&mut r);
        let b = posmatrix_generate(&params);
        if !(b.is_positive() && b.trace() == params.rho() + params.mu() && b.determinant() == params.rho() * params.mu()) {
            failures += 1;
        }
        failures += polys
            .iter()
            .filter(|q| horner_matrix_eval(q, &b) != closed_form_image(q, &params))
            .count();
    }
    outcome(failures == 0, format!("10^3 parameter triples x {} polynomials, {failures} mismatches", polys.len()))
}

fn grid_negative(q: &Polynomial, bound: &Rational) -> Option<Rational> {
    let step = pow2(-8);
    let mut x = Rational::zero();
    while &x <= bound {
        if q.eval(&x).is_negative() {
            return Some(x);
        }
        x += &step;
    }
    None
}

fn halfline_kernel() -> Outcome {
    let mut r = rng(7);
    let mut disagreements = 0;
    let (mut rejected, mut grid_missed) = (0, 0);
    for _ in 0..500 {
        let q = random_polynomial(&mut r, 8);
        let v = check_nonneg_halfline(&q);
        let bound = q.cauchy_bound().unwrap_or_else(|_| Rational::one());
        let grid = grid_negative(&q, &bound);
        if v.member {
            if grid.is_some() {
                disagreements += 1;
            }
        } else {
            rejected += 1;
            let witness_ok = v.witness.as_ref().is_some_and(|x0| !x0.is_negative() && q.eval(x0).is_negative());
            if !witness_ok {
                disagreements += 1;
            }
            if grid.is_none() {
                grid_missed += 1;
            }
        }
    }
    outcome(
        disagreements == 0,
        format!("500 polynomials, {rejected} rejected with negative witnesses, {grid_missed} negative only between grid points, {disagreements} disagreements"),
    )
}

fn polya_szego_precision() -> Outcome {
    let mut worst = Rational::zero();
    let mut ok = true;
    for q in [p(&[2, 0, -6, 0, 5]), p(&[1, 0, -1, 0, 1]), p(&[1, -2, 0, 4])] {
        match polya_szego_certificate(&q, 128) {
            Ok(c) => {
                let residual = c.residual_against(&q);
                let ratio = &residual / q.max_norm();
                ok &= residual == c.residual && ratio <= pow2(-100);
                if ratio > worst {
                    worst = ratio;
                }
            }
            Err(_) => ok = false,
        }
    }
    let log = if worst.is_zero() { "0".to_string() } else { format!("2^{}", np_preserve::rational::floor_log2(&worst)) };
    outcome(ok, format!("three decompositions at 128 bits, worst residual / |p| <= {log}"))
}

fn bernstein_soundness(corpus: &[Polynomial]) -> Outcome {
    let mut r = rng(9);
    let mut extra: Vec<Polynomial> = vec![p(&[1, 1, -1, 1, 1]), p(&[4, 3, -2, 1, 2]), p(&[1, 2, -1, 1, 1, 0, 1])];
    extra.extend(corpus.iter().cloned());
    let (mut bernstein, mut holds, mut failures) = (0, 0, 0);
    for q in &extra {
        let v = check_ratio(q, RatioBudget::default());
        if v.status != RatioStatus::Holds {
            continue;
        }
        holds += 1;
        if let Some(RatioCertificate::Bernstein(cert)) = &v.certificate {
            bernstein += 1;
            if let Err(e) = cert.replay(q) {
                println!("    replay failed for {q}: {e}");
                failures += 1;
            }
        }
        let bp = compactify(q);
        for _ in 0..1000 {
            let t = rat(r.gen_range(1..1 << 20), 1 << 20);
            let s = rat(r.gen_range(1..1 << 20), 1 << 20);
            if bp.eval(&t, &s).is_negative() {
                failures += 1;
                break;
            }
        }
    }
    outcome(
        failures == 0 && bernstein > 0,
        format!("{holds} holding ratio conditions ({bernstein} by subdivision), 10^3 interior samples each, {failures} failures"),
    )
}

fn main() {
    let corpus = corpus();
    let verdicts: Vec<(Polynomial, MembershipVerdict)> =
        corpus.iter().map(|q| (q.clone(), check_p2(q, RatioBudget::default()))).collect();

    let checks: Vec<Check> = vec![
        ("independence, ratio failure", Box::new(independence_ratio_failure)),
        ("independence, spectral failure", Box::new(independence_spectral_failure)),
        ("separation of 3x3 from 2x2", Box::new(separation_pair)),
        ("circulant characterization", Box::new(|| circulant_equals_spectral(&corpus))),
        ("oracle consistency", Box::new(|| oracle_consistency(&verdicts))),
        ("closed-form image identity", Box::new(|| closed_form_identity(&corpus))),
        ("half-line kernel", Box::new(halfline_kernel)),
        ("half-line certificates", Box::new(polya_szego_precision)),
        ("Bernstein certifier soundness", Box::new(|| bernstein_soundness(&corpus))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let (o, elapsed) = timed(check);
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {}: {tag}  {name}: {} [{elapsed:.2?}]", i + 1, o.detail);
        failed += usize::from(!o.pass);
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
