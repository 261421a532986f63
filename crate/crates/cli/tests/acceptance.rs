//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::f64::consts::SQRT_2;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use subord_core::bounds::{bisection_thresholds, default_constants, find_case, BetaConstants};
use subord_core::curve::{RegionVerdict, TargetRegion};
use subord_core::functions::K_RATIONAL;
use subord_core::quadrature::DEFAULT_TOL;
use subord_core::starlike::{corollary_check, AnalyticFunctionSpec, DEFAULT_R_MAX};
use subord_core::subordination::sharpness_probe;
use subord_core::{
    integral_constants, lemma_hypotheses, list_cases, path_integral, BindingSide, Complex64, TargetFunction, Theorem,
};

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome {
            passed,
            detail: detail.into(),
        }
    }
}

fn constants() -> BetaConstants {
    default_constants().expect("integral constants")
}

fn criterion_1_constant_reproduction() -> Outcome {
    let start = Instant::now();
    let k = BetaConstants::from(&integral_constants(DEFAULT_TOL).expect("constants"));
    let mut failures = Vec::new();
    for c in list_cases() {
        if !c.matches_approx(&k) {
            failures.push(format!(
                "{} computed {:.9} published {} |delta| {:.2e} > {:e}",
                c.id(),
                c.beta_sharp(&k),
                c.paper_approx,
                c.approx_delta(&k),
                c.last_digit_unit()
            ));
        }
    }
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(5);
    let detail = if failures.is_empty() {
        format!("{} entries within one last-digit unit in {:.2?}", list_cases().len(), elapsed)
    } else {
        format!(
            "{} of {} entries off by more than one last-digit unit ({:.2?}): {}",
            failures.len(),
            list_cases().len(),
            elapsed,
            failures.join("; ")
        )
    };
    Outcome::new(failures.is_empty() && fast, detail)
}

fn criterion_2_symmetry() -> Outcome {
    let k = constants();
    let d = (k.i_minus - k.i_plus).abs();
    Outcome::new(d <= 1e-12, format!("|I- - I+| = {d:.2e}"))
}

fn criterion_3_cross_consistency() -> Outcome {
    let k = constants();
    let b = |t, l| find_case(t, l).expect("case").beta_sharp(&k);
    let checks = [
        ("sqrt2*T1a - U", SQRT_2 * b(Theorem::T1, 'a') - k.u),
        ("2*T1c - U", 2.0 * b(Theorem::T1, 'c') - k.u),
        ("(2-sqrt2)*T4a - I-", (2.0 - SQRT_2) * b(Theorem::T4, 'a') - k.i_minus),
        ("(2/3)*T4b - I-", (2.0 / 3.0) * b(Theorem::T4, 'b') - k.i_minus),
    ];
    let worst = checks.iter().map(|(_, d)| d.abs()).fold(0.0, f64::max);
    let detail = checks
        .iter()
        .map(|(n, d)| format!("{n} = {d:.1e}"))
        .collect::<Vec<_>>()
        .join(", ");
    Outcome::new(worst <= 1e-12, detail)
}

fn criterion_4_oracle_equivalence() -> Outcome {
    let k = constants();
    let mut worst = (0.0, String::new());
    for c in list_cases() {
        match bisection_thresholds(c, 1e-11) {
            Ok(r) => {
                let d = (r.beta - c.beta_sharp(&k)).abs();
                if d > worst.0 {
                    worst = (d, c.id().to_string());
                }
            }
            Err(e) => return Outcome::new(false, format!("{}: {e}", c.id())),
        }
    }
    Outcome::new(
        worst.0 <= 1e-8,
        format!("max |bisection - closed form| = {:.2e} ({})", worst.0, worst.1),
    )
}

fn criterion_5_sharpness() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut worst_residual: f64 = 0.0;
    for c in list_cases() {
        match sharpness_probe(c, 0.01) {
            Ok(r) => {
                worst_residual = worst_residual.max(r.binding_residual);
                if !r.passed {
                    failures.push(format!("{}: {}", c.id(), r.failure.unwrap_or_default()));
                }
            }
            Err(e) => failures.push(format!("{}: {e}", c.id())),
        }
    }
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(60);
    let mut detail = format!(
        "{} cases bracketed, max binding residual {:.1e}, {:.1?}",
        list_cases().len() - failures.len(),
        worst_residual,
        elapsed
    );
    if !failures.is_empty() {
        detail.push_str(&format!("; failures: {}", failures.join("; ")));
    }
    if !fast {
        detail.push_str("; over the 60 s budget");
    }
    Outcome::new(failures.is_empty() && fast, detail)
}

fn criterion_6_lemma_hypotheses() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for src in [TargetFunction::Bell, TargetFunction::Sg, TargetFunction::PhiC, TargetFunction::Phi0] {
        let r = lemma_hypotheses(src, 128).expect("lemma grid");
        ok &= r.starlike_min > -1e-9 && r.re_ratio_min > -1e-9 && r.caratheodory_min > -1e-9;
        parts.push(format!(
            "{src}: Re(zQ'/Q) >= {:.3e}, Re(phi) >= {:.3e}",
            r.starlike_min, r.caratheodory_min
        ));
    }
    Outcome::new(ok, parts.join("; "))
}

fn criterion_7_closed_form_quadrature() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let k = K_RATIONAL;
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let z = Complex64::from_polar(rng.gen_range(0.0..0.999), rng.gen_range(0.0..std::f64::consts::TAU));
        let c = path_integral(TargetFunction::PhiC, z, DEFAULT_TOL).expect("quadrature").value;
        worst = worst.max((c - (4.0 * z / 3.0 + z * z / 3.0)).norm());
        let c = path_integral(TargetFunction::Phi0, z, DEFAULT_TOL).expect("quadrature").value;
        let exact = -z / k - 2.0 * (1.0 - z / k).ln();
        worst = worst.max((c - exact).norm());
    }
    Outcome::new(worst <= 1e-11, format!("max deviation {worst:.2e} over 50 points per source"))
}

fn criterion_8_corollary_property() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let cases: Vec<_> = list_cases()
        .iter()
        .filter(|c| matches!(c.theorem, Theorem::T1 | Theorem::T4) && c.has_starlike_corollary())
        .collect();
    let k = constants();
    let (mut holds, mut fails, mut singular) = (0, 0, 0);
    let mut counterexamples = Vec::new();
    for i in 0..100 {
        let degree = rng.gen_range(2..=8);
        let coeffs: Vec<f64> = (2..=degree).map(|_| rng.gen_range(-0.2..=0.2)).collect();
        let f = AnalyticFunctionSpec::from_real(&coeffs).expect("polynomial");
        for c in &cases {
            let r = corollary_check(&f, c.beta_sharp(&k), c, DEFAULT_R_MAX, 256).expect("corollary check");
            match r.verdict {
                subord_core::CorollaryVerdict::HypothesisHolds => holds += 1,
                subord_core::CorollaryVerdict::HypothesisFails => fails += 1,
                subord_core::CorollaryVerdict::Singular => singular += 1,
            }
            if r.is_counterexample() {
                counterexamples.push(format!("f#{i} {coeffs:?} with {}", c.id()));
            }
        }
    }
    let mut detail = format!(
        "{} checks over {} corollaries: {holds} hypothesis holds, {fails} fails, {singular} singular, {} counterexamples",
        100 * cases.len(),
        cases.len(),
        counterexamples.len()
    );
    if !counterexamples.is_empty() {
        detail.push_str(&format!(": {}", counterexamples.join("; ")));
    }
    Outcome::new(counterexamples.is_empty() && cases.len() == 13, detail)
}

fn criterion_9_figures() -> Outcome {
    let k = constants();
    let dir = tempfile::tempdir().expect("tempdir");
    let mut parts = Vec::new();
    let mut ok = true;
    for (th, l) in [(Theorem::T1, 'a'), (Theorem::T1, 'b'), (Theorem::T4, 'b'), (Theorem::T4, 'f')] {
        let case = find_case(th, l).expect("case");
        let beta = case.beta_sharp(&k);
        let path = dir.path().join(format!("{}.csv", case.id()));
        let status = Command::new(env!("CARGO_BIN_EXE_subord"))
            .args(["plot", "--theorem", th.name(), "--case", &l.to_string()])
            .args(["--beta", &beta.to_string(), "--out"])
            .arg(&path)
            .args(["--format", "csv"])
            .output()
            .expect("run subord plot");
        if !status.status.success() {
            ok = false;
            parts.push(format!("{}: plot exited with {}", case.id(), status.status));
            continue;
        }
        let mut reader = csv::Reader::from_path(&path).expect("csv");
        let mut q = Vec::new();
        for rec in reader.records() {
            let rec = rec.expect("row");
            if &rec[0] == "q" {
                let num = |i: usize| rec[i].parse::<f64>().expect("number");
                q.push((num(1), Complex64::new(num(2), num(3))));
            }
        }
        let region = TargetRegion::new(case.target, 4096).expect("region");
        let mut sides = vec![case.binding_side(&k)];
        if case.endpoints_tied(&k) {
            sides = vec![BindingSide::Minus, BindingSide::Plus];
        }
        let endpoint_theta = |s: BindingSide| if s == BindingSide::Plus { 0.0 } else { std::f64::consts::PI };
        let mut touch: f64 = 0.0;
        let mut min_inside = f64::INFINITY;
        let mut bad = 0;
        for &(theta, w) in &q {
            if let Some(&s) = sides.iter().find(|&&s| (theta - endpoint_theta(s)).abs() < 1e-12) {
                let d = (w - case.target.eval(Complex64::new(s.endpoint(), 0.0))).norm();
                touch = touch.max(d);
                if d > 1e-6 {
                    bad += 1;
                }
                continue;
            }
            let cls = region.classify(w, 1e-12).expect("classify");
            if cls.verdict == RegionVerdict::Inside {
                min_inside = min_inside.min(cls.distance);
            } else {
                bad += 1;
            }
        }
        ok &= bad == 0 && !q.is_empty();
        parts.push(format!(
            "{}: {} points, touch {:.1e} at {}, otherwise inside by >= {:.1e}",
            case.id(),
            q.len(),
            touch,
            sides.iter().map(|s| s.name()).collect::<Vec<_>>().join("+"),
            min_inside
        ));
    }
    Outcome::new(ok, parts.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("constant reproduction", criterion_1_constant_reproduction),
        ("symmetry", criterion_2_symmetry),
        ("cross-consistency", criterion_3_cross_consistency),
        ("oracle equivalence", criterion_4_oracle_equivalence),
        ("sharpness bracketing", criterion_5_sharpness),
        ("lemma hypotheses", criterion_6_lemma_hypotheses),
        ("closed-form quadrature", criterion_7_closed_form_quadrature),
        ("corollary property", criterion_8_corollary_property),
        ("figure reproduction", criterion_9_figures),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        println!(
            "criterion {} {:<24} {} ({:.1?}) {}",
            i + 1,
            name,
            if out.passed { "PASS" } else { "FAIL" },
            start.elapsed(),
            out.detail
        );
        if !out.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {} failed", criteria.len() - failed, failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
