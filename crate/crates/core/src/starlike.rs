//! Normalized polynomials `f(z) = z + Σ aₙ zⁿ` and the starlikeness
//! corollaries of the subordination bounds.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bounds::{CaseId, QFamily, SubordinationCase};
use crate::curve::{circle_grid, winding_number, BoundaryCurve, RegionVerdict, TargetRegion};
use crate::error::{Result, SubordError};
use crate::functions::TargetFunction;

/// Highest supported degree `N`.
pub const MAX_DEGREE: usize = 64;
/// Default radius of the sampled disk.
pub const DEFAULT_R_MAX: f64 = 0.999;
/// Number of concentric circles sampled up to `r_max`.
pub const DEFAULT_CIRCLES: usize = 8;
/// Values of `|f(z)/z|` or `|f′(z)|` below this count as zeros.
const ZERO_GUARD: f64 = 1e-13;
/// Margin for region tests of sampled values.
const SAMPLE_MARGIN: f64 = 1e-9;

/// `f(z) = z + a₂z² + … + a_N z^N`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalyticFunctionSpec {
    /// `a₂, …, a_N`.
    coeffs: Vec<Complex64>,
}

impl AnalyticFunctionSpec {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() + 1 > MAX_DEGREE {
            return Err(SubordError::InvalidInput(format!(
                "degree {} exceeds the maximum {MAX_DEGREE}",
                coeffs.len() + 1
            )));
        }
        if coeffs.iter().any(|a| !(a.re.is_finite() && a.im.is_finite())) {
            return Err(SubordError::InvalidInput("non-finite coefficient".into()));
        }
        Ok(AnalyticFunctionSpec { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&a| Complex64::new(a, 0.0)).collect())
    }

    /// The identity `f(z) = z`.
    pub fn identity() -> Self {
        AnalyticFunctionSpec { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() + 1
    }

    /// `f(z)/z = 1 + a₂z + … + a_N z^{N−1}`.
    pub fn f_over_z(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| (acc + a) * z) + 1.0
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        z * self.f_over_z(z)
    }

    /// `f′(z) = 1 + Σ n aₙ z^{n−1}`.
    pub fn deriv(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, &a) in self.coeffs.iter().enumerate().rev() {
            acc = (acc + a * (i + 2) as f64) * z;
        }
        acc + 1.0
    }

    /// `f″(z) = Σ n(n−1) aₙ z^{n−2}`.
    pub fn deriv2(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, &a) in self.coeffs.iter().enumerate().rev() {
            let n = (i + 2) as f64;
            acc = acc * z + a * (n * (n - 1.0));
        }
        acc
    }
}

/// `zf′(z)/f(z)`, evaluated as `f′(z)/(f(z)/z)`.
pub fn ratio_zfp_over_f(f: &AnalyticFunctionSpec, z: Complex64) -> Result<Complex64> {
    let g = f.f_over_z(z);
    if g.norm() < ZERO_GUARD {
        return Err(SubordError::Singularity {
            z,
            what: "zero of f(z)/z",
        });
    }
    Ok(f.deriv(z) / g)
}

/// `M(z) = 1 − zf′(z)/f(z) + zf″(z)/f′(z)`.
pub fn m_expr(f: &AnalyticFunctionSpec, z: Complex64) -> Result<Complex64> {
    let d = f.deriv(z);
    if d.norm() < ZERO_GUARD {
        return Err(SubordError::Singularity {
            z,
            what: "critical point of f",
        });
    }
    Ok(1.0 - ratio_zfp_over_f(f, z)? + z * f.deriv2(z) / d)
}

/// Hypothesis expression `1 + β z p′/p^j` with `p = zf′/f`, written through
/// `zp′/p = M`.
pub fn hypothesis_value(f: &AnalyticFunctionSpec, family: QFamily, beta: f64, z: Complex64) -> Result<Complex64> {
    let p = ratio_zfp_over_f(f, z)?;
    let m = m_expr(f, z)?;
    Ok(match family {
        QFamily::Psi => 1.0 + beta * p * m,
        QFamily::Lambda => 1.0 + beta * m,
        QFamily::Theta => {
            if p.norm() < ZERO_GUARD {
                return Err(SubordError::Singularity {
                    z,
                    what: "zero of zf'/f",
                });
            }
            1.0 + beta * m / p
        }
    })
}

/// Location of a zero of a polynomial-like map inside `|z| ≤ r`, if any.
///
/// The zero count comes from the argument principle on the circle `|z| = r`;
/// the location is refined by Newton steps from the smallest grid value.
fn zero_inside<F, D>(g: F, dg: D, r: f64, n: usize) -> Result<Option<Complex64>>
where
    F: Fn(Complex64) -> Complex64,
    D: Fn(Complex64) -> Complex64,
{
    let curve = BoundaryCurve::on_circle(&g, r, n)?;
    let wn = winding_number(&curve, |t| g(Complex64::from_polar(r, t)), Complex64::new(0.0, 0.0));
    if wn.winding == 0 && wn.min_distance >= ZERO_GUARD {
        return Ok(None);
    }
    let grid = circle_grid(n.min(512));
    let mut best = (f64::INFINITY, Complex64::new(0.0, 0.0));
    for j in 1..=64 {
        let rr = r * j as f64 / 64.0;
        for &(_, u) in &grid {
            let v = g(u * rr).norm();
            if v < best.0 {
                best = (v, u * rr);
            }
        }
    }
    let mut z = best.1;
    for _ in 0..50 {
        let d = dg(z);
        if d.norm() == 0.0 {
            break;
        }
        let step = g(z) / d;
        z -= step;
        if step.norm() < 1e-15 {
            break;
        }
    }
    Ok(Some(z))
}

/// A located zero of `f(z)/z` or `f′` in the sampled disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingularityInfo {
    pub what: String,
    pub re: f64,
    pub im: f64,
}

fn find_singularity(f: &AnalyticFunctionSpec, r_max: f64, n: usize, check_critical: bool) -> Result<Option<SingularityInfo>> {
    let deriv_of_f_over_z = |z: Complex64| {
        // (f/z)′ = Σ (n−1) aₙ z^{n−2}
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, &a) in f.coeffs.iter().enumerate().rev() {
            acc = acc * z + a * (i + 1) as f64;
        }
        acc
    };
    if let Some(z) = zero_inside(|z| f.f_over_z(z), deriv_of_f_over_z, r_max, n)? {
        return Ok(Some(SingularityInfo {
            what: "zero of f(z)/z".into(),
            re: z.re,
            im: z.im,
        }));
    }
    if check_critical {
        if let Some(z) = zero_inside(|z| f.deriv(z), |z| f.deriv2(z), r_max, n)? {
            return Ok(Some(SingularityInfo {
                what: "critical point of f".into(),
                re: z.re,
                im: z.im,
            }));
        }
    }
    Ok(None)
}

fn check_sampling(r_max: f64, n: usize) -> Result<()> {
    if !(r_max > 0.0 && r_max < 1.0) {
        return Err(SubordError::InvalidInput(format!("r_max must lie in (0, 1), got {r_max}")));
    }
    if n < 256 {
        return Err(SubordError::InvalidInput(format!("need at least 256 samples per circle, got {n}")));
    }
    Ok(())
}

/// Sample points on `DEFAULT_CIRCLES` circles of radii up to `r_max`.
fn sample_points(r_max: f64, n: usize) -> impl Iterator<Item = Complex64> {
    let grid = circle_grid(n);
    (1..=DEFAULT_CIRCLES).flat_map(move |j| {
        let r = r_max * j as f64 / DEFAULT_CIRCLES as f64;
        grid.clone().into_iter().map(move |(_, u)| u * r)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CorollaryVerdict {
    /// Every hypothesis sample lies inside the source region.
    HypothesisHolds,
    /// Some hypothesis sample is outside or on the source boundary.
    HypothesisFails,
    /// `f(z)/z` or `f′` vanishes in the sampled disk.
    Singular,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorollaryReport {
    pub case: CaseId,
    pub beta: f64,
    pub r_max: f64,
    pub n_samples: usize,
    pub verdict: CorollaryVerdict,
    /// Only evaluated when the hypothesis holds.
    pub conclusion_holds: Option<bool>,
    pub hypothesis_failures: usize,
    pub conclusion_failures: usize,
    pub singularity: Option<SingularityInfo>,
}

impl CorollaryReport {
    /// The corollary is contradicted: hypothesis holds, conclusion fails.
    pub fn is_counterexample(&self) -> bool {
        self.verdict == CorollaryVerdict::HypothesisHolds && self.conclusion_holds == Some(false)
    }
}

/// Test the hypothesis `1 + β z p′/p^j ∈ φ_src(𝔻)` for `p = zf′/f` on circles
/// up to `r_max`; when it holds, check the conclusion `p ∈ P(𝔻)` on the same
/// samples.
pub fn corollary_check(
    f: &AnalyticFunctionSpec,
    beta: f64,
    case: &SubordinationCase,
    r_max: f64,
    n: usize,
) -> Result<CorollaryReport> {
    check_sampling(r_max, n)?;
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(SubordError::InvalidInput(format!("beta must be positive and finite, got {beta}")));
    }
    let mut report = CorollaryReport {
        case: case.id(),
        beta,
        r_max,
        n_samples: n * DEFAULT_CIRCLES,
        verdict: CorollaryVerdict::HypothesisHolds,
        conclusion_holds: None,
        hypothesis_failures: 0,
        conclusion_failures: 0,
        singularity: None,
    };
    if let Some(s) = find_singularity(f, r_max, n, true)? {
        report.verdict = CorollaryVerdict::Singular;
        report.singularity = Some(s);
        return Ok(report);
    }
    let source = TargetRegion::new(case.source, n)?;
    let target = TargetRegion::new(case.target, n)?;
    let mut conclusion = Vec::with_capacity(report.n_samples);
    for z in sample_points(r_max, n) {
        let h = hypothesis_value(f, case.family, beta, z)?;
        if source.classify(h, SAMPLE_MARGIN)?.verdict != RegionVerdict::Inside {
            report.hypothesis_failures += 1;
        }
        conclusion.push(ratio_zfp_over_f(f, z)?);
    }
    if report.hypothesis_failures > 0 {
        report.verdict = CorollaryVerdict::HypothesisFails;
        return Ok(report);
    }
    for p in conclusion {
        if target.classify(p, SAMPLE_MARGIN)?.verdict == RegionVerdict::Outside {
            report.conclusion_failures += 1;
        }
    }
    report.conclusion_holds = Some(report.conclusion_failures == 0);
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassReport {
    pub class: TargetFunction,
    pub r_max: f64,
    pub n_samples: usize,
    pub member: bool,
    /// Smallest signed distance of `zf′/f` to the class boundary, negative outside.
    pub worst_margin: f64,
    pub worst_re: f64,
    pub worst_im: f64,
    pub outside: usize,
    pub singularity: Option<SingularityInfo>,
}

/// Whether `zf′/f` maps the sampled disk `|z| ≤ r_max` into `φ_class(𝔻)`.
pub fn class_membership(f: &AnalyticFunctionSpec, class: TargetFunction, r_max: f64, n: usize) -> Result<ClassReport> {
    check_sampling(r_max, n)?;
    let mut report = ClassReport {
        class,
        r_max,
        n_samples: n * DEFAULT_CIRCLES,
        member: false,
        worst_margin: f64::INFINITY,
        worst_re: 0.0,
        worst_im: 0.0,
        outside: 0,
        singularity: None,
    };
    if let Some(s) = find_singularity(f, r_max, n, false)? {
        report.worst_margin = f64::NEG_INFINITY;
        report.worst_re = s.re;
        report.worst_im = s.im;
        report.singularity = Some(s);
        return Ok(report);
    }
    let region = TargetRegion::new(class, n)?;
    for z in sample_points(r_max, n) {
        let cls = region.classify(ratio_zfp_over_f(f, z)?, SAMPLE_MARGIN)?;
        if cls.verdict != RegionVerdict::Inside {
            report.outside += 1;
        }
        let signed = if cls.winding == 1 { cls.distance } else { -cls.distance };
        if signed < report.worst_margin {
            report.worst_margin = signed;
            report.worst_re = z.re;
            report.worst_im = z.im;
        }
    }
    report.member = report.outside == 0;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{find_case, sharp_beta, Theorem};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn quarter() -> AnalyticFunctionSpec {
        AnalyticFunctionSpec::from_real(&[0.25]).unwrap()
    }

    #[test]
    fn ratio_examples() {
        let id = AnalyticFunctionSpec::identity();
        for z in [c(0.0, 0.0), c(0.3, -0.4), c(-0.9, 0.1)] {
            assert_eq!(ratio_zfp_over_f(&id, z).unwrap(), c(1.0, 0.0));
            assert_eq!(m_expr(&id, z).unwrap(), c(0.0, 0.0));
        }
        assert_eq!(ratio_zfp_over_f(&quarter(), c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        assert_eq!(m_expr(&quarter(), c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        assert_abs_diff_eq!(ratio_zfp_over_f(&quarter(), c(0.5, 0.0)).unwrap().re, 10.0 / 9.0, epsilon = 1e-15);
        assert_abs_diff_eq!(m_expr(&quarter(), c(0.5, 0.0)).unwrap().re, 4.0 / 45.0, epsilon = 1e-15);
    }

    #[test]
    fn singularities_are_reported() {
        // f = z − z²: f/z vanishes at 1, f′ at 1/2
        let f = AnalyticFunctionSpec::from_real(&[-1.0]).unwrap();
        assert!(matches!(ratio_zfp_over_f(&f, c(1.0, 0.0)), Err(SubordError::Singularity { .. })));
        assert!(matches!(m_expr(&f, c(0.5, 0.0)), Err(SubordError::Singularity { .. })));
        let t1a = find_case(Theorem::T1, 'a').unwrap();
        let r = corollary_check(&f, 2.0, t1a, 0.9, 256).unwrap();
        assert_eq!(r.verdict, CorollaryVerdict::Singular);
        let s = r.singularity.unwrap();
        assert_eq!(s.what, "critical point of f");
        assert_abs_diff_eq!(s.re, 0.5, epsilon = 1e-12);
        // f = z + 1.2z²: f/z vanishes at −5/6
        let g = AnalyticFunctionSpec::from_real(&[1.2]).unwrap();
        let r = class_membership(&g, TargetFunction::Sg, 0.9, 256).unwrap();
        assert!(!r.member);
        let s = r.singularity.unwrap();
        assert_abs_diff_eq!(s.re, -5.0 / 6.0, epsilon = 1e-12);
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let f = AnalyticFunctionSpec::new(vec![c(0.1, -0.05), c(-0.07, 0.02), c(0.03, 0.0), c(0.0, 0.01)]).unwrap();
        let z = c(0.31, -0.42);
        let h = 1e-6;
        let fd = (f.eval(z + h) - f.eval(z - h)) / (2.0 * h);
        assert!((fd - f.deriv(z)).norm() < 1e-9);
        let fd2 = (f.deriv(z + h) - f.deriv(z - h)) / (2.0 * h);
        assert!((fd2 - f.deriv2(z)).norm() < 1e-8);
        assert_eq!(f.degree(), 5);
    }

    #[test]
    fn degree_limit() {
        assert!(AnalyticFunctionSpec::from_real(&[0.0; 63]).is_ok());
        assert!(AnalyticFunctionSpec::from_real(&[0.0; 64]).is_err());
        assert!(AnalyticFunctionSpec::from_real(&[f64::NAN]).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn m_vanishes_only_for_the_identity(
            idx in 0usize..7,
            a in -0.1f64..0.1,
            r in 0.1f64..0.8,
            t in 0.0f64..6.28,
        ) {
            prop_assume!(a.abs() > 1e-4);
            let mut coeffs = vec![0.0; 7];
            coeffs[idx] = a;
            let f = AnalyticFunctionSpec::from_real(&coeffs).unwrap();
            let z = Complex64::from_polar(r, t);
            prop_assert!(m_expr(&f, z).unwrap().norm() > 0.0);
            let id = AnalyticFunctionSpec::from_real(&[0.0; 7]).unwrap();
            prop_assert_eq!(m_expr(&id, z).unwrap(), c(0.0, 0.0));
        }
    }

    #[test]
    fn identity_satisfies_every_corollary() {
        let f = AnalyticFunctionSpec::identity();
        let t1b = find_case(Theorem::T1, 'b').unwrap();
        let r = corollary_check(&f, sharp_beta(t1b).unwrap(), t1b, DEFAULT_R_MAX, 256).unwrap();
        assert_eq!(r.verdict, CorollaryVerdict::HypothesisHolds);
        assert_eq!(r.conclusion_holds, Some(true));
        for class in TargetFunction::ALL {
            assert!(class_membership(&f, class, DEFAULT_R_MAX, 256).unwrap().member);
        }
    }

    #[test]
    fn small_perturbation_satisfies_sigmoid_hypothesis() {
        let f = AnalyticFunctionSpec::from_real(&[0.05]).unwrap();
        let t4a = find_case(Theorem::T4, 'a').unwrap();
        let r = corollary_check(&f, 1.5, t4a, DEFAULT_R_MAX, 1024).unwrap();
        assert_eq!(r.verdict, CorollaryVerdict::HypothesisHolds);
        assert_eq!(r.conclusion_holds, Some(true));
    }

    #[test]
    fn large_second_coefficient_is_not_sigmoid_starlike() {
        let f = AnalyticFunctionSpec::from_real(&[0.9]).unwrap();
        let r = class_membership(&f, TargetFunction::Sg, DEFAULT_R_MAX, 512).unwrap();
        assert!(!r.member);
        assert!(r.worst_margin < 0.0);
        assert!(r.singularity.is_none());
        // real-axis scan: the ratio leaves (2/(e+1), 2e/(e+1)) near −1
        let lo = TargetFunction::Sg.at_minus1();
        let x = -0.9;
        assert!(ratio_zfp_over_f(&f, c(x, 0.0)).unwrap().re < lo);
    }

    #[test]
    fn membership_is_nested_in_radius() {
        let fs = [
            AnalyticFunctionSpec::from_real(&[0.3, -0.1]).unwrap(),
            AnalyticFunctionSpec::from_real(&[0.12, 0.05, -0.02]).unwrap(),
            AnalyticFunctionSpec::from_real(&[-0.4]).unwrap(),
        ];
        for f in &fs {
            for class in [TargetFunction::Sg, TargetFunction::PhiC, TargetFunction::PhiQ] {
                let m: Vec<bool> = [0.999, 0.7, 0.4]
                    .iter()
                    .map(|&r| class_membership(f, class, r, 256).unwrap().member)
                    .collect();
                assert!(!m[0] || m[1], "{class}");
                assert!(!m[1] || m[2], "{class}");
            }
        }
    }

    #[test]
    fn no_counterexample_on_coefficient_grid() {
        let t4a = find_case(Theorem::T4, 'a').unwrap();
        let beta = sharp_beta(t4a).unwrap();
        for a2 in [-0.3, -0.1, 0.1, 0.3, 0.5] {
            for a3 in [-0.1, 0.0, 0.1] {
                let f = AnalyticFunctionSpec::from_real(&[a2, a3]).unwrap();
                let r = corollary_check(&f, beta, t4a, DEFAULT_R_MAX, 256).unwrap();
                assert!(!r.is_counterexample(), "a2 = {a2}, a3 = {a3}: {r:?}");
            }
        }
    }
}
