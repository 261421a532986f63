//! Dominant functions `q_β` and certification of `q_β(𝔻) ⊂ P(𝔻)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bounds::{default_constants, BetaConstants, BindingSide, CaseId, QFamily, SubordinationCase};
use crate::curve::{circle_grid, BoundaryCurve, RegionVerdict, TargetRegion, DEFAULT_BOUNDARY_SAMPLES};
use crate::error::{Result, SubordError};
use crate::functions::TargetFunction;
use crate::quadrature::{is_kernel_source, path_integral, DEFAULT_TOL};

/// Margin for endpoint gaps and boundary contact in containment reports.
pub const DEFAULT_CONTAINMENT_MARGIN: f64 = 1e-7;
/// Relative offset used by sharpness probes unless told otherwise.
pub const DEFAULT_SHARPNESS_EPSILON: f64 = 0.01;

const MIN_SAMPLES: usize = 256;

/// `q_β(z)` for a family and kernel source, with quadrature tolerance `tol`.
pub fn q_eval_tol(family: QFamily, source: TargetFunction, beta: f64, z: Complex64, tol: f64) -> Result<Complex64> {
    check_beta(beta)?;
    let c = path_integral(source, z, tol)?.value;
    family.apply(c, beta)
}

/// `q_β(z)` at the default quadrature tolerance.
pub fn q_eval(family: QFamily, source: TargetFunction, beta: f64, z: Complex64) -> Result<Complex64> {
    q_eval_tol(family, source, beta, z, DEFAULT_TOL)
}

fn check_beta(beta: f64) -> Result<()> {
    if beta > 0.0 && beta.is_finite() {
        Ok(())
    } else {
        Err(SubordError::InvalidInput(format!("beta must be positive and finite, got {beta}")))
    }
}

/// Kernel integral `c(e^{iθ_k})` on the standard circle grid.
///
/// Independent of `β`, so one set of samples serves every `β` of a case.
#[derive(Debug, Clone)]
pub struct KernelSamples {
    pub source: TargetFunction,
    pub params: Vec<f64>,
    pub values: Vec<Complex64>,
    /// `c(1)` and `c(−1)`.
    pub c_plus: f64,
    pub c_minus: f64,
}

impl KernelSamples {
    pub fn new(source: TargetFunction, n: usize, tol: f64) -> Result<Self> {
        if !is_kernel_source(source) {
            return Err(SubordError::UnsupportedSource(source.name()));
        }
        if n < MIN_SAMPLES {
            return Err(SubordError::InvalidInput(format!(
                "need at least {MIN_SAMPLES} boundary samples, got {n}"
            )));
        }
        let grid = circle_grid(n);
        let mut values = vec![Complex64::new(0.0, 0.0); n];
        // c has real Taylor coefficients: fill the lower half by conjugation
        for k in 0..=n / 2 {
            values[k] = path_integral(source, grid[k].1, tol)?.value;
            if k > 0 && k < n - k {
                values[n - k] = values[k].conj();
            }
        }
        let c_plus = path_integral(source, Complex64::new(1.0, 0.0), tol)?.value.re;
        let c_minus = path_integral(source, Complex64::new(-1.0, 0.0), tol)?.value.re;
        Ok(KernelSamples {
            source,
            params: grid.into_iter().map(|(t, _)| t).collect(),
            values,
            c_plus,
            c_minus,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Boundary curve `q_β(e^{iθ})` of a case's dominant.
pub fn dominant_boundary(case: &SubordinationCase, beta: f64, n: usize, tol: f64) -> Result<BoundaryCurve> {
    check_beta(beta)?;
    let kernel = KernelSamples::new(case.source, n, tol)?;
    let points = kernel
        .values
        .iter()
        .map(|&c| case.family.apply(c, beta))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundaryCurve {
        params: kernel.params,
        points,
        closed: true,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ContainmentVerdict {
    /// Every sample strictly inside, both endpoint gaps above the margin.
    Contained,
    /// Some sample outside beyond the margin, an endpoint gap below `−δ`,
    /// or a pole of the dominant on the circle.
    Violated,
    /// Touches the boundary within the margin and nowhere crosses it.
    Binding,
}

impl ContainmentVerdict {
    pub fn name(self) -> &'static str {
        match self {
            ContainmentVerdict::Contained => "Contained",
            ContainmentVerdict::Violated => "Violated",
            ContainmentVerdict::Binding => "Binding",
        }
    }
}

impl std::fmt::Display for ContainmentVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// The dominant sample closest to (or farthest beyond) the target boundary.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WorstSample {
    pub theta: f64,
    pub re: f64,
    pub im: f64,
    /// Distance to the target boundary, negative outside.
    pub signed_distance: f64,
    pub region: RegionVerdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContainmentReport {
    pub case: CaseId,
    pub beta: f64,
    pub verdict: ContainmentVerdict,
    pub worst_sample: Option<WorstSample>,
    /// `P(1) − q_β(1)`.
    pub endpoint_gap_plus: f64,
    /// `q_β(−1) − P(−1)`.
    pub endpoint_gap_minus: f64,
    pub n_samples: usize,
    pub margin: f64,
    pub outside: usize,
    pub on_boundary: usize,
    pub diagnostic: Option<String>,
}

impl ContainmentReport {
    pub fn min_endpoint_gap(&self) -> f64 {
        self.endpoint_gap_plus.min(self.endpoint_gap_minus)
    }
}

/// Sampling parameters for containment checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContainmentOptions {
    pub samples: usize,
    pub margin: f64,
    pub tol: f64,
}

impl Default for ContainmentOptions {
    fn default() -> Self {
        ContainmentOptions {
            samples: DEFAULT_BOUNDARY_SAMPLES,
            margin: DEFAULT_CONTAINMENT_MARGIN,
            tol: DEFAULT_TOL,
        }
    }
}

/// Certify `q_β(𝔻) ⊂ P(𝔻)` on `n` boundary samples with margin `delta`.
pub fn verify_containment(case: &SubordinationCase, beta: f64, n: usize, delta: f64) -> Result<ContainmentReport> {
    verify_containment_with(
        case,
        beta,
        &ContainmentOptions {
            samples: n,
            margin: delta,
            tol: DEFAULT_TOL,
        },
    )
}

pub fn verify_containment_with(
    case: &SubordinationCase,
    beta: f64,
    opts: &ContainmentOptions,
) -> Result<ContainmentReport> {
    check_beta(beta)?;
    if !(opts.margin > 0.0) {
        return Err(SubordError::InvalidInput(format!("margin must be positive, got {}", opts.margin)));
    }
    let kernel = KernelSamples::new(case.source, opts.samples, opts.tol)?;
    let region = TargetRegion::new(case.target, opts.samples)?;
    containment_from_samples(case, beta, &kernel, &region, opts.margin)
}

/// Containment check against precomputed kernel samples and target region.
pub fn containment_from_samples(
    case: &SubordinationCase,
    beta: f64,
    kernel: &KernelSamples,
    region: &TargetRegion,
    delta: f64,
) -> Result<ContainmentReport> {
    check_beta(beta)?;
    if kernel.source != case.source || region.id() != case.target {
        return Err(SubordError::InvalidInput(format!(
            "samples for {} -> {} do not match case {}",
            kernel.source,
            region.id(),
            case.id()
        )));
    }
    let mut report = ContainmentReport {
        case: case.id(),
        beta,
        verdict: ContainmentVerdict::Contained,
        worst_sample: None,
        endpoint_gap_plus: f64::NAN,
        endpoint_gap_minus: f64::NAN,
        n_samples: kernel.len(),
        margin: delta,
        outside: 0,
        on_boundary: 0,
        diagnostic: None,
    };

    let endpoint = |c: f64| case.family.apply(Complex64::new(c, 0.0), beta).map(|q| q.re);
    match (endpoint(kernel.c_plus), endpoint(kernel.c_minus)) {
        (Ok(qp), Ok(qm)) => {
            report.endpoint_gap_plus = case.target.at_plus1() - qp;
            report.endpoint_gap_minus = qm - case.target.at_minus1();
        }
        (Err(e), _) | (_, Err(e)) => {
            report.verdict = ContainmentVerdict::Violated;
            report.diagnostic = Some(e.to_string());
            return Ok(report);
        }
    }
    // the reciprocal dominant crossed its pole between 0 and 1
    if case.family == QFamily::Theta && kernel.c_plus >= beta {
        report.verdict = ContainmentVerdict::Violated;
        report.diagnostic = Some(format!("1 - c(1)/beta = {:e} <= 0: dominant has a pole in the disk", 1.0 - kernel.c_plus / beta));
        return Ok(report);
    }

    let n = kernel.len();
    let mut worst: Option<WorstSample> = None;
    // symmetric about the real axis: the upper half (with both endpoints) suffices
    for k in 0..=n / 2 {
        let theta = kernel.params[k];
        let q = match case.family.apply(kernel.values[k], beta) {
            Ok(q) => q,
            Err(e) => {
                report.verdict = ContainmentVerdict::Violated;
                report.diagnostic = Some(format!("theta = {theta}: {e}"));
                return Ok(report);
            }
        };
        let cls = region.classify(q, delta)?;
        let weight = if k == 0 || 2 * k == n { 1 } else { 2 };
        match cls.verdict {
            RegionVerdict::Outside => report.outside += weight,
            RegionVerdict::Indeterminate => report.on_boundary += weight,
            RegionVerdict::Inside => {}
        }
        let signed = if cls.winding == 1 { cls.distance } else { -cls.distance };
        if worst.map_or(true, |w| signed < w.signed_distance) {
            worst = Some(WorstSample {
                theta,
                re: q.re,
                im: q.im,
                signed_distance: signed,
                region: cls.verdict,
            });
        }
    }
    report.worst_sample = worst;

    let gap = report.min_endpoint_gap();
    report.verdict = if report.outside > 0 || gap < -delta {
        ContainmentVerdict::Violated
    } else if gap <= delta || report.on_boundary > 0 {
        ContainmentVerdict::Binding
    } else {
        ContainmentVerdict::Contained
    };
    Ok(report)
}

/// Containment verdicts just below, at, and just above the sharp bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SharpnessReport {
    pub case: CaseId,
    pub beta_sharp: f64,
    pub epsilon: f64,
    pub below: ContainmentVerdict,
    pub at: ContainmentVerdict,
    pub above: ContainmentVerdict,
    pub binding_side: BindingSide,
    /// `β₁ = β₂`: both endpoints touch at the sharp bound.
    pub tied: bool,
    /// `|q_{β*}(s) − P(s)|` at the binding endpoint(s).
    pub binding_residual: f64,
    pub passed: bool,
    pub failure: Option<String>,
}

/// Residual `|q_β(s) − P(s)|` at the binding endpoint(s) of a case.
pub fn binding_residual(case: &SubordinationCase, k: &BetaConstants, beta: f64, tol: f64) -> Result<f64> {
    let side = case.binding_side(k);
    let mut sides = vec![side];
    if case.endpoints_tied(k) {
        sides = vec![BindingSide::Minus, BindingSide::Plus];
    }
    let mut worst: f64 = 0.0;
    for s in sides {
        let z = Complex64::new(s.endpoint(), 0.0);
        let q = q_eval_tol(case.family, case.source, beta, z, tol)?;
        worst = worst.max((q - case.target.eval(z)).norm());
    }
    Ok(worst)
}

pub fn sharpness_probe(case: &SubordinationCase, epsilon: f64) -> Result<SharpnessReport> {
    sharpness_probe_with(case, epsilon, &ContainmentOptions::default())
}

pub fn sharpness_probe_with(
    case: &SubordinationCase,
    epsilon: f64,
    opts: &ContainmentOptions,
) -> Result<SharpnessReport> {
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return Err(SubordError::InvalidInput(format!("epsilon must lie in (0, 0.5), got {epsilon}")));
    }
    let k = default_constants()?;
    let beta = case.beta_sharp(&k);
    let kernel = KernelSamples::new(case.source, opts.samples, opts.tol)?;
    let region = TargetRegion::new(case.target, opts.samples)?;
    let run = |b: f64| containment_from_samples(case, b, &kernel, &region, opts.margin).map(|r| r.verdict);
    let below = run(beta * (1.0 - epsilon))?;
    let at = run(beta)?;
    let above = run(beta * (1.0 + epsilon))?;
    let residual = binding_residual(case, &k, beta, opts.tol)?;

    let expected = (
        ContainmentVerdict::Violated,
        ContainmentVerdict::Binding,
        ContainmentVerdict::Contained,
    );
    let mut failure = None;
    if (below, at, above) != expected {
        failure = Some(format!("unexpected verdicts ({below}, {at}, {above})"));
    } else if !(residual <= 1e-8) {
        failure = Some(format!("binding endpoint residual {residual:e} exceeds 1e-8"));
    }
    Ok(SharpnessReport {
        case: case.id(),
        beta_sharp: beta,
        epsilon,
        below,
        at,
        above,
        binding_side: case.binding_side(&k),
        tied: case.endpoints_tied(&k),
        binding_residual: residual,
        passed: failure.is_none(),
        failure,
    })
}

/// Grid minima of the quantities the dominant construction relies on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub source: TargetFunction,
    pub grid_n: usize,
    /// `min Re(zQ′/Q)` with `Q = φ − 1`.
    pub starlike_min: f64,
    /// `min Re(zh′/Q)`; equal to `starlike_min` since `h = 1 + Q`.
    pub re_ratio_min: f64,
    /// `min Re φ`.
    pub caratheodory_min: f64,
    pub h_is_one_plus_q: bool,
}

impl LemmaReport {
    pub fn holds(&self, tol: f64) -> bool {
        self.starlike_min > -tol && self.re_ratio_min > -tol && self.caratheodory_min > -tol
    }
}

/// Largest radius of the polar grid used by [`lemma_hypotheses`].
pub const LEMMA_MAX_RADIUS: f64 = 0.999;

/// Minima over a `grid_n × grid_n` polar grid with radii up to 0.999.
pub fn lemma_hypotheses(source: TargetFunction, grid_n: usize) -> Result<LemmaReport> {
    if !is_kernel_source(source) {
        return Err(SubordError::UnsupportedSource(source.name()));
    }
    if grid_n < 64 {
        return Err(SubordError::InvalidInput(format!("grid_n must be at least 64, got {grid_n}")));
    }
    let one = Complex64::new(1.0, 0.0);
    // zQ′/Q → 1 and φ → 1 at the origin
    let mut starlike_min: f64 = 1.0;
    let mut re_ratio_min: f64 = 1.0;
    let mut caratheodory_min: f64 = 1.0;
    for i in 1..=grid_n {
        let r = LEMMA_MAX_RADIUS * i as f64 / grid_n as f64;
        for (_, u) in circle_grid(grid_n) {
            let z = u * r;
            let phi = source.eval(z);
            let q = phi - one;
            let dq = source.deriv(z);
            let starlike = (z * dq / q).re;
            // h = 1 + Q, so zh′/Q is the same quotient
            let ratio = (z * source.deriv(z) / (source.eval(z) - one)).re;
            starlike_min = starlike_min.min(starlike);
            re_ratio_min = re_ratio_min.min(ratio);
            caratheodory_min = caratheodory_min.min(phi.re);
        }
    }
    Ok(LemmaReport {
        source,
        grid_n,
        starlike_min,
        re_ratio_min,
        caratheodory_min,
        h_is_one_plus_q: true,
    })
}
