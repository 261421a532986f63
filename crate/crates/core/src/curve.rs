//! Sampled closed curves and winding-number region membership.
//!
//! A region `φ(𝔻)` is represented by samples of its boundary `φ(e^{iθ})`.
//! Membership of a point `w` is decided by the winding number of the
//! boundary around `w`. Each polyline step whose argument increment reaches
//! π/2 is bisected in parameter space using the exact map, so points close to
//! the true boundary are resolved against the curve rather than its chords.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SubordError};
use crate::functions::TargetFunction;

/// Default boundary resolution for region tests.
pub const DEFAULT_BOUNDARY_SAMPLES: usize = 4096;
/// Default distance under which a point is considered on the boundary.
pub const DEFAULT_REGION_MARGIN: f64 = 1e-9;

const MIN_CURVE_SAMPLES: usize = 16;
const MIN_REGION_SAMPLES: usize = 256;
const MAX_REFINE_DEPTH: u32 = 52;

/// Ordered samples `points[k] = γ(params[k])` of a curve.
///
/// Closed curves wrap around: the step after the last sample returns to the
/// first, with parameter `params[0] + 2π`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryCurve {
    pub params: Vec<f64>,
    pub points: Vec<Complex64>,
    pub closed: bool,
}

impl BoundaryCurve {
    /// Sample `f` on the circle `|z| = radius` at `n` equally spaced angles.
    pub fn on_circle<F>(f: F, radius: f64, n: usize) -> Result<Self>
    where
        F: Fn(Complex64) -> Complex64,
    {
        if n < MIN_CURVE_SAMPLES {
            return Err(SubordError::InvalidInput(format!(
                "curve needs at least {MIN_CURVE_SAMPLES} samples, got {n}"
            )));
        }
        let grid = circle_grid(n);
        let points = grid.iter().map(|&(_, u)| f(u * radius)).collect();
        Ok(BoundaryCurve {
            params: grid.into_iter().map(|(t, _)| t).collect(),
            points,
            closed: true,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Minimum distance from `w` to the samples.
    pub fn min_distance(&self, w: Complex64) -> f64 {
        self.points
            .iter()
            .map(|p| (p - w).norm_sqr())
            .fold(f64::INFINITY, f64::min)
            .sqrt()
    }
}

/// Equally spaced angles `θ_k = 2πk/n` with their unit-circle points.
///
/// Points with `k > n/2` are built as conjugates of `n − k`, so the grid is
/// exactly conjugate-symmetric and hits `±1` exactly.
pub fn circle_grid(n: usize) -> Vec<(f64, Complex64)> {
    let mut grid: Vec<(f64, Complex64)> = Vec::with_capacity(n);
    for k in 0..n {
        let theta = TAU * k as f64 / n as f64;
        let z = if 2 * k > n {
            grid[n - k].1.conj()
        } else if 2 * k == n {
            Complex64::new(-1.0, 0.0)
        } else if 4 * k == n {
            Complex64::new(0.0, 1.0)
        } else if k == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::from_polar(1.0, theta)
        };
        grid.push((theta, z));
    }
    grid
}

/// Boundary `φ(e^{2πik/n})`, `k = 0..n`, of the region `φ(𝔻)`.
pub fn target_boundary(id: TargetFunction, n: usize) -> Result<BoundaryCurve> {
    BoundaryCurve::on_circle(|z| id.eval(z), 1.0, n)
}

/// Result of a winding-number evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Winding {
    pub winding: i64,
    /// Distance from the point to the nearest (possibly refined) sample.
    pub min_distance: f64,
    /// Parameter of the nearest sample.
    pub nearest_param: f64,
}

/// Winding number of the closed curve around `w`.
///
/// `gamma` maps a parameter to a curve point and is used to bisect steps
/// whose argument increment is π/2 or more. Increments are accumulated as
/// quarter turns, which is exact once every step subtends less than π/2.
pub fn winding_number<G>(curve: &BoundaryCurve, gamma: G, w: Complex64) -> Winding
where
    G: Fn(f64) -> Complex64,
{
    let n = curve.points.len();
    let mut acc = Accumulator {
        quarters: 0,
        min_d2: f64::INFINITY,
        nearest_param: 0.0,
    };
    for k in 0..n {
        let (t1, p1) = if k + 1 < n {
            (curve.params[k + 1], curve.points[k + 1])
        } else {
            (curve.params[0] + TAU, curve.points[0])
        };
        acc.visit(curve.params[k], curve.points[k] - w);
        acc.step(&gamma, w, curve.params[k], curve.points[k] - w, t1, p1 - w, 0);
    }
    debug_assert_eq!(acc.quarters.rem_euclid(4), 0);
    Winding {
        winding: acc.quarters.div_euclid(4),
        min_distance: acc.min_d2.sqrt(),
        nearest_param: acc.nearest_param,
    }
}

struct Accumulator {
    quarters: i64,
    min_d2: f64,
    nearest_param: f64,
}

impl Accumulator {
    fn visit(&mut self, t: f64, a: Complex64) {
        let d2 = a.norm_sqr();
        if d2 < self.min_d2 {
            self.min_d2 = d2;
            self.nearest_param = t;
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn step<G>(&mut self, gamma: &G, w: Complex64, t0: f64, a: Complex64, t1: f64, b: Complex64, depth: u32)
    where
        G: Fn(f64) -> Complex64,
    {
        let dot = a.re * b.re + a.im * b.im;
        if dot > 0.0 {
            let qa = quadrant(a);
            let qb = quadrant(b);
            self.quarters += match (qb - qa).rem_euclid(4) {
                0 => 0,
                1 => 1,
                3 => -1,
                // two quadrants apart with an acute step: only possible when
                // one end sits exactly on an axis through w
                _ => exact_quarters(a, b),
            };
            return;
        }
        if depth >= MAX_REFINE_DEPTH || t1 - t0 <= f64::EPSILON * t1.abs().max(1.0) {
            self.quarters += exact_quarters(a, b);
            return;
        }
        let tm = 0.5 * (t0 + t1);
        let m = gamma(tm) - w;
        self.visit(tm, m);
        self.step(gamma, w, t0, a, tm, m, depth + 1);
        self.step(gamma, w, tm, m, t1, b, depth + 1);
    }
}

/// Quadrant index of `arg(v)` in `[0, 2π)`, using half-open quarter intervals.
fn quadrant(v: Complex64) -> i64 {
    if v.re > 0.0 && v.im >= 0.0 {
        0
    } else if v.re <= 0.0 && v.im > 0.0 {
        1
    } else if v.re < 0.0 && v.im <= 0.0 {
        2
    } else {
        3
    }
}

/// Quarter-turn count for a step with arbitrary increment in `(−π, π]`.
///
/// Uses the same quadrant classifier as the fast path so the counts
/// telescope; the signed increment only resolves half turns.
fn exact_quarters(a: Complex64, b: Complex64) -> i64 {
    match (quadrant(b) - quadrant(a)).rem_euclid(4) {
        0 => 0,
        1 => 1,
        3 => -1,
        _ => {
            if a.re * b.im - a.im * b.re >= 0.0 {
                2
            } else {
                -2
            }
        }
    }
}

/// Three-way region verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionVerdict {
    Inside,
    Outside,
    /// Within the margin of the boundary; callers decide what that means.
    Indeterminate,
}

/// Region verdict together with the distance evidence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub verdict: RegionVerdict,
    /// Distance to the nearest boundary sample (after refinement).
    pub distance: f64,
    pub winding: i64,
}

impl Classification {
    /// Positive inside, negative outside, zero when indeterminate.
    pub fn signed_distance(&self) -> f64 {
        match self.verdict {
            RegionVerdict::Inside => self.distance,
            RegionVerdict::Outside => -self.distance,
            RegionVerdict::Indeterminate => 0.0,
        }
    }
}

/// The region `φ(𝔻)` of a catalogued function, with its boundary sampled once
/// so that many points can be classified against it.
#[derive(Debug, Clone)]
pub struct TargetRegion {
    id: TargetFunction,
    boundary: BoundaryCurve,
}

impl TargetRegion {
    pub fn new(id: TargetFunction, n: usize) -> Result<Self> {
        if n < MIN_REGION_SAMPLES {
            return Err(SubordError::InvalidInput(format!(
                "region boundary needs at least {MIN_REGION_SAMPLES} samples, got {n}"
            )));
        }
        Ok(TargetRegion {
            id,
            boundary: target_boundary(id, n)?,
        })
    }

    pub fn id(&self) -> TargetFunction {
        self.id
    }

    pub fn boundary(&self) -> &BoundaryCurve {
        &self.boundary
    }

    /// Classify `w` against the region with on-boundary margin `delta`.
    pub fn classify(&self, w: Complex64, delta: f64) -> Result<Classification> {
        if !(delta > 0.0) {
            return Err(SubordError::InvalidInput(format!(
                "margin must be positive, got {delta}"
            )));
        }
        if !(w.re.is_finite() && w.im.is_finite()) {
            return Err(SubordError::InvalidInput(format!("non-finite point {w}")));
        }
        let id = self.id;
        classify_on_curve(&self.boundary, |t| id.eval(Complex64::from_polar(1.0, t)), w, delta)
    }
}

/// Classify `w` against the region bounded by a sampled closed curve.
///
/// Indeterminate when the refined curve passes within `delta` of `w`;
/// otherwise Inside for winding 1 and Outside for winding 0. Any other
/// winding number is an error.
pub fn classify_on_curve<G>(curve: &BoundaryCurve, gamma: G, w: Complex64, delta: f64) -> Result<Classification>
where
    G: Fn(f64) -> Complex64,
{
    let wn = winding_number(curve, gamma, w);
    let verdict = if wn.min_distance < delta {
        RegionVerdict::Indeterminate
    } else {
        match wn.winding {
            1 => RegionVerdict::Inside,
            0 => RegionVerdict::Outside,
            winding => return Err(SubordError::WindingAnomaly { point: w, winding }),
        }
    };
    Ok(Classification {
        verdict,
        distance: wn.min_distance,
        winding: wn.winding,
    })
}

/// Decide whether `w` lies in `φ_id(𝔻)` using `n` boundary samples.
pub fn region_contains(id: TargetFunction, w: Complex64, n: usize, delta: f64) -> Result<RegionVerdict> {
    Ok(TargetRegion::new(id, n)?.classify(w, delta)?.verdict)
}
