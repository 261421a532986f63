//! Kernel integrals `c(z) = ∫₀ᶻ (φ(t) − 1)/t dt` along the segment `[0, z]`
//! and the four real constants built from them.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SubordError};
use crate::functions::{TargetFunction, K_RATIONAL};

pub const DEFAULT_TOL: f64 = 1e-12;
pub const MIN_TOL: f64 = 1e-14;
pub const MAX_SUBDIVISIONS: usize = 400;

/// Below this modulus the BELL and SG kernels use their Taylor expansions.
const SERIES_CUTOFF: f64 = 1e-4;

// Gauss–Kronrod 7/15 abscissae and weights (QUADPACK qk15).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// A quadrature result with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Integral {
    pub value: Complex64,
    pub est_error: f64,
}

/// One 15-point Kronrod panel; the error estimate is `|K15 − G7|`.
fn gk15<F>(f: &F, a: f64, b: f64) -> (Complex64, f64)
where
    F: Fn(f64) -> Complex64,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let sum = f(center - dx) + f(center + dx);
        kronrod += sum * WGK[j];
        if j % 2 == 1 {
            gauss += sum * WG[j / 2];
        }
    }
    let value = kronrod * half;
    let err = ((kronrod - gauss) * half).norm();
    (value, err)
}

struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Globally adaptive Gauss–Kronrod integration of a complex-valued function
/// over the real interval `[a, b]`.
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops to `tol`. Running out of subdivisions returns
/// [`SubordError::NonConvergence`] carrying the best estimate.
pub fn integrate<F>(f: F, a: f64, b: f64, tol: f64, max_subdivisions: usize) -> Result<Integral>
where
    F: Fn(f64) -> Complex64,
{
    let (value, err) = gk15(&f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Panel { a, b, value, err });
    let mut total = value;
    let mut total_err = err;
    let mut subdivisions = 0;
    while total_err > tol {
        if subdivisions >= max_subdivisions {
            return Err(SubordError::NonConvergence {
                value: total,
                est_error: total_err,
                subdivisions,
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // panel cannot be split further in f64
            heap.push(worst);
            return Err(SubordError::NonConvergence {
                value: total,
                est_error: total_err,
                subdivisions,
            });
        }
        let (v1, e1) = gk15(&f, worst.a, mid);
        let (v2, e2) = gk15(&f, mid, worst.b);
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.err;
        heap.push(Panel { a: worst.a, b: mid, value: v1, err: e1 });
        heap.push(Panel { a: mid, b: worst.b, value: v2, err: e2 });
        subdivisions += 1;
        // resum periodically to keep running totals free of cancellation drift
        if subdivisions % 32 == 0 {
            total = heap.iter().map(|p| p.value).sum();
            total_err = heap.iter().map(|p| p.err).sum();
        }
    }
    Ok(Integral {
        value: total,
        est_error: total_err.max(0.0),
    })
}

/// Sources whose kernel integral has a dominant in this toolkit.
pub fn is_kernel_source(src: TargetFunction) -> bool {
    matches!(
        src,
        TargetFunction::Bell | TargetFunction::Sg | TargetFunction::PhiC | TargetFunction::Phi0
    )
}

fn check_source(src: TargetFunction) -> Result<()> {
    if is_kernel_source(src) {
        Ok(())
    } else {
        Err(SubordError::UnsupportedSource(src.name()))
    }
}

/// The integrand `(φ_src(t) − 1)/t`, continued to `t = 0` by `φ′_src(0)`.
pub fn kernel_eval(src: TargetFunction, t: Complex64) -> Result<Complex64> {
    check_source(src)?;
    Ok(kernel(src, t))
}

fn kernel(src: TargetFunction, t: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    match src {
        // exp(e^t − 1) = Σ B_n t^n/n! with Bell numbers 1, 1, 2, 5, 15
        TargetFunction::Bell if t.norm() < SERIES_CUTOFF => {
            one + t * (one + t * (5.0 / 6.0 + t * (5.0 / 8.0)))
        }
        TargetFunction::Bell => ((t.exp() - one).exp() - one) / t,
        // (φ_SG(t) − 1)/t = tanh(t/2)/t
        TargetFunction::Sg if t.norm() < SERIES_CUTOFF => {
            let t2 = t * t;
            0.5 - t2 * (1.0 / 24.0 - t2 * (1.0 / 240.0 - t2 * (17.0 / 40320.0)))
        }
        TargetFunction::Sg => (t * 0.5).tanh() / t,
        TargetFunction::PhiC => t * (2.0 / 3.0) + 4.0 / 3.0,
        TargetFunction::Phi0 => {
            let k = K_RATIONAL;
            (t + k) / ((k - t) * k)
        }
        _ => unreachable!("checked by caller"),
    }
}

/// `c(z) = ∫₀ᶻ (φ_src(t) − 1)/t dt` along the straight segment from 0.
pub fn path_integral(src: TargetFunction, z: Complex64, tol: f64) -> Result<Integral> {
    check_source(src)?;
    if !(tol >= MIN_TOL) {
        return Err(SubordError::InvalidInput(format!(
            "tolerance {tol:e} below the supported minimum {MIN_TOL:e}"
        )));
    }
    if !(z.norm() <= 1.0 + 1e-12) {
        return Err(SubordError::InvalidInput(format!("|z| > 1 for z = {z}")));
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Integral {
            value: z,
            est_error: 0.0,
        });
    }
    let mut out = integrate(|s| kernel(src, z * s) * z, 0.0, 1.0, tol, MAX_SUBDIVISIONS)?;
    if z.im == 0.0 {
        out.value.im = 0.0;
    }
    Ok(out)
}

/// Names of the four integral constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConstantName {
    #[serde(rename = "L")]
    L,
    #[serde(rename = "U")]
    U,
    #[serde(rename = "I_minus")]
    IMinus,
    #[serde(rename = "I_plus")]
    IPlus,
}

impl ConstantName {
    pub fn as_str(self) -> &'static str {
        match self {
            ConstantName::L => "L",
            ConstantName::U => "U",
            ConstantName::IMinus => "I_minus",
            ConstantName::IPlus => "I_plus",
        }
    }
}

impl fmt::Display for ConstantName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegralConstant {
    pub name: ConstantName,
    pub value: f64,
    pub est_error: f64,
}

/// `L = ∫₋₁⁰ (Q(t)−1)/t dt`, `U = ∫₀¹ (Q(t)−1)/t dt` for the Bell-type `Q`,
/// and `I₋`, `I₊` likewise for the sigmoid kernel `tanh(t/2)/t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegralConstants {
    pub l: IntegralConstant,
    pub u: IntegralConstant,
    pub i_minus: IntegralConstant,
    pub i_plus: IntegralConstant,
}

impl IntegralConstants {
    pub fn all(&self) -> [IntegralConstant; 4] {
        [self.l, self.u, self.i_minus, self.i_plus]
    }
}

/// Compute the four constants, each stored as a positive number.
///
/// The integrals over `[−1, 0]` are `−c(−1)`: both the numerator and `t` are
/// negative there, so the integrand is positive.
pub fn integral_constants(tol: f64) -> Result<IntegralConstants> {
    let make = |name, src, z: f64, sign: f64| -> Result<IntegralConstant> {
        let r = path_integral(src, Complex64::new(z, 0.0), tol)?;
        Ok(IntegralConstant {
            name,
            value: sign * r.value.re,
            est_error: r.est_error,
        })
    };
    Ok(IntegralConstants {
        l: make(ConstantName::L, TargetFunction::Bell, -1.0, -1.0)?,
        u: make(ConstantName::U, TargetFunction::Bell, 1.0, 1.0)?,
        i_minus: make(ConstantName::IMinus, TargetFunction::Sg, -1.0, -1.0)?,
        i_plus: make(ConstantName::IPlus, TargetFunction::Sg, 1.0, 1.0)?,
    })
}
