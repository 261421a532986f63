//! Catalog of the Carathéodory functions used as differential-subordination
//! sources and as target regions.
//!
//! Every entry is normalized with `φ(0) = 1`, has real Taylor coefficients
//! (so `φ(z̄) = conj φ(z)`), positive real part on the unit disk and maps the
//! disk univalently onto a domain starlike with respect to 1.

use std::f64::consts::{E, SQRT_2};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::SubordError;

/// `k = 1 + √2`, the pole scale of the rational function `φ_0`.
pub const K_RATIONAL: f64 = 1.0 + SQRT_2;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// One of the eight catalogued Carathéodory functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TargetFunction {
    /// Lune `z + √(1 + z²)`.
    PhiQ,
    /// Rational `1 + (z/k)(k + z)/(k − z)`, `k = 1 + √2`.
    Phi0,
    /// Cardioid `1 + 4z/3 + 2z²/3`.
    PhiC,
    /// Limaçon `1 + √2 z + z²/2`.
    PhiLim,
    /// Sine `1 + sin z`.
    PhiS,
    /// Bell-number generating function `exp(e^z − 1)`.
    Bell,
    /// Modified sigmoid `2/(1 + e^{−z})`.
    Sg,
    /// Exponential `e^z`.
    Exp,
}

impl TargetFunction {
    pub const ALL: [TargetFunction; 8] = [
        TargetFunction::PhiQ,
        TargetFunction::Phi0,
        TargetFunction::PhiC,
        TargetFunction::PhiLim,
        TargetFunction::PhiS,
        TargetFunction::Bell,
        TargetFunction::Sg,
        TargetFunction::Exp,
    ];

    /// Canonical symbolic name, e.g. `PHI_LIM`.
    pub fn name(self) -> &'static str {
        match self {
            TargetFunction::PhiQ => "PHI_Q",
            TargetFunction::Phi0 => "PHI_0",
            TargetFunction::PhiC => "PHI_C",
            TargetFunction::PhiLim => "PHI_LIM",
            TargetFunction::PhiS => "PHI_S",
            TargetFunction::Bell => "BELL",
            TargetFunction::Sg => "SG",
            TargetFunction::Exp => "EXP",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            TargetFunction::PhiQ => "lune z + sqrt(1 + z^2)",
            TargetFunction::Phi0 => "rational 1 + (z/k)(k + z)/(k - z), k = 1 + sqrt 2",
            TargetFunction::PhiC => "cardioid 1 + 4z/3 + 2z^2/3",
            TargetFunction::PhiLim => "limacon 1 + sqrt(2) z + z^2/2",
            TargetFunction::PhiS => "sine 1 + sin z",
            TargetFunction::Bell => "Bell-type exp(e^z - 1)",
            TargetFunction::Sg => "sigmoid 2/(1 + e^-z)",
            TargetFunction::Exp => "exponential e^z",
        }
    }

    /// Evaluate `φ(z)` on the closed unit disk.
    ///
    /// `PHI_Q` uses the principal square root. On the closed disk
    /// `Re(1 + z²) ≥ 0`, vanishing only at `z = ±i`, so the principal branch
    /// is continuous there and `φ_q(±i) = ±i`.
    pub fn eval(self, z: Complex64) -> Complex64 {
        match self {
            TargetFunction::PhiQ => z + (ONE + z * z).sqrt(),
            TargetFunction::Phi0 => {
                let k = K_RATIONAL;
                ONE + (z / k) * (k + z) / (k - z)
            }
            TargetFunction::PhiC => ONE + z * (4.0 / 3.0) + z * z * (2.0 / 3.0),
            TargetFunction::PhiLim => ONE + z * SQRT_2 + z * z * 0.5,
            TargetFunction::PhiS => ONE + z.sin(),
            TargetFunction::Bell => (z.exp() - ONE).exp(),
            TargetFunction::Sg => Complex64::new(2.0, 0.0) / (ONE + (-z).exp()),
            TargetFunction::Exp => z.exp(),
        }
    }

    /// Analytic derivative `φ′(z)`.
    ///
    /// `φ_q′` is unbounded at `z = ±i`; the returned value is non-finite there.
    pub fn deriv(self, z: Complex64) -> Complex64 {
        match self {
            TargetFunction::PhiQ => ONE + z / (ONE + z * z).sqrt(),
            TargetFunction::Phi0 => {
                let k = K_RATIONAL;
                let d = k - z;
                ((k + z) / d + z * (2.0 * k) / (d * d)) / k
            }
            TargetFunction::PhiC => (ONE + z) * (4.0 / 3.0),
            TargetFunction::PhiLim => z + SQRT_2,
            TargetFunction::PhiS => z.cos(),
            TargetFunction::Bell => {
                let ez = z.exp();
                ez * (ez - ONE).exp()
            }
            TargetFunction::Sg => {
                let em = (-z).exp();
                let d = ONE + em;
                em * 2.0 / (d * d)
            }
            TargetFunction::Exp => z.exp(),
        }
    }

    /// Exact value `φ(1)`, the rightmost real boundary point of `φ(𝔻)`.
    pub fn at_plus1(self) -> f64 {
        match self {
            TargetFunction::PhiQ => 1.0 + SQRT_2,
            TargetFunction::Phi0 => 2.0,
            TargetFunction::PhiC => 3.0,
            TargetFunction::PhiLim => 1.5 + SQRT_2,
            TargetFunction::PhiS => 1.0 + 1f64.sin(),
            TargetFunction::Bell => (E - 1.0).exp(),
            TargetFunction::Sg => 2.0 * E / (E + 1.0),
            TargetFunction::Exp => E,
        }
    }

    /// Exact value `φ(−1)`, the leftmost real boundary point of `φ(𝔻)`.
    pub fn at_minus1(self) -> f64 {
        match self {
            TargetFunction::PhiQ => SQRT_2 - 1.0,
            TargetFunction::Phi0 => 2.0 * SQRT_2 - 2.0,
            TargetFunction::PhiC => 1.0 / 3.0,
            TargetFunction::PhiLim => 1.5 - SQRT_2,
            TargetFunction::PhiS => 1.0 - 1f64.sin(),
            TargetFunction::Bell => (1.0 / E - 1.0).exp(),
            TargetFunction::Sg => 2.0 / (E + 1.0),
            TargetFunction::Exp => 1.0 / E,
        }
    }

    /// Exact endpoint value `φ(s)` for `s = ±1`.
    pub fn at_endpoint(self, plus: bool) -> f64 {
        if plus {
            self.at_plus1()
        } else {
            self.at_minus1()
        }
    }
}

impl fmt::Display for TargetFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TargetFunction {
    type Err = SubordError;

    /// Accepts the canonical names (case-insensitive) and the usual class
    /// suffixes: `q`, `R` (for `φ_0`), `c`, `LC`, `s`, `B`, `SG`, `e`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let up = s.trim().to_ascii_uppercase();
        let id = match up.as_str() {
            "PHI_Q" | "Q" => TargetFunction::PhiQ,
            "PHI_0" | "R" | "0" => TargetFunction::Phi0,
            "PHI_C" | "C" => TargetFunction::PhiC,
            "PHI_LIM" | "LIM" | "LC" => TargetFunction::PhiLim,
            "PHI_S" | "S" => TargetFunction::PhiS,
            "BELL" | "B" => TargetFunction::Bell,
            "SG" | "PHI_SG" => TargetFunction::Sg,
            "EXP" | "E" => TargetFunction::Exp,
            _ => return Err(SubordError::UnknownFunction(s.to_string())),
        };
        Ok(id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn catalog_examples() {
        assert_eq!(TargetFunction::Bell.eval(c(0.0, 0.0)), c(1.0, 0.0));
        let v = TargetFunction::PhiC.eval(c(-1.0, 0.0));
        assert_abs_diff_eq!(v.re, 1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(v.im, 0.0);
        let sg = TargetFunction::Sg.eval(c(1.0, 0.0));
        assert_abs_diff_eq!(sg.re, 2.0 * E / (E + 1.0), epsilon = 1e-15);
        assert_abs_diff_eq!(sg.re, 1.462117, epsilon = 1e-6);
    }

    #[test]
    fn derivative_examples() {
        assert_abs_diff_eq!(TargetFunction::PhiS.deriv(c(0.0, 0.0)).re, 1.0);
        assert_abs_diff_eq!(TargetFunction::Bell.deriv(c(0.0, 0.0)).re, 1.0);
        let d = TargetFunction::PhiLim.deriv(c(1.0, 0.0));
        assert_abs_diff_eq!(d.re, SQRT_2 + 1.0, epsilon = 1e-15);
        // finite-difference cross-check of the same value
        let h = 1e-5;
        let fd = (TargetFunction::PhiLim.eval(c(1.0 + h, 0.0))
            - TargetFunction::PhiLim.eval(c(1.0 - h, 0.0)))
            / (2.0 * h);
        assert!((fd.re - d.re).abs() / d.re < 1e-6);
    }

    #[test]
    fn normalized_at_origin() {
        for id in TargetFunction::ALL {
            let v = id.eval(c(0.0, 0.0));
            assert_abs_diff_eq!(v.re, 1.0, epsilon = 1e-15);
            assert_abs_diff_eq!(v.im, 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn endpoints_match_stored_values() {
        for id in TargetFunction::ALL {
            let p = id.eval(c(1.0, 0.0));
            let m = id.eval(c(-1.0, 0.0));
            assert!((p.re - id.at_plus1()).abs() <= 1e-14, "{id} at +1");
            assert!((m.re - id.at_minus1()).abs() <= 1e-14, "{id} at -1");
            assert!(p.im.abs() <= 1e-14 && m.im.abs() <= 1e-14);
            assert!(id.at_minus1() < 1.0 && 1.0 < id.at_plus1());
        }
    }

    #[test]
    fn lune_branch_at_imaginary_unit() {
        let up = TargetFunction::PhiQ.eval(c(0.0, 1.0));
        let down = TargetFunction::PhiQ.eval(c(0.0, -1.0));
        assert_abs_diff_eq!(up.re, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(up.im, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(down.im, -1.0, epsilon = 1e-15);
        // continuity approaching i along the circle from both sides
        for s in [-1.0, 1.0] {
            let t = std::f64::consts::FRAC_PI_2 + s * 1e-8;
            let v = TargetFunction::PhiQ.eval(Complex64::from_polar(1.0, t));
            assert!((v - up).norm() < 1e-3);
        }
    }

    #[test]
    fn positive_real_part_on_polar_grid() {
        for id in TargetFunction::ALL {
            for i in 0..=200 {
                let r = 0.999 * i as f64 / 200.0;
                for j in 0..200 {
                    let t = std::f64::consts::TAU * j as f64 / 200.0;
                    let v = id.eval(Complex64::from_polar(r, t));
                    assert!(v.re > 0.0, "{id} at r={r} t={t}: {v}");
                }
            }
        }
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let h = 1e-5;
        for id in TargetFunction::ALL {
            for _ in 0..100 {
                let z = Complex64::from_polar(rng.gen_range(0.0..0.95), rng.gen_range(0.0..std::f64::consts::TAU));
                let fd = (id.eval(z + h) - id.eval(z - h)) / (2.0 * h);
                let d = id.deriv(z);
                let rel = (fd - d).norm() / d.norm().max(1e-3);
                assert!(rel <= 1e-6, "{id} at {z}: fd={fd} d={d}");
            }
        }
    }

    #[test]
    fn conjugate_symmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for id in TargetFunction::ALL {
            for _ in 0..50 {
                let z = Complex64::from_polar(rng.gen_range(0.0..1.0), rng.gen_range(0.0..std::f64::consts::TAU));
                let a = id.eval(z.conj());
                let b = id.eval(z).conj();
                assert!((a - b).norm() <= 1e-14 * b.norm().max(1.0), "{id} at {z}");
            }
        }
    }

    #[test]
    fn parse_names_and_aliases() {
        for id in TargetFunction::ALL {
            assert_eq!(id.name().parse::<TargetFunction>().unwrap(), id);
        }
        assert_eq!("sg".parse::<TargetFunction>().unwrap(), TargetFunction::Sg);
        assert_eq!("LC".parse::<TargetFunction>().unwrap(), TargetFunction::PhiLim);
        assert!(matches!(
            "PHI_X".parse::<TargetFunction>(),
            Err(SubordError::UnknownFunction(_))
        ));
    }
}
