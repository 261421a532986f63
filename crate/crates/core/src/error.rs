use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the subordination toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SubordError {
    #[error("unknown function id `{0}`")]
    UnknownFunction(String),

    #[error("unknown theorem/case `{0}`")]
    UnknownCase(String),

    #[error("{0} is not a supported kernel source (expected BELL, SG, PHI_C or PHI_0)")]
    UnsupportedSource(&'static str),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Adaptive quadrature ran out of subdivisions; the best estimate is kept.
    #[error("quadrature did not converge after {subdivisions} subdivisions (estimate {value}, error {est_error:e})")]
    NonConvergence {
        value: Complex64,
        est_error: f64,
        subdivisions: usize,
    },

    #[error("singularity at z = {z}: {what}")]
    Singularity { z: Complex64, what: &'static str },

    /// Winding number outside {0, 1}: the curve is not a simple positively
    /// oriented loop at the sampling resolution.
    #[error("winding number {winding} around {point} (curve not univalently sampled)")]
    WindingAnomaly { point: Complex64, winding: i64 },

    #[error("bisection bracket [{lo}, {hi}] does not straddle the {side} endpoint condition")]
    BracketFailure {
        lo: f64,
        hi: f64,
        side: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, SubordError>;
