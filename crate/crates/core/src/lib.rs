//! Sharp bounds for first-order differential subordinations of
//! Carathéodory functions, with independent numerical certification.
//!
//! The crate computes the least `β` for which
//! `1 + β z p′/p^j ≺ φ_src` (j = 0, 1, 2) forces `p ≺ φ_target`, both from
//! closed forms and by bisection on quadrature, and checks the underlying
//! region containment `q_β(𝔻) ⊂ φ_target(𝔻)` by winding numbers.

pub mod bounds;
pub mod curve;
pub mod error;
pub mod functions;
pub mod quadrature;
pub mod starlike;
pub mod subordination;

pub use bounds::{
    list_cases, min_beta_bisection, sharp_beta, BindingSide, CaseId, QFamily, SubordinationCase, Theorem,
};
pub use curve::{region_contains, target_boundary, BoundaryCurve, RegionVerdict, TargetRegion};
pub use error::{Result, SubordError};
pub use functions::TargetFunction;
pub use num_complex::Complex64;
pub use quadrature::{integral_constants, kernel_eval, path_integral, Integral, IntegralConstant, IntegralConstants};
pub use starlike::{AnalyticFunctionSpec, ClassReport, CorollaryReport, CorollaryVerdict};
pub use subordination::{
    lemma_hypotheses, q_eval, sharpness_probe, verify_containment, ContainmentReport, ContainmentVerdict,
    LemmaReport, SharpnessReport,
};
