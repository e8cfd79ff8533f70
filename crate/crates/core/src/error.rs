use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: Im(tau) = {im_tau} is below the evaluation threshold {min}")]
    Domain { im_tau: f64, min: f64 },

    #[error("overflow: leading theta term exponent {exponent:.1} at z = {z} exceeds the representable range")]
    Overflow { z: Complex64, exponent: f64 },

    #[error("pole: {what} is singular at z = {z}")]
    Pole { what: &'static str, z: Complex64 },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("{what} did not converge after {iterations} iterations")]
    NonConvergence { what: &'static str, iterations: usize },

    #[error("unknown suite identifier `{0}`")]
    UnknownSuite(String),

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("point is off the curve: max relation residual {residual:e}")]
    OffCurve { residual: f64 },

    #[error("no sign variant of Omega matches the intrinsic form (best residual {best:e})")]
    BranchInconsistency { best: f64 },

    #[error("calibration failure: {0}")]
    Calibration(String),

    #[error("degenerate modulus: tau = {tau} is equivalent to i, the zeros of wp coincide")]
    DegenerateTau { tau: Complex64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("incompatible shapes: {0}")]
    Shape(String),
}
