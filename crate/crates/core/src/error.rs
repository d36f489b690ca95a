use thiserror::Error;

/// Errors raised by the phase-space library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PhaseError {
    #[error("coefficient tensor is not antisymmetric: |x[{alpha}][{beta}] + x[{beta}][{alpha}]| = {residual:e}")]
    NotAntisymmetric { alpha: usize, beta: usize, residual: f64 },

    #[error("operator is not in qo(S4): residual {residual:e} exceeds {tolerance:e}")]
    NotQuasiOrthogonalAlgebra { residual: f64, tolerance: f64 },

    #[error("initial momentum must be real, imaginary part {residual:e} exceeds {tolerance:e}")]
    NotReal { residual: f64, tolerance: f64 },

    #[error("non-finite coordinate encountered")]
    NonFinite,

    #[error("index {0} out of range 0..=3")]
    IndexOutOfRange(usize),

    #[error("spatial index {0} out of range 1..=3")]
    SpatialIndexOutOfRange(usize),

    #[error("angular generator M{0}{0} is degenerate, indices must differ")]
    DegenerateGenerator(usize),

    #[error("unknown generator label `{0}`")]
    UnknownGenerator(String),

    #[error("cannot parse complex number `{0}`")]
    ParseComplex(String),

    #[error("step count must be at least 1")]
    ZeroSteps,
}

pub type Result<T, E = PhaseError> = std::result::Result<T, E>;
