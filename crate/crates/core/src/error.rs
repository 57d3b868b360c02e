use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mass must be positive, got {0}")]
    NonPositiveMass(f64),
    #[error("coupling `a` must be nonzero")]
    ZeroCoupling,
    #[error("splitting `b` must be nonzero for the superposition equations")]
    ZeroSplitting,
    #[error("generator indices must differ, got a = b = {0}")]
    RepeatedIndex(usize),
    #[error("generator index {0} out of range (expected 0..6)")]
    IndexOutOfRange(usize),
    #[error("momentum mismatch: {0}")]
    MomentumMismatch(String),
    #[error("incompatible parameters: {reason} (residual {residual:e})")]
    Incompatible { reason: String, residual: f64 },
    #[error("matrix is not unitary (defect {0:e})")]
    NotUnitary(f64),
    #[error("leading matrix coefficient is singular; companion linearization unavailable")]
    SingularLeadingCoefficient,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
