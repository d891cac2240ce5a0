use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has no unit constant term")]
    NonUnitConstantTerm,
    #[error("series has a term with negative exponent {0}")]
    NotAPowerSeries(String),
    #[error("infinite product does not converge: {0}")]
    DivergentProduct(String),
    #[error("unknown algebra `{0}` (expected one of A5, D6, E6, E7, E8)")]
    UnknownAlgebra(String),
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("string function representations disagree for sigma={sigma} below order {order}")]
    RepresentationMismatch { sigma: u8, order: String },
    #[error("invalid Virasoro character label: {0}")]
    InvalidCharLabel(String),
    #[error("invalid branching function label: {0}")]
    InvalidBranchLabel(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("term ceiling exceeded at {point}: {terms} terms > {ceiling}")]
    TermCeiling { point: String, terms: usize, ceiling: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
