use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier must have at least one element")]
    EmptyCarrier,
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("index {index} out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("cell ({row}, {col}) is empty; hyperoperation values must be non-empty")]
    EmptyCell { row: usize, col: usize },
    #[error("table has {got} cells, expected {expected}")]
    Shape { expected: usize, got: usize },
    #[error("subset is over a universe of {got}, expected {expected}")]
    UniverseMismatch { expected: usize, got: usize },
    #[error("cannot fold an empty list of subsets")]
    EmptyFold,
    #[error("coefficient tuple has length {coeffs} but there are {vectors} vectors")]
    LengthMismatch { coeffs: usize, vectors: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("size guard: {0}")]
    SizeGuard(String),
    #[error("unknown structure `{0}`")]
    UnknownStructure(String),
    #[error("enumeration budget exceeded: about {estimate} candidates, budget {budget} (raise HYPERALG_BUDGET)")]
    Budget { estimate: u128, budget: u128 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
