use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("ground set has {0} elements; at most 64 are supported")]
    GroundTooLarge(usize),
    #[error("set {0} is not feasible")]
    NotFeasible(String),
    #[error("set {0} is not a subset of the ground set")]
    NotSubset(String),
    #[error("not a valid {class}: {detail}")]
    AxiomFailure { class: String, detail: String },
    #[error("{what}: {actual} exceeds the limit of {limit}")]
    CapExceeded { what: String, limit: usize, actual: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("not lower semimodular: {0}")]
    NotSemimodular(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
