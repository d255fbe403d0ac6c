use thiserror::Error;

/// Everything that can go wrong while building groups or evaluating invariants.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("subgroup is not normal: {g} * {n} * {g}^-1 leaves the subgroup")]
    NotNormal { g: usize, n: usize },
    #[error("group order {order} exceeds the configured maximum {cap}")]
    Overflow { order: u128, cap: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{classes} conjugacy classes exceeds the class cap {cap}")]
    ClassCapExceeded { classes: usize, cap: usize },
    #[error("no admissible prime found below 2^31")]
    NoSuitablePrime,
    #[error("numeric eigenvalue clusters were inconsistent after {0} attempts")]
    DegenerateSample(usize),
    #[error("{what} {value} exceeds the limit {limit}")]
    CapExceeded { what: &'static str, value: usize, limit: usize },
    #[error("group is not abelian")]
    NotAbelian,
    #[error("invalid semidirect decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("unsupported stabilizer: {0}")]
    UnsupportedStabilizer(String),
    #[error("no explicit irreducible representations available for {0}")]
    UnsupportedGroup(String),
    #[error("function lives on a group of order {found}, expected {expected}")]
    GroupMismatch { expected: usize, found: usize },
    #[error("incomplete dual: sum of squared degrees is {sum}, group order is {order}")]
    IncompleteDual { sum: usize, order: usize },
    #[error("operator field shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
