use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("crossing `{0}` listed more than once")]
    DuplicateCrossing(String),
    #[error("crossing `{0}` missing from the alpha or beta listings")]
    MissingCrossing(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("Euler check failed: V - E + F = {got}, expected {expected}")]
    EulerCheckFailed { got: i64, expected: i64 },
    #[error("intersection matrix is singular: not a rational homology sphere")]
    SingularIntersection,
    #[error("crossing `{0}` is not on the requested curve")]
    CrossingNotOnCurve(String),
    #[error("layout is not a planar drawing: {0}")]
    LayoutInvalid(String),
    #[error("chain is not a cycle: {0}")]
    NotACycle(String),
    #[error("inconsistent path: {0}")]
    InconsistentPath(String),
    #[error("invalid site: {0}")]
    InvalidSite(String),
    #[error("no perfect matching between alpha and beta curves")]
    NoPerfectMatching,
    #[error("linking matrix violates the symplectic constraint: {0}")]
    SymplecticViolation(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
