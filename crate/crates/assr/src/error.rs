use thiserror::Error;

/// Errors surfaced by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An operation that requires a staircase matrix was given one that is
    /// neither type-I nor type-II.
    #[error("matrix is not a staircase matrix (neither type-I nor type-II)")]
    NotStaircase,

    /// The matrix does not have rank `min(m, n)`.
    #[error("matrix is rank deficient: rank {rank} < min(m, n) = {expected}")]
    RankDeficient { rank: usize, expected: usize },

    /// A classification precondition (ASSR presence) did not hold.
    #[error("matrix is not ASSR; {0}")]
    NotAssr(String),

    /// The enumeration would evaluate more minors than the configured budget.
    #[error("minor enumeration budget exceeded: {required} minors required, budget {budget}")]
    BudgetExceeded { required: u64, budget: u64 },

    /// A column collapsed during orthogonalization.
    #[error("numerical rank deficiency detected at column {column}")]
    NumericalRankDeficient { column: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
