use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter must be nonzero: {0}")]
    ZeroParameter(String),

    #[error("q^(2*d_{}) = 1 (d = {d}); choose q away from roots of unity", .index + 1)]
    RootOfUnityViolation { index: usize, d: i64 },

    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("unsupported rank {rank} for family {family}")]
    UnsupportedRank { family: String, rank: usize },

    #[error("invalid Cartan datum: {0}")]
    InvalidCartan(String),

    #[error("index error: {0}")]
    IndexError(String),

    #[error("evaluation outside the validity domain of {functional}: {detail}")]
    OutsideDomain { functional: String, detail: String },

    #[error("operation not available for this algebra: {0}")]
    WrongAlgebra(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),

    #[error("generator index {index} out of rank {rank}")]
    IndexOutOfRank { index: usize, rank: usize },

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("truncation cap too small: {0}")]
    CapTooSmall(String),

    #[error("configuration error: {0}")]
    Config(String),
}
