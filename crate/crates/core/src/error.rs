use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed linear program: {0}")]
    MalformedProgram(String),

    #[error("rank of zero object undefined")]
    EmptyRows,

    #[error("cost vector must be strictly positive in every coordinate")]
    NonPositiveCost,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid support: {0}")]
    InvalidSupport(String),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("oracle refused: {candidates} basis candidates exceed the bound {bound}")]
    OracleBudget { candidates: u128, bound: u128 },

    #[error("integer witness does not fit in 64 bits")]
    WitnessOverflow,

    #[error("zero ideal: every generator is zero")]
    ZeroIdeal,

    #[error("lct undefined: P is not in V(a) (unit ideal)")]
    UnitIdeal,

    #[error("linear change is singular")]
    SingularMatrix,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
