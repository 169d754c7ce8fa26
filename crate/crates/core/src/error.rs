use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator factor {0} has zero constant term")]
    ZeroConstantTerm(usize),

    #[error("{0} has a negative exponent and is not a power series")]
    NegativeExponent(&'static str),

    #[error("expansion is not integral at q^{0}")]
    NotIntegral(usize),

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not divisible by the unknot value")]
    NotDivisible,

    #[error("series truncated at order {have}, need at least {need}")]
    InsufficientOrder { have: usize, need: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("invalid ADE label `{0}`")]
    InvalidLabel(String),

    #[error("h = {h} outside 0..={delta}")]
    OutOfRange { h: i64, delta: i64 },

    #[error("braid parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("generator {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },

    #[error("word has {letters} letters, enumeration budget is {budget}")]
    BudgetExceeded { letters: usize, budget: usize },

    #[error("word contains negative letters")]
    NotPositive,
}

pub type Result<T> = std::result::Result<T, Error>;
