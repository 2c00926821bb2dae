use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("nail {nail} is outside 1..={n}")]
    NailOutOfRange { nail: u32, n: u32 },

    #[error("{n} nails requested, at most {max} are supported")]
    TooManyNails { n: u32, max: u32 },

    #[error("exhaustive enumeration over {n} nails refused: limit is {limit}")]
    ExhaustiveLimit { n: u32, limit: u32 },

    #[error("invalid word token {token:?} at position {position}")]
    WordSyntax { token: String, position: usize },

    #[error("invalid word: {0}")]
    WordJson(String),

    #[error("syntax error at byte {position}: {message}")]
    FormulaSyntax { position: usize, message: String },

    #[error("variable index {index} at byte {position} must be in 1..={n}")]
    VariableIndex { index: u64, position: usize, n: u32 },

    #[error("threshold {k} at byte {position} out of range 1..={count}")]
    ThresholdRange {
        k: u64,
        count: usize,
        position: usize,
    },

    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("unrealizable fall specification: {0}")]
    Unrealizable(String),

    #[error("construction needs n >= {min}, got {n}")]
    TooFewNails { n: u32, min: u32 },

    #[error("duplicate nail index {0}")]
    DuplicateNail(u32),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("threshold k = {k} out of range for n = {n}")]
    KOutOfRange { k: u32, n: u32 },

    #[error("estimated length {estimate} exceeds the letter budget {budget}")]
    BudgetExceeded { estimate: u64, budget: u64 },

    #[error("the picture still hangs with every one of nails 1..={n} removed")]
    NeverFalls { n: u32 },

    #[error("the word is already trivial, nothing can be removed without felling it")]
    AlreadyFallen,

    #[error("element u{0} is not covered by any set")]
    UncoveredElement(u32),

    #[error("invalid set cover instance: {0}")]
    InvalidInstance(String),

    #[error("unsupported diagram format {0:?} (expected svg or text)")]
    UnsupportedFormat(String),

    #[error("unknown puzzle id {0} (valid ids are 1..=11)")]
    UnknownPuzzle(u32),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
