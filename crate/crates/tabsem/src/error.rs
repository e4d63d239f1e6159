use thiserror::Error;

/// Errors raised anywhere in the crate.
///
/// Parse and validation failures describe bad input; [`Error::ColumnBudget`]
/// and [`Error::NoConvergence`] signal that a computation was abandoned.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter for {law}: {reason}")]
    InvalidParameter { law: &'static str, reason: String },

    #[error("{law} is undefined for negative operand {value}")]
    NegativeOperand { law: &'static str, value: f64 },

    #[error("indeterminate form {form}")]
    Indeterminate { form: &'static str },

    #[error("value `{0}` is not a decimal number, `inf`, or `-inf`")]
    InvalidValue(String),

    #[error("unknown semiring or law `{0}`")]
    UnknownName(String),

    #[error("`{name}` needs parameter `{param}` (write {name}:{param}=<value>)")]
    MissingParameter { name: String, param: &'static str },

    #[error("invalid letter `{0}`")]
    InvalidLetter(String),

    #[error("duplicate index `{0}` and no merge law given")]
    DuplicateIndex(String),

    #[error("duplicate morphism entry for letter `{0}`")]
    DuplicateLetter(String),

    #[error("letter `{0}` is not covered by the morphism")]
    UndefinedLetter(String),

    #[error("law `{0}` has no neutral element to fold an empty table with")]
    MissingNeutral(String),

    #[error("result would hold up to {required} columns, over the budget of {budget}")]
    ColumnBudget { required: usize, budget: usize },

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("matrix closure requires an idempotent addition law, `{0}` is not")]
    NotIdempotent(String),

    #[error("closure did not stabilize within {0} squarings")]
    NoConvergence(usize),

    #[error("empty arrow sequence")]
    EmptyPath,

    #[error("arrow {position} starts at `{found}`, expected `{expected}`")]
    BrokenPath {
        position: usize,
        expected: String,
        found: String,
    },

    #[error("arrow index {0} out of range")]
    NoSuchArrow(usize),

    #[error("negative weight {0}")]
    NegativeWeight(f64),

    #[error("duplicate arrow label `{0}`")]
    DuplicateLabel(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
