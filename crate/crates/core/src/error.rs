use thiserror::Error;

/// Errors produced by the analyzers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid {system} representation {digits:?}: {reason}")]
    InvalidRepresentation {
        system: &'static str,
        digits: String,
        reason: &'static str,
    },

    #[error("zero has an empty Zeckendorf expansion")]
    EmptyExpansion,

    #[error("requested {requested} symbols but the generation budget is {cap}")]
    BudgetExceeded { requested: u64, cap: u64 },

    #[error("argument {name} = {value} must be even")]
    ParityViolation { name: &'static str, value: u64 },

    #[error("no corner witness for p = {p} within the first {limit} symbols")]
    NotFoundWithinLimit { p: u64, limit: u64 },

    #[error("state {state} has no transition on {symbol}")]
    UndefinedTransition { state: usize, symbol: String },

    #[error("sample labels are inconsistent for prefix {prefix}")]
    InconsistentSample { prefix: String },

    #[error("bad argument: {0}")]
    InvalidArgument(String),

    #[error("malformed automaton file, line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
