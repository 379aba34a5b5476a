use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("enumeration of {required} deterministic strategies exceeds the budget of {budget}")]
    BudgetExceeded { required: BigUint, budget: u64 },

    #[error("strategy does not fit the scenario: {0}")]
    StrategyMismatch(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("the two-input criterion needs exactly 2 Alice inputs, got {0}")]
    NotTwoInputs(usize),

    #[error("parity violation: {0}")]
    ParityViolation(String),

    #[error("observables {first} and {second} do not commute (commutator norm {norm:e})")]
    NonCommuting {
        first: usize,
        second: usize,
        norm: f64,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("state is not normalized: norm {0}")]
    NotNormalized(f64),

    #[error("invalid measurement: {0}")]
    InvalidMeasurement(String),

    #[error("probability has imaginary residue {0:e}")]
    ImaginaryResidue(f64),

    #[error("quantum strategy does not win with certainty: winning probability {0}")]
    NotWinning(f64),

    #[error("no pair of Alice outcomes has overlapping residual states")]
    NoOverlappingPair,

    #[error("no Bob outcome for input {0} is compatible with both residual states")]
    NoCompatibleOutcome(usize),

    #[error("no deterministic strategy saturates the local bound")]
    Degenerate,

    #[error("distribution not normalized at (x={x}, y={y}): total {total}")]
    Unnormalized { x: usize, y: usize, total: f64 },

    #[error("quantum value equals the noise value; resistance to noise is undefined")]
    ZeroDenominator,

    #[error("arithmetic overflow in exact evaluation")]
    Overflow,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
