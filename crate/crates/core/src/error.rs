//! Crate-wide error type.

use thiserror::Error;

use crate::oracles::LassoSolution;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite value in {what}")]
    NonFiniteInput { what: String },

    #[error("column {column} has zero norm after standardization preprocessing")]
    ZeroColumn { column: usize },

    #[error("CSV parse error at line {line}, column {column}: {message}")]
    CsvParse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("response column {name:?} not found in CSV header")]
    MissingResponseColumn { name: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("matrix is numerically degenerate: no eigenvalue above the zero threshold")]
    DegenerateMatrix,

    #[error("learning rate {epsilon} outside (0, 1]")]
    EpsilonOutOfRange { epsilon: f64 },

    #[error("invalid configuration: {message}")]
    InvalidConfig { message: String },

    #[error("delta grid has {grid_len} entries but {max_iters} iterations were requested and grid extension is disabled")]
    GridTooShort { grid_len: usize, max_iters: usize },

    #[error("learning-rate schedule has {schedule_len} entries but {max_iters} iterations were requested")]
    ScheduleTooShort {
        schedule_len: usize,
        max_iters: usize,
    },

    #[error("solver hit the iteration cap before reaching the requested certificate tolerance (best omega {:.3e})", best.certificate.omega)]
    MaxItersExceeded { best: Box<LassoSolution> },

    #[error("beta with l1 norm {l1} is infeasible for the l1 budget {delta}")]
    InfeasibleBeta { l1: f64, delta: f64 },

    #[error("quadratic is unbounded below (linear term has a null-space component)")]
    UnboundedBelow,
}

impl Error {
    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidConfig {
            message: message.into(),
        }
    }
}
