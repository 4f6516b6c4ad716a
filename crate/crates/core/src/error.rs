use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function}: argument {arg} outside the domain ({reason})")]
    Domain {
        function: &'static str,
        arg: f64,
        reason: &'static str,
    },

    #[error("{function}: pole at {arg}")]
    Pole { function: &'static str, arg: f64 },

    #[error("{what} did not converge (achieved error estimate {estimate:e})")]
    NonConvergence { what: &'static str, estimate: f64 },

    #[error("coefficient recurrence broke down at index {index}: A_{index} = 0")]
    DegenerateCoefficient { index: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unsupported modulation for this estimator (alpha = {alpha}, beta = {beta})")]
    UnsupportedModulation { alpha: f64, beta: f64 },

    #[error("objective is not finite at {at}")]
    NonFiniteObjective { at: f64 },
}
