use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid policy axis [{min}, {max}]: need finite min < max")]
    InvalidAxis { min: f64, max: f64 },

    #[error("{x} lies outside the policy axis [{min}, {max}]")]
    OutOfDomain { x: f64, min: f64, max: f64 },

    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("distributions live on different axes: [{0}, {1}] vs [{2}, {3}]")]
    AxisMismatch(f64, f64, f64, f64),

    #[error("degenerate group: the {side} side of x* = {xstar} carries no mass")]
    DegenerateGroup { side: &'static str, xstar: f64 },

    #[error("invalid animosity function: {0}")]
    InvalidAnimosity(String),

    #[error("invalid measure spec: {0}")]
    InvalidSpec(String),

    #[error("invalid issue model: {0}")]
    InvalidModel(String),

    #[error("quadrature did not converge: achieved error {achieved:e}, requested {requested:e}")]
    Quadrature { achieved: f64, requested: f64 },

    #[error("no valid rows in input")]
    EmptyInput,

    #[error("data error at row {row}: {message}")]
    Data { row: usize, message: String },

    #[error("unknown fixture `{0}` (expected one of anes1996, anes2004, anes2016)")]
    UnknownFixture(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
