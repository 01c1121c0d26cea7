use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("value {value:e} exceeds configured ceiling {ceiling:e}")]
    CeilingExceeded { value: f64, ceiling: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("ordinates not strictly ascending at line {line}")]
    Order { line: usize },

    #[error("height {t} exceeds table height {height}")]
    HeightExceeded { t: f64, height: f64 },

    #[error("table is not anchored at height 0; N(T) would undercount")]
    NotAnchored,

    #[error("T = {t} is within 1e-6 of zero ordinate {gamma}")]
    NearZeroOrdinate { t: f64, gamma: f64 },

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("no threshold: {0}")]
    NoThreshold(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
