use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division is not exact: {0}")]
    NonExactDivision(String),

    #[error("substitution needs a fractional power: {0}")]
    NonIntegralPower(String),

    #[error("not a power series in q: denominator factor {0} involves a or t")]
    NotASeries(String),

    #[error("rational function does not reduce to a polynomial: {0}")]
    NotPolynomial(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("incompatible pair: w has length {w_len} but v has {zeroes} zeroes")]
    IncompatiblePair { w_len: usize, zeroes: usize },

    #[error("invalid binary sequence {0:?}")]
    InvalidSequence(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("box ({col}, {row}) is not an inner corner")]
    NotInnerCorner { col: u32, row: u32 },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("unknown link {0:?}")]
    UnknownLink(String),

    #[error("memo cache rejected: {0}")]
    Cache(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
