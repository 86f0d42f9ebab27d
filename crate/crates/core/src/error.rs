use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("{0}")]
    Constraint(String),

    #[error("no local rule applies at column {col}, height {row}: {detail}")]
    NoRuleApplies {
        col: usize,
        row: usize,
        detail: String,
    },

    #[error("boundary labeling is not in the image of the growth map: {0}")]
    NotInImage(String),

    #[error("enumeration size {size} exceeds the cap {cap}")]
    CapExceeded { size: u128, cap: u128 },
}

impl Error {
    /// True for errors that mean "valid input, but not a labeling produced by growth".
    pub fn is_image_error(&self) -> bool {
        matches!(self, Error::NotInImage(_) | Error::NoRuleApplies { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
