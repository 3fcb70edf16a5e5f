use thiserror::Error;

use crate::kernel::Verdict;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus not prime: {0}")]
    NotPrime(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("matrix is singular (rank {rank} of {size})")]
    Singular { rank: usize, size: usize },

    #[error("search space too large: {candidates} candidates (limit 2^24)")]
    SearchTooLarge { candidates: f64 },

    #[error("alphabet mismatch")]
    AlphabetMismatch,

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("degree bound {bound} is below the required degree {needed}")]
    DegreeBound { bound: usize, needed: usize },

    #[error("degree {degree} exceeds the truncation bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },

    #[error("{what} violated")]
    Axiom { what: String, verdict: Box<Verdict> },

    #[error("not a subcoalgebra: {0}")]
    NotClosed(String),

    #[error("coaction escapes the subcoalgebra: {0}")]
    CoactionEscapes(String),

    #[error("unknown example `{0}`")]
    UnknownExample(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn axiom(what: impl Into<String>, verdict: Verdict) -> Self {
        Error::Axiom { what: what.into(), verdict: Box::new(verdict) }
    }

    /// The failing verdict attached to an axiom error, if any.
    pub fn verdict(&self) -> Option<&Verdict> {
        match self {
            Error::Axiom { verdict, .. } => Some(verdict),
            _ => None,
        }
    }
}
