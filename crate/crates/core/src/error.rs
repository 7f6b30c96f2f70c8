use thiserror::Error;

use crate::report::CheckReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("twistor has no weak companion")]
    MissingCompanion,

    #[error("algebra is not associative")]
    NotAssociative(Box<CheckReport>),

    #[error("map is not a morphism ({what})")]
    NotMorphism {
        what: String,
        report: Box<CheckReport>,
    },

    #[error("operator is not a Rota-Baxter operator of the given weight")]
    NotWeightedRb(Box<CheckReport>),

    #[error("tensor is not alpha-invariant")]
    NotInvariant(Box<CheckReport>),

    #[error("(r, s) is not a Hom-Yang-Baxter pair")]
    NotYbPair(Box<CheckReport>),

    #[error("map is not a weak pseudotwistor")]
    NotPseudotwistor(Box<CheckReport>),

    #[error("invalid input structure: {}", .0.name)]
    InvalidSystem(Box<CheckReport>),

    #[error("construction postcondition failed: {}", .0.name)]
    Postcondition(Box<CheckReport>),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("search space of {size} candidates exceeds the exhaustive bound {bound}")]
    SpaceTooLarge { size: u128, bound: u128 },

    #[error("unsupported dimension {0}")]
    UnsupportedDim(usize),

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("shape error at {path}: expected length {expected}, found {found}")]
    Shape {
        path: String,
        expected: usize,
        found: usize,
    },

    #[error("missing section: {0}")]
    MissingSection(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// The failing report carried by checker-backed errors.
    pub fn report(&self) -> Option<&CheckReport> {
        match self {
            Error::NotAssociative(r)
            | Error::NotWeightedRb(r)
            | Error::NotInvariant(r)
            | Error::NotYbPair(r)
            | Error::NotPseudotwistor(r)
            | Error::InvalidSystem(r)
            | Error::Postcondition(r) => Some(r),
            Error::NotMorphism { report, .. } => Some(report),
            _ => None,
        }
    }
}

pub(crate) fn ensure_dim(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimMismatch {
            context,
            expected,
            found,
        })
    }
}
