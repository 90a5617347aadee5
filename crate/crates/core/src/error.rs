use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "malformed Lie type {0:?}: expected a family letter A-G followed by a rank, e.g. \"E8\""
    )]
    MalformedType(String),

    /// Family and rank parse, but the pair is not a simple Lie type.
    #[error("{0}")]
    InvalidRank(String),

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("dimension mismatch: expected a vector of length {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("{0:?} is not a root of this system")]
    NotARoot(Vec<i64>),

    #[error("{0:?} is not a positive root of this system")]
    NotAPositiveRoot(Vec<i64>),

    #[error(
        "root enumeration exceeded {0} height layers; the Cartan matrix is not of finite type"
    )]
    NonFinite(usize),

    #[error("highest root is not unique: {0} roots share the maximal height")]
    AmbiguousHighestRoot(usize),

    #[error(
        "reflection image {image:?} of positive root {root:?} fits none of the expected cases"
    )]
    Unclassified {
        root: Vec<i64>,
        image: Vec<Rational>,
    },

    #[error("(rho, theta) = {0} is not a positive integer; the form is not normalized")]
    NonIntegralDualCoxeter(Rational),

    #[error("root system was built from a bare Cartan matrix and carries no Lie type")]
    MissingType,
}
