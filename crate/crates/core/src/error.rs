use thiserror::Error;

/// Errors raised by the library layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("form matrix is not square and symmetric")]
    InvalidForm,
    #[error("Gram matrix is singular")]
    SingularGram,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("vector {0} is isotropic; the reflection formula has a zero denominator")]
    IsotropicVector(String),
    #[error("group closure exceeded the order cap of {cap} elements")]
    OrderCapExceeded { cap: usize },
    #[error("element set is not a subset of the group")]
    NotASubset,
    #[error("unknown or unsupported Coxeter type {0}")]
    UnknownType(String),
    #[error("vector {0} is not a root of the root system")]
    NotARoot(String),
    #[error("scalars from incompatible fields: {0}")]
    FieldMismatch(String),
    #[error("series expansion to degree {degree} is too short to isolate all degrees")]
    InsufficientExpansion { degree: usize },
    #[error("generator list is empty")]
    NoGenerators,
    #[error("matrix is not orthogonal for the bilinear form")]
    NotOrthogonal,
    #[error("element set is not closed under products and inverses")]
    NotASubgroup,
    #[error("the series is not 1/∏(1 - t^d) for the extracted degrees {0}")]
    NoDegreeFactorization(String),
    #[error("{0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code for reports and exit diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidForm => "invalid-form",
            Error::SingularGram => "singular-gram",
            Error::Dimension { .. } => "dimension",
            Error::IsotropicVector(_) => "isotropic-vector",
            Error::OrderCapExceeded { .. } => "order-cap-exceeded",
            Error::NotASubset => "not-a-subset",
            Error::UnknownType(_) => "unknown-type",
            Error::NotARoot(_) => "not-a-root",
            Error::FieldMismatch(_) => "field-mismatch",
            Error::InsufficientExpansion { .. } => "insufficient-expansion",
            Error::NoGenerators => "no-generators",
            Error::NotOrthogonal => "not-orthogonal",
            Error::NotASubgroup => "not-a-subgroup",
            Error::NoDegreeFactorization(_) => "no-degree-factorization",
            Error::Parse(_) => "parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
