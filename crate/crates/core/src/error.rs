use thiserror::Error;

/// Errors raised by ring arithmetic and the higher-level constructions.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("operands live in different domains ({0} vs {1})")]
    DomainMismatch(String, String),
    #[error("{0} is not a unit in the domain")]
    NotAUnit(String),
    #[error("unsupported domain {domain} for {operation}")]
    UnsupportedDomain { domain: String, operation: &'static str },
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("division leaves a nonzero remainder")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("degree {degree} exceeds the factorization cap of {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("a denominator vanishes at the specialization point")]
    PoleAtPoint,
    #[error("polynomial has only {found} of {needed} roots in the extension")]
    DoesNotSplit { found: usize, needed: usize },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("polynomial is not symmetric in t1..tn")]
    NotSymmetric,
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("family is not a point of H_n; witness {witness}")]
    NotInHilb { witness: String },
    #[error("all generators are zero")]
    ZeroIdeal,
    #[error("polynomial is not monic: {0}")]
    NotMonic(String),
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
}

impl Error {
    /// Machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DomainMismatch(..) => "DomainMismatch",
            Error::NotAUnit(_) => "NotAUnit",
            Error::UnsupportedDomain { .. } => "UnsupportedDomain",
            Error::InvalidDomain(_) => "InvalidDomain",
            Error::InexactDivision => "InexactDivision",
            Error::DivisionByZero => "DivisionByZero",
            Error::DegreeCapExceeded { .. } => "DegreeCapExceeded",
            Error::PoleAtPoint => "PoleAtPoint",
            Error::DoesNotSplit { .. } => "DoesNotSplit",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotSymmetric => "NotSymmetric",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::ResourceCap(_) => "ResourceCap",
            Error::NotInHilb { .. } => "NotInHilb",
            Error::ZeroIdeal => "ZeroIdeal",
            Error::NotMonic(_) => "NotMonic",
            Error::ZeroPolynomial => "ZeroPolynomial",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
