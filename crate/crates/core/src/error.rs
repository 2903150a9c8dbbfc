use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0:?} is reducible over GF(p)")]
    ReduciblePolynomial(Vec<u32>),
    #[error("modulus must be monic of degree {expected}, got {got:?}")]
    DegreeMismatch { expected: u32, got: Vec<u32> },
    #[error("field order {0} exceeds the supported range (< 2^32)")]
    FieldTooLarge(String),
    #[error("q - 1 = {0} exceeds the trial-division budget; supply its prime factors")]
    FactorizationNeeded(u64),
    #[error("supplied factors do not multiply to q - 1 = {0}")]
    NoFactorizationMatch(u64),
    #[error("GF({base}) is not a subfield of GF({big})")]
    BaseNotSubfield { base: u64, big: u64 },
    #[error("element value {value} is not in GF({q})")]
    ElementNotInField { value: u64, q: u64 },
    #[error("row has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("subspace is not contained in the enclosing space")]
    NotASubspaceOf,
    #[error("{what} has size {size}, over the budget of {budget}")]
    BudgetExceeded {
        what: String,
        size: String,
        budget: u64,
    },
    #[error("codeword has dimension {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("a code needs at least one codeword")]
    EmptyCode,
    #[error("minimum distance is undefined for a code with a single codeword")]
    SingletonCode,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("code has minimum distance {actual}, below the required {required}")]
    DistanceTooSmall { required: usize, actual: usize },
    #[error("construction verification failed: {0}")]
    ConstructionVerificationFailed(String),
    #[error("malformed input: {0}")]
    Format(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::ReduciblePolynomial(_) => "ReduciblePolynomial",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::FieldTooLarge(_) => "FieldTooLarge",
            Error::FactorizationNeeded(_) => "FactorizationNeeded",
            Error::NoFactorizationMatch(_) => "NoFactorizationMatch",
            Error::BaseNotSubfield { .. } => "BaseNotSubfield",
            Error::ElementNotInField { .. } => "ElementNotInField",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::AmbientMismatch(_) => "AmbientMismatch",
            Error::NotASubspaceOf => "NotASubspaceOf",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::EmptyCode => "EmptyCode",
            Error::SingletonCode => "SingletonCode",
            Error::InvalidParams(_) => "InvalidParams",
            Error::DistanceTooSmall { .. } => "DistanceTooSmall",
            Error::ConstructionVerificationFailed(_) => "ConstructionVerificationFailed",
            Error::Format(_) => "Format",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
