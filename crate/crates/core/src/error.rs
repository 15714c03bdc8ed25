use thiserror::Error;

/// Every failure the library can report. Variant names double as the
/// error names printed by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MfError {
    #[error("ParseError: {message} at position {position}")]
    Syntax { message: String, position: usize },
    #[error("ParseError: unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("ParseError: coefficient not an integer at position {position}")]
    NonIntegerCoefficient { position: usize },
    #[error("InvalidField: {0} is not prime")]
    NotPrime(u64),
    #[error("NotScalarPlusNilpotent: {0}")]
    NotScalarPlusNilpotent(String),
    #[error("DegreeGuardExceeded: leading degree {degree} exceeds cap {cap}")]
    DegreeGuardExceeded { degree: u32, cap: u32 },
    #[error("NotZeroDimensional: {0}")]
    NotZeroDimensional(String),
    #[error("NotHomFinite: {0}")]
    NotHomFinite(String),
    #[error("NotAMatrixFactorization: {0}")]
    NotAMatrixFactorization(String),
    #[error("NotAMorphism: {0}")]
    NotAMorphism(String),
    #[error("MixedHypersurface: factorizations of different polynomials")]
    MixedHypersurface,
    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),
    #[error("PreconditionViolated: {0}")]
    PreconditionViolated(String),
    #[error("SocleEmpty: stacked socle kernel is zero")]
    SocleEmpty,
    #[error("NotASummand: {0}")]
    NotASummand(String),
    #[error("UnrecognizedSummand: {0}")]
    UnrecognizedSummand(String),
    #[error("NoScalarBlock: neither block pattern matches")]
    NoScalarBlock,
    #[error("InvalidTypeCombination: {0}")]
    InvalidTypeCombination(String),
    #[error("IndexOutOfRange: index {index} not in 1..={size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("NonClosure: knitting did not close within {0} steps")]
    NonClosure(usize),
    #[error("UnknownFormat: {0}")]
    UnknownFormat(String),
    #[error("InvalidInput: {0}")]
    InvalidInput(String),
}

impl MfError {
    /// The short error name, e.g. `NotZeroDimensional`.
    pub fn name(&self) -> &'static str {
        match self {
            MfError::Syntax { .. }
            | MfError::UnknownVariable { .. }
            | MfError::NonIntegerCoefficient { .. } => "ParseError",
            MfError::NotPrime(_) => "InvalidField",
            MfError::NotScalarPlusNilpotent(_) => "NotScalarPlusNilpotent",
            MfError::DegreeGuardExceeded { .. } => "DegreeGuardExceeded",
            MfError::NotZeroDimensional(_) => "NotZeroDimensional",
            MfError::NotHomFinite(_) => "NotHomFinite",
            MfError::NotAMatrixFactorization(_) => "NotAMatrixFactorization",
            MfError::NotAMorphism(_) => "NotAMorphism",
            MfError::MixedHypersurface => "MixedHypersurface",
            MfError::ShapeMismatch(_) => "ShapeMismatch",
            MfError::PreconditionViolated(_) => "PreconditionViolated",
            MfError::SocleEmpty => "SocleEmpty",
            MfError::NotASummand(_) => "NotASummand",
            MfError::UnrecognizedSummand(_) => "UnrecognizedSummand",
            MfError::NoScalarBlock => "NoScalarBlock",
            MfError::InvalidTypeCombination(_) => "InvalidTypeCombination",
            MfError::IndexOutOfRange { .. } => "IndexOutOfRange",
            MfError::NonClosure(_) => "NonClosure",
            MfError::UnknownFormat(_) => "UnknownFormat",
            MfError::InvalidInput(_) => "InvalidInput",
        }
    }
}

pub type Result<T> = std::result::Result<T, MfError>;
