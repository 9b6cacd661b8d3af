use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("signature mismatch: `{left}` vs `{right}`")]
    SignatureMismatch { left: String, right: String },
    #[error("degree {degree} exceeds cap {cap}")]
    DegreeOverflow { degree: u32, cap: u32 },
    #[error("generator map is not canonical: {0}")]
    NonCanonicalMap(String),
    #[error("operation needs a non-radial signature (`{0}`)")]
    RadialUnsupported(String),
    #[error("signature `{0}` has no radial extension")]
    NotRadial(String),
    #[error("index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("missing generator `{0}` in dictionary")]
    MissingGenerator(String),
    #[error("Fock basis mismatch")]
    BasisMismatch,
    #[error("non-finite matrix entries")]
    NonFinite,
    #[error("field mismatch between Jordan elements")]
    FieldMismatch,
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
