use thiserror::Error;

/// Errors produced by the library. Everything here is a hard contract
/// violation: bad input text, non-bijective permutation data, a blown
/// closure cap, or embedded data failing its validation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("pattern text must be 16 characters over 0-3, got length {0}")]
    PatternLength(usize),
    #[error("invalid pattern digit {found:?} at index {index}")]
    PatternDigit { index: usize, found: char },
    #[error("images are not a bijection")]
    NotBijective,
    #[error("generator list is empty")]
    NoGenerators,
    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("component {component} does not fit a nonzero affine functional")]
    ComponentNotAffine { component: &'static str },
    #[error("components share a linear part; pattern has no line structure")]
    DegenerateLinearParts,
    #[error("classification mismatch: {0}")]
    Classification(String),
    #[error("points must be distinct")]
    EqualPoints,
    #[error("lines must be distinct")]
    EqualLines,
    #[error("structures must be distinct")]
    EqualStructures,
    #[error("embedded data failed validation: {0}")]
    DataValidation(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
