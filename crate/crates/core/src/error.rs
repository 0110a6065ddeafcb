use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} does not appear in any facet")]
    GhostVertex(usize),
    #[error("vertex label {label} is outside 1..={m}")]
    OutOfRange { label: usize, m: usize },
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<usize>),
    #[error("bad generator parameters: {0}")]
    BadParams(String),
    #[error("{m} vertices exceeds the cap of {cap}")]
    TooManyVertices { m: usize, cap: usize },
    #[error("integer coefficients do not form a field")]
    NotAField,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("unsupported coefficients: {0}")]
    BadCoefficients(String),
    #[error("torsion coefficient does not fit in 64 bits")]
    Overflow,
    #[error("malformed complex: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
