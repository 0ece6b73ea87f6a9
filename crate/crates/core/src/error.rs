use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid presentation: {0}")]
    Presentation(String),

    #[error("quotient did not stabilize by path length {bound}; the ideal is not admissible or the algebra is infinite dimensional")]
    NotFiniteDimensional { bound: usize },

    #[error("{0} is not a vertex")]
    UnknownVertex(String),

    #[error("degree {requested} exceeds the computed range 0..={max}")]
    DegreeOutOfRange { requested: usize, max: usize },

    #[error("undefined generator {label} referenced in degree {degree}")]
    UndefinedGenerator { label: String, degree: usize },

    #[error("the explicit construction needs the two-vertex quiver with a loop at vertex 1 and arrows 1->2, 2->1: {0}")]
    UnsupportedQuiver(String),

    #[error("module dimension {dim} exceeds the configured limit {limit}; lower max_degree")]
    ResourceLimit { dim: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
