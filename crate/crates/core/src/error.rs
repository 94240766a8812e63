//! Error types shared across the crate.

use thiserror::Error;

/// Failures of exact scalar arithmetic and scalar parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    /// Division by an exact zero.
    #[error("division by zero")]
    DivisionByZero,
    /// Text that is not in the scalar syntax.
    #[error("malformed scalar `{0}`")]
    Parse(String),
}

/// A syntax or semantic error located in definition-file text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    /// 1-based line.
    pub line: usize,
    /// 1-based column.
    pub column: usize,
    /// Human-readable description (includes the offending statement for
    /// semantic errors).
    pub message: String,
}

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Scalar arithmetic failure.
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    /// Definition-file parse failure.
    #[error(transparent)]
    Parse(#[from] ParseError),
    /// A generator index outside `1..=m+n` (reported 1-based).
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange {
        /// The offending 1-based index.
        index: usize,
        /// The total dimension.
        dim: usize,
    },
    /// An algebra with no generators.
    #[error("graded dimension (0,0) is not allowed")]
    EmptyAlgebra,
    /// Operands whose shapes do not match.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// A matrix that has no inverse.
    #[error("singular matrix: {0}")]
    Singular(String),
    /// Both block determinants vanish, so neither superdeterminant formula applies.
    #[error("sdet undefined: det A = det B = 0")]
    SdetUndefined,
    /// A matrix that violates the transformation-matrix reality pattern.
    #[error("invalid transformation matrix: {0}")]
    InvalidTransformation(String),
    /// A structure that violates antisymmetry, grading or reality.
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    /// A parameter needed for evaluation was not supplied.
    #[error("missing value for parameter `{0}`")]
    MissingParameter(String),
    /// A parameter value outside its declared range.
    #[error("parameter `{name}` = {value} is outside its range {range}")]
    ParameterOutOfRange {
        /// Parameter name.
        name: String,
        /// Offending value.
        value: String,
        /// Declared range.
        range: String,
    },
    /// A parameter assignment that violates a constraint.
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),
    /// A catalog, algebra or entry id that does not exist.
    #[error("unknown id `{0}`")]
    UnknownId(String),
    /// Matrices passed as witnesses that do not witness the claimed isomorphism.
    #[error("not an isomorphism witness: {0}")]
    NotAWitness(String),
    /// A request outside what the implementation supports.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Malformed catalog data.
    #[error("catalog data error: {0}")]
    Catalog(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
