use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("undeclared identifier `{name}` at {line}:{column}")]
    UndeclaredIdentifier {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("expected a polynomial of degree {expected}, got degree {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for a ring with {arity} variables")]
    VariableOutOfRange { index: usize, arity: usize },
    #[error("ideal has no generators")]
    EmptyIdeal,
    #[error("ideal contains a zero generator")]
    ZeroGenerator,
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("degree {degree} is below the maximal generator degree {max}; pass the graded-only flag to compute the graded stabilizer")]
    DegreeBelowMax { degree: u32, max: u32 },
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("malformed staged tree: {0}")]
    MalformedTree(String),
    #[error("malformed graph: {0}")]
    MalformedGraph(String),
    #[error("malformed input file: {0}")]
    MalformedFile(String),
    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Process exit status for this error: 1 when the input could not be
    /// read or parsed, 2 when it parsed but violates a precondition.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. }
            | Error::UndeclaredIdentifier { .. }
            | Error::InvalidRing(_)
            | Error::MalformedTree(_)
            | Error::MalformedGraph(_)
            | Error::MalformedFile(_)
            | Error::Io(_) => 1,
            _ => 2,
        }
    }

    /// Shifts the line of a position-carrying error by `offset`.
    pub(crate) fn offset_line(self, offset: usize) -> Self {
        match self {
            Error::Syntax { line, column, message } => Error::Syntax {
                line: line + offset,
                column,
                message,
            },
            Error::UndeclaredIdentifier { name, line, column } => Error::UndeclaredIdentifier {
                name,
                line: line + offset,
                column,
            },
            other => other,
        }
    }
}
