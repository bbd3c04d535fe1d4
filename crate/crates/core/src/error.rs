use thiserror::Error;

/// Errors shared by the kernel, the formula front end, and the checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("arity mismatch: {0}")]
    ArityMismatch(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),

    #[error("unknown theory `{0}`")]
    UnknownTheory(String),

    /// Precondition violations that are not syntax errors (non-Δ0 formula
    /// where one is required, scheme hole in an evaluated formula, bad bounds).
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            col,
            msg: msg.into(),
        }
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
