use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("relation is not admissible: {0}")]
    NonAdmissible(String),
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("algebra is not basic: {0}")]
    NotBasic(String),
    #[error("field too small: {0}")]
    FieldTooSmall(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("decomposition stalled: {0}")]
    DecompositionStalled(String),
    #[error("socle of Ext is not one-dimensional: {0}")]
    SocleNotOneDimensional(String),
    #[error("ideal acts nonzero: {0}")]
    IdealActsNonzero(String),
    #[error("bimodule is not nilpotent: {0}")]
    NotNilpotent(String),
    #[error("lifting failed: {0}")]
    LiftingFailed(String),
    #[error("modules live over different algebras: {0}")]
    AlgebraMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("internal verification failed: {0}")]
    Verification(String),
    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("parse error: {0}")]
    Parse(String),
}
