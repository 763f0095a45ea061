use thiserror::Error;

/// Errors produced by parsing and by the semantic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{line}:{col}: syntax error: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("{line}:{col}: atom `{name}` uses the reserved `__w` prefix")]
    ReservedAtom { line: usize, col: usize, name: String },

    #[error("{line}:{col}: epistemic literal over undeclared atom `{name}`")]
    UndeclaredElitAtom { line: usize, col: usize, name: String },

    #[error("{line}:{col}: double default negation is only valid in plain mode")]
    DoubleDefaultNegation { line: usize, col: usize },

    #[error("operation requires a plain program, but epistemic literals occur in rules")]
    NotPlain,

    #[error("resource limit exceeded: {what} requires {need}, cap is {cap}")]
    ResourceLimit {
        what: &'static str,
        need: u64,
        cap: u64,
    },

    #[error("guess is not realizable in the given set of interpretations")]
    NotRealizable,

    #[error("invalid difference witness: {0}")]
    NoDifference(String),

    #[error("witness program failed verification: {0}")]
    WitnessVerification(String),

    #[error("{0}")]
    Io(String),

    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// Process exit code for the CLI: 2 for usage/parse errors,
    /// 3 for exceeded enumeration limits.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceLimit { .. } => 3,
            _ => 2,
        }
    }
}
