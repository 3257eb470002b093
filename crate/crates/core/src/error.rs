use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("algebras of dimension 0 are not supported")]
    ZeroDimension,

    #[error("structure constants are not symmetric: c[{i}][{j}][{k}] != c[{j}][{i}][{k}]")]
    NotCommutative { i: usize, j: usize, k: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("rational function has a pole at t = 0")]
    PoleAtZero,

    #[error("basis-change matrix is identically singular (det g(t) = 0)")]
    IdenticallySingular,

    #[error("algebra does not satisfy the Jordan identity")]
    NotJordan,

    #[error("limit algebra violates the Jordan identity (internal error)")]
    NotJordanAtLimit,

    #[error("vector is not a nonzero idempotent")]
    NotIdempotent,

    #[error("Peirce eigenspaces span only {spanned} of {dim} dimensions")]
    EigenspaceGap { spanned: usize, dim: usize },

    #[error("subspace is not closed under multiplication")]
    NotSubalgebra,

    #[error("unknown catalog id `{0}`")]
    UnknownId(String),

    #[error("all parameters are zero")]
    AllZero,

    #[error("edge {source_id} -> {target} fails the necessary-conditions audit: {detail}")]
    AuditFailure {
        source_id: String,
        target: String,
        detail: String,
    },

    #[error("no rigid ancestor found for {0}")]
    CoverageGap(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
