use alloc::string::String;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("subspace is not contained in the ambient space")]
    NotASubspace,
    #[error("generator `{0}` of arity >= 3 cannot declare a symmetry")]
    UnsupportedArity(String),
    #[error("slot {slot} out of range for arity {arity}")]
    SlotOutOfRange { slot: usize, arity: usize },
    #[error("presentation is not quadratic: {0}")]
    NotQuadratic(String),
    #[error("bipartite graph does not admit the requested kind")]
    WrongKind,
    #[error("matrix entry at ({row}, {col}) is not +1 or -1")]
    NotPlusMinusOne { row: usize, col: usize },
    #[error("no consistent orientation; witness cycle through edges {witness:?}")]
    NoConsistentOrientation { witness: Vec<usize> },
    #[error("graph has no orientation")]
    OrientationMissing,
    #[error("edge {0} has no label")]
    MissingLabel(usize),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
