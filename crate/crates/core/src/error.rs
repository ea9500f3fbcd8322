use thiserror::Error;

use crate::matroid::AxiomReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set must be non-empty")]
    EmptyGround,
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("ground set has {size} elements, the enumeration bound is {max}")]
    GroundTooLarge { size: usize, max: usize },
    #[error("subset belongs to a different ground set")]
    ForeignGround,
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("element index {index} out of range for a ground set of size {size}")]
    UnknownElement { index: usize, size: usize },
    #[error("mask {mask:#x} has bits outside a ground set of size {size}")]
    MaskOutOfRange { mask: u32, size: usize },
    #[error("axiom violation: {0}")]
    Axiom(AxiomReport),
    #[error("operation requires a general (non-free) matroid")]
    FreeMatroid,
    #[error("operation requires the circuits to cover the ground set")]
    NotCovering,
    #[error("duplicate edge label `{0}`")]
    DuplicateEdgeLabel(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("ragged matrix: column {column} has {found} entries, expected {expected}")]
    RaggedColumns {
        column: usize,
        expected: usize,
        found: usize,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid document: {0}")]
    Document(String),
    #[error("unknown format version `{0}`")]
    UnknownVersion(String),
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
