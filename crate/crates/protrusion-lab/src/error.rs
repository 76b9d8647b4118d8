use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(u32),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: u32, n: u32 },
    #[error("boundary must list t distinct vertices with 1 <= t <= n")]
    InvalidBoundary,
    #[error("boundary sizes differ: {left} vs {right}")]
    BoundaryMismatch { left: usize, right: usize },
    #[error("mask {bits} out of range for boundary size {t}")]
    InvalidMask { bits: u64, t: usize },
    #[error("graph with {n} vertices exceeds the limit {limit} of {what}")]
    CapacityExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("boundary size {t} exceeds the limit {limit} of {what}")]
    BoundaryTooLarge {
        what: &'static str,
        t: usize,
        limit: usize,
    },
    #[error("function is not a boundary function: {0}")]
    InvalidFunction(String),
    #[error("function is not a t-representative function: {0}")]
    NotRepresentative(String),
    #[error("constant Boolean function admits no monotone CNF")]
    ConstantFunction,
    #[error("illegal move at index {index}: {reason}")]
    IllegalMove { index: usize, reason: String },
    #[error("edge {{{0}, {1}}} not present")]
    MissingEdge(u32, u32),
    #[error("crossover gadget failed load-time validation: {0}")]
    GadgetValidation(String),
    #[error("graph has an isolated vertex ({0})")]
    IsolatedVertex(u32),
    #[error("drawing inconsistent with graph: {0}")]
    DrawingMismatch(String),
    #[error("construction metadata does not match graph: {0}")]
    MetadataMismatch(String),
    #[error("invalid input document: {0}")]
    InvalidDocument(String),
    #[error("planar graph counts unavailable for n = {0}")]
    MissingPlanarCount(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
