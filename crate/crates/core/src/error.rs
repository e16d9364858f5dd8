use thiserror::Error;

use crate::graph::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric: entry ({row}, {col}) differs from its transpose by {gap:e}")]
    Asymmetric { row: usize, col: usize, gap: f64 },

    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("block `{block}` is singular (smallest |eigenvalue| = {min_abs_eigenvalue:e})")]
    Singular {
        block: &'static str,
        min_abs_eigenvalue: f64,
    },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph is disconnected; resistance distance is undefined across components")]
    Disconnected,

    #[error("expected {expected} crown graphs, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("vertex {0} has degree zero")]
    ZeroDegree(usize),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("structural identity `{name}` violated: max deviation {deviation:e}")]
    IdentityViolated { name: &'static str, deviation: f64 },

    #[error(transparent)]
    Parse(#[from] ParseError),
}
