use thiserror::Error;

use crate::GrowPoint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid edge: {a} and {b} are the same vertex")]
    InvalidEdge { a: usize, b: usize },

    #[error("vertex {vertex} is not a label of K_{order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("not a Hamiltonian path: {0}")]
    InvalidPath(String),

    #[error("malformed multiset: {0}")]
    Multiset(String),

    #[error("grow point (x={x}, m={m}) out of range for order {order}")]
    GrowPointOutOfRange { x: usize, m: usize, order: usize },

    #[error("realization is not {x}-growable at {m}")]
    NotGrowable { x: usize, m: usize },

    #[error("no {x}-grow point is registered on the certificate")]
    MissingGrowPoint { x: usize },

    #[error("grow point {point:?} did not survive {step}")]
    GrowPointLost { point: GrowPoint, step: &'static str },

    #[error("growth step {index} failed: {source}")]
    Schedule {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("certificate does not verify: {0}")]
    Certificate(String),

    #[error("{0} is not a perfect linear realization")]
    NotPerfect(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("length {length} exceeds the longest cyclic length {max} of K_{order}")]
    LengthOverflow { length: usize, max: usize, order: usize },

    #[error("splice failed: {0}")]
    Splice(String),

    #[error("no seed for {0}")]
    NoSuchSeed(String),

    #[error("multiset is not admissible: {0}")]
    NotAdmissible(String),

    #[error("order {order} exceeds the brute-force cap {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("malformed growth schedule: {0}")]
    ScheduleSyntax(String),
}
