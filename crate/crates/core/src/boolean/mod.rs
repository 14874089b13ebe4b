//! Boolean matrices, ranges, GF(2) ranks and precedence-graph cyclicity.

mod graph;
mod matrix;
mod rank;

pub use graph::{cyclicity, PrecedenceGraph};
pub use matrix::{apply_vector, bool_multiply, BitVector, BoolMatrix, DEFAULT_RANGE_CAP, MAX_RANGE_DIM};
pub use rank::rank_gf2;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoolError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("range cap exceeded: dimension {n} is above the enumeration cap {cap}")]
    RangeCapExceeded { n: usize, cap: usize },
}
