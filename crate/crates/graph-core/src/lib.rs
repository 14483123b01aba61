//! Graph representations (COO edge lists, CSR, CSC) and the pre-processing
//! operations that build and reorder them.
//!
//! Vertex ids are 32-bit; edge counts and offsets are 64-bit, so graphs with
//! up to `u32::MAX` vertices and arbitrarily many (multi-)edges are
//! representable. Duplicate edges and self-loops are preserved verbatim.

mod build;
mod error;
mod reorder;
mod types;
mod validate;

pub use build::{
    csc_from_edgelist, csr_from_edgelist_baseline, csr_from_edgelist_parallel,
    degrees_from_edgelist, prefix_sum,
};
pub use error::GraphError;
pub use reorder::{apply_permutation, degree_sort_permutation};
pub use types::{CsrGraph, Edge, EdgeList, Permutation, VertexId};
pub use validate::{validate_csr, CsrViolation};
