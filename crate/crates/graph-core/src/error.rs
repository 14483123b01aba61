use thiserror::Error;

/// Errors produced while constructing or transforming graphs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {edge_index} endpoint {id} out of range for {num_vertices} vertices")]
    VertexOutOfBounds {
        edge_index: usize,
        id: u32,
        num_vertices: u32,
    },

    #[error("offset overflow at vertex {vertex}: graph too large for 64-bit offsets")]
    OffsetOverflow { vertex: usize },

    #[error("permutation has {found} entries but the edge list has {expected} vertices")]
    PermutationLengthMismatch { expected: u32, found: u32 },

    #[error("permutation is not a bijection: new id {new_id} assigned more than once")]
    PermutationNotBijective { new_id: u32 },
}
