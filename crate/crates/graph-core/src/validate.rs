use thiserror::Error;

use crate::types::CsrGraph;

/// First invariant violation found in a CSR, with the offending index.
/// Violations are ordinary return values, not construction failures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CsrViolation {
    #[error("offsets array has {found} entries, expected {expected}")]
    OffsetsLength { expected: usize, found: usize },

    #[error("offsets[0] = {found}, expected 0")]
    FirstOffsetNonzero { found: u64 },

    #[error("non-monotone at {index}: offsets[{index}] < offsets[{}]", index - 1)]
    NonMonotone { index: usize },

    #[error("offsets[{index}] = {found} but neighbor array has {num_edges} entries")]
    LastOffsetMismatch {
        index: usize,
        found: u64,
        num_edges: u64,
    },

    #[error("neighbor out of range: neighbors[{index}] = {id} with {num_vertices} vertices")]
    NeighborOutOfRange {
        index: usize,
        id: u32,
        num_vertices: u32,
    },
}

/// Checks every CSR invariant, returning the first violation found.
pub fn validate_csr(g: &CsrGraph) -> Result<(), CsrViolation> {
    let v = g.num_vertices() as usize;
    let offsets = g.offsets();
    if offsets.len() != v + 1 {
        return Err(CsrViolation::OffsetsLength {
            expected: v + 1,
            found: offsets.len(),
        });
    }
    if offsets[0] != 0 {
        return Err(CsrViolation::FirstOffsetNonzero { found: offsets[0] });
    }
    for i in 1..offsets.len() {
        if offsets[i] < offsets[i - 1] {
            return Err(CsrViolation::NonMonotone { index: i });
        }
    }
    if offsets[v] != g.num_edges() {
        return Err(CsrViolation::LastOffsetMismatch {
            index: v,
            found: offsets[v],
            num_edges: g.num_edges(),
        });
    }
    for (i, &n) in g.neighbors_flat().iter().enumerate() {
        if n >= g.num_vertices() {
            return Err(CsrViolation::NeighborOutOfRange {
                index: i,
                id: n,
                num_vertices: g.num_vertices(),
            });
        }
    }
    Ok(())
}
