//! Degree-sort reordering: relabel vertices so high-degree vertices get the
//! lowest ids, then rebuild the CSR from the relabelled edge list.

use crate::error::GraphError;
use crate::types::{CsrGraph, Edge, EdgeList, Permutation, VertexId};

/// Permutation assigning new ids by descending degree, ties broken by
/// ascending old id, so the result is deterministic.
pub fn degree_sort_permutation(g: &CsrGraph) -> Permutation {
    let mut order: Vec<VertexId> = (0..g.num_vertices()).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));

    let mut new_id_of = vec![0 as VertexId; g.num_vertices() as usize];
    for (rank, &old) in order.iter().enumerate() {
        new_id_of[old as usize] = rank as VertexId;
    }
    Permutation::new(new_id_of).expect("rank assignment is bijective")
}

/// Relabels every edge `(s, d)` to `(p[s], p[d])`, preserving edge order and
/// count. Feeding the result back into a CSR build realizes the
/// CSR-to-CSR reordering pipeline.
pub fn apply_permutation(el: &EdgeList, p: &Permutation) -> Result<EdgeList, GraphError> {
    if p.len() != el.num_vertices() {
        return Err(GraphError::PermutationLengthMismatch {
            expected: el.num_vertices(),
            found: p.len(),
        });
    }
    let edges = el
        .edges()
        .iter()
        .map(|e| Edge::new(p.map(e.src), p.map(e.dst)))
        .collect();
    EdgeList::new(el.num_vertices(), edges)
}
