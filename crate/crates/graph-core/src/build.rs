//! Edgelist-to-CSR construction: degree counting, prefix sums, and the
//! baseline neighbor-population kernel (sequential and atomic-parallel).

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::GraphError;
use crate::types::{CsrGraph, EdgeList, VertexId};

/// Per-vertex out-degree counts of an edge list.
pub fn degrees_from_edgelist(el: &EdgeList) -> Vec<u64> {
    let mut degrees = vec![0u64; el.num_vertices() as usize];
    for e in el.edges() {
        degrees[e.src as usize] += 1;
    }
    degrees
}

/// Exclusive prefix sum: `offsets[0] = 0`, `offsets[i+1] = offsets[i] + degrees[i]`.
///
/// Fails if the running total overflows `u64`.
pub fn prefix_sum(degrees: &[u64]) -> Result<Vec<u64>, GraphError> {
    let mut offsets = Vec::with_capacity(degrees.len() + 1);
    let mut total = 0u64;
    offsets.push(0);
    for (v, &d) in degrees.iter().enumerate() {
        total = total
            .checked_add(d)
            .ok_or(GraphError::OffsetOverflow { vertex: v })?;
        offsets.push(total);
    }
    Ok(offsets)
}

/// Builds a CSR from an edge list by populating each vertex's neighbor slots
/// through a working copy of the offsets array. Sequential and deterministic:
/// neighbors of a vertex appear in edge-list order.
pub fn csr_from_edgelist_baseline(el: &EdgeList) -> Result<CsrGraph, GraphError> {
    let offsets = prefix_sum(&degrees_from_edgelist(el))?;
    let mut cursors = offsets.clone();
    let mut neighbors = vec![0 as VertexId; el.num_edges() as usize];
    for e in el.edges() {
        let slot = cursors[e.src as usize];
        neighbors[slot as usize] = e.dst;
        cursors[e.src as usize] = slot + 1;
    }
    Ok(CsrGraph::from_parts(el.num_vertices(), offsets, neighbors))
}

/// Parallel CSR construction: fill cursors advance by atomic fetch-add, so
/// each edge claims a unique neighbor slot. Per-vertex neighbor order depends
/// on thread interleaving; the per-vertex multiset always matches the
/// sequential build.
pub fn csr_from_edgelist_parallel(el: &EdgeList, num_threads: usize) -> Result<CsrGraph, GraphError> {
    if num_threads <= 1 || el.edges().len() < 2 {
        return csr_from_edgelist_baseline(el);
    }
    let offsets = prefix_sum(&degrees_from_edgelist(el))?;
    let cursors: Vec<AtomicU64> = offsets[..el.num_vertices() as usize]
        .iter()
        .map(|&o| AtomicU64::new(o))
        .collect();
    let mut neighbors = vec![0 as VertexId; el.num_edges() as usize];
    let slots = SharedSlots(neighbors.as_mut_ptr());

    let edges = el.edges();
    let chunk = edges.len().div_ceil(num_threads);
    std::thread::scope(|s| {
        for block in edges.chunks(chunk) {
            let cursors = &cursors;
            let slots = &slots;
            s.spawn(move || {
                for e in block {
                    let slot = cursors[e.src as usize].fetch_add(1, Ordering::Relaxed);
                    // Safety: fetch_add hands every edge a distinct slot index
                    // inside the neighbors allocation, so no two threads write
                    // the same element.
                    unsafe { slots.0.add(slot as usize).write(e.dst) };
                }
            });
        }
    });

    Ok(CsrGraph::from_parts(el.num_vertices(), offsets, neighbors))
}

struct SharedSlots(*mut VertexId);
unsafe impl Sync for SharedSlots {}

/// Builds the transpose (CSC) of an edge list: identical to building a CSR
/// from the edge list with src/dst swapped.
pub fn csc_from_edgelist(el: &EdgeList) -> Result<CsrGraph, GraphError> {
    csr_from_edgelist_baseline(&el.transposed())
}
