use crate::error::GraphError;

/// Vertex identifier. Graphs with `>= 2^32` vertices are rejected at
/// construction time.
pub type VertexId = u32;

/// A directed edge in coordinate (COO) form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub src: VertexId,
    pub dst: VertexId,
}

impl Edge {
    pub fn new(src: VertexId, dst: VertexId) -> Self {
        Edge { src, dst }
    }

    /// The same edge with endpoints swapped, for transpose construction.
    pub fn reversed(self) -> Self {
        Edge {
            src: self.dst,
            dst: self.src,
        }
    }
}

/// A graph in coordinate-list (COO / "Edgelist") form: the universal input
/// format. Edge order is significant for deterministic construction; no
/// dedup or self-loop removal is ever performed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    num_vertices: VertexId,
    edges: Vec<Edge>,
}

impl EdgeList {
    /// Builds an edge list, checking that every endpoint is in range.
    pub fn new(num_vertices: VertexId, edges: Vec<Edge>) -> Result<Self, GraphError> {
        for (i, e) in edges.iter().enumerate() {
            let bad = if e.src >= num_vertices {
                Some(e.src)
            } else if e.dst >= num_vertices {
                Some(e.dst)
            } else {
                None
            };
            if let Some(id) = bad {
                return Err(GraphError::VertexOutOfBounds {
                    edge_index: i,
                    id,
                    num_vertices,
                });
            }
        }
        Ok(EdgeList {
            num_vertices,
            edges,
        })
    }

    /// Convenience constructor from `(src, dst)` pairs.
    pub fn from_pairs(num_vertices: VertexId, pairs: &[(u32, u32)]) -> Result<Self, GraphError> {
        Self::new(
            num_vertices,
            pairs.iter().map(|&(s, d)| Edge::new(s, d)).collect(),
        )
    }

    pub fn num_vertices(&self) -> VertexId {
        self.num_vertices
    }

    pub fn num_edges(&self) -> u64 {
        self.edges.len() as u64
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The transposed edge list (every edge reversed), preserving order.
    pub fn transposed(&self) -> EdgeList {
        EdgeList {
            num_vertices: self.num_vertices,
            edges: self.edges.iter().map(|e| e.reversed()).collect(),
        }
    }

    pub fn into_edges(self) -> Vec<Edge> {
        self.edges
    }
}

/// Compressed Sparse Row graph: an offsets array (OA) of `num_vertices + 1`
/// cumulative counts and a neighbor array (NA) holding each vertex's
/// neighbors contiguously. The same type stores CSC layouts (the transpose);
/// only the construction direction differs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsrGraph {
    num_vertices: VertexId,
    offsets: Vec<u64>,
    neighbors: Vec<VertexId>,
}

impl CsrGraph {
    /// Assembles a CSR from raw parts without validation. Callers that did
    /// not construct the parts themselves should run [`crate::validate_csr`].
    pub fn from_parts(num_vertices: VertexId, offsets: Vec<u64>, neighbors: Vec<VertexId>) -> Self {
        CsrGraph {
            num_vertices,
            offsets,
            neighbors,
        }
    }

    pub fn num_vertices(&self) -> VertexId {
        self.num_vertices
    }

    pub fn num_edges(&self) -> u64 {
        self.neighbors.len() as u64
    }

    pub fn offsets(&self) -> &[u64] {
        &self.offsets
    }

    pub fn neighbors_flat(&self) -> &[VertexId] {
        &self.neighbors
    }

    pub fn degree(&self, v: VertexId) -> u64 {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    /// Neighbors of `v` as a contiguous slice.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let lo = self.offsets[v as usize] as usize;
        let hi = self.offsets[v as usize + 1] as usize;
        &self.neighbors[lo..hi]
    }

    /// Expands back to an edge list in CSR (source-major) order.
    pub fn to_edgelist(&self) -> EdgeList {
        let mut edges = Vec::with_capacity(self.neighbors.len());
        for v in 0..self.num_vertices {
            for &n in self.neighbors(v) {
                edges.push(Edge::new(v, n));
            }
        }
        EdgeList {
            num_vertices: self.num_vertices,
            edges,
        }
    }
}

/// A relabelling of vertex ids: `new_id_of[old] = new`. Always bijective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    new_id_of: Vec<VertexId>,
}

impl Permutation {
    /// Checks bijectivity with a marking pass.
    pub fn new(new_id_of: Vec<VertexId>) -> Result<Self, GraphError> {
        let n = new_id_of.len();
        let mut seen = vec![false; n];
        for &new_id in &new_id_of {
            if new_id as usize >= n || seen[new_id as usize] {
                return Err(GraphError::PermutationNotBijective { new_id });
            }
            seen[new_id as usize] = true;
        }
        Ok(Permutation { new_id_of })
    }

    pub fn identity(num_vertices: VertexId) -> Self {
        Permutation {
            new_id_of: (0..num_vertices).collect(),
        }
    }

    pub fn len(&self) -> u32 {
        self.new_id_of.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.new_id_of.is_empty()
    }

    pub fn map(&self, old: VertexId) -> VertexId {
        self.new_id_of[old as usize]
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.new_id_of
    }
}
