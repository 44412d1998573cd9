//! Simple undirected graphs on at most 64 vertices and the invariants the
//! depth formulas quantify over.
//!
//! Vertices are 0-based indices in the Rust API. The text formats
//! ([`io`]) and every serialized report use 1-based labels.

mod chordal;
mod cliques;
mod cuts;
mod cycles;
mod invariants;
pub mod io;
mod set;

use std::fmt;

use thiserror::Error;

pub use cuts::CutStructure;
pub use cycles::InducedCycles;
pub use invariants::{Distance, InvariantBundle};
pub use set::{VertexIter, VertexSet};

/// Widest graph a bit row can hold.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graphs are limited to {MAX_VERTICES} vertices, got {0}")]
    TooLarge(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is complete")]
    Complete,
    #[error("{{{0},{1}}} is not an edge")]
    MissingEdge(usize, usize),
    #[error("{0}")]
    Invalid(String),
}

/// An immutable simple graph stored as symmetric adjacency bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n], edge_count: 0 })
    }

    /// Builds a graph from 0-based edge pairs. Duplicate pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    /// Builds a graph from 1-based edge pairs, as they appear in edge-list files.
    pub fn from_labeled_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(i, j) in edges {
            if i == 0 || i > n {
                return Err(GraphError::VertexOutOfRange { vertex: i, n });
            }
            if j == 0 || j > n {
                return Err(GraphError::VertexOutOfRange { vertex: j, n });
            }
            if i == j {
                return Err(GraphError::SelfLoop(i));
            }
            g.add_edge(i - 1, j - 1)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows; the rows must be symmetric and
    /// loop-free.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let full = VertexSet::full(n).0;
        let mut degree_sum = 0;
        for (i, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                return Err(GraphError::Invalid(format!("row {i} has bits beyond n")));
            }
            if row >> i & 1 == 1 {
                return Err(GraphError::SelfLoop(i));
            }
            for j in VertexSet(row) {
                if adj[j] >> i & 1 == 0 {
                    return Err(GraphError::Invalid(format!("adjacency not symmetric at ({i},{j})")));
                }
            }
            degree_sum += row.count_ones() as usize;
        }
        Ok(Graph { n, adj, edge_count: degree_sum / 2 })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for i in 0..n {
            g.adj[i] = VertexSet::full(n).without(i).0;
        }
        g.edge_count = n * n.saturating_sub(1) / 2;
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::Invalid(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    fn add_edge(&mut self, i: usize, j: usize) -> Result<(), GraphError> {
        for v in [i, j] {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        if i == j {
            return Err(GraphError::SelfLoop(i));
        }
        if self.adj[i] >> j & 1 == 0 {
            self.adj[i] |= 1 << j;
            self.adj[j] |= 1 << i;
            self.edge_count += 1;
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && self.adj[i] >> j & 1 == 1
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v]).with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for i in 0..self.n {
            for j in VertexSet(self.adj[i] >> i >> 1 << i << 1) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// True if the vertices of `s` are pairwise adjacent.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * self.n.saturating_sub(1) / 2
    }

    /// Vertices reachable from `start` inside `within` (which must contain `start`).
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.neighbors(v));
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components of the subgraph induced on `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v, within);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0, self.vertices()) == self.vertices()
    }

    /// Induced subgraph on `keep`, relabeled to `0..|keep|` in increasing
    /// order. The returned vector maps new indices to old ones.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut adj = vec![0u64; map.len()];
        let mut edge_count = 0;
        for (a, &va) in map.iter().enumerate() {
            for (b, &vb) in map.iter().enumerate() {
                if self.adj[va] >> vb & 1 == 1 {
                    adj[a] |= 1 << b;
                    if a < b {
                        edge_count += 1;
                    }
                }
            }
        }
        (Graph { n: map.len(), adj, edge_count }, map)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            for w in self.neighbors(v) {
                adj[perm[v]] |= 1 << perm[w];
            }
        }
        Graph { n: self.n, adj, edge_count: self.edge_count }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj, edge_count: self.edge_count + other.edge_count })
    }

    /// Same vertex set with extra edges; pairs already present are ignored.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &(i, j) in extra {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    /// Adds a new vertex, index `n`, joined to `neighbors`.
    pub fn with_vertex(&self, neighbors: &[usize]) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(&Graph::empty(1)?)?;
        for &w in neighbors {
            self.check_vertex(w)?;
            g.add_edge(w, self.n)?;
        }
        Ok(g)
    }

    /// Same vertex set minus the edge `{i, j}`.
    pub fn without_edge(&self, i: usize, j: usize) -> Result<Graph, GraphError> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if !self.has_edge(i, j) {
            return Err(GraphError::MissingEdge(i + 1, j + 1));
        }
        let mut g = self.clone();
        g.adj[i] &= !(1 << j);
        g.adj[j] &= !(1 << i);
        g.edge_count -= 1;
        Ok(g)
    }

    pub fn require_connected(&self) -> Result<(), GraphError> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(GraphError::Disconnected)
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (i, j)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}-{}", i + 1, j + 1)?;
        }
        f.write_str("])")
    }
}
