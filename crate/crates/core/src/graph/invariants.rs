use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, VertexSet};

/// Length of a shortest path, or `Infinite` between different components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// The numbers every statement about `depth(S/J_G)` is phrased in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBundle {
    pub n: usize,
    /// Diameter.
    pub d: usize,
    /// Number of simplicial vertices.
    pub f: usize,
    /// Vertex connectivity, `n - 1` for complete graphs.
    pub kappa: usize,
    /// Number of internal (non-simplicial) vertices.
    pub iv: usize,
    /// Clique number.
    pub omega: usize,
    pub chordal: bool,
    pub connected: bool,
    pub complete: bool,
    /// `(n + 2 - kappa) - (d + f)`.
    pub gap: i64,
}

impl InvariantBundle {
    /// Invariants of a connected graph.
    pub fn compute(g: &Graph) -> Result<Self, GraphError> {
        g.require_connected()?;
        let n = g.n();
        let d = g.diameter()?;
        let (simplicial, internal) = g.simplicial_partition();
        let f = simplicial.len();
        let kappa = g.vertex_connectivity()?;
        let omega = g.clique_number();
        Ok(InvariantBundle {
            n,
            d,
            f,
            kappa,
            iv: internal.len(),
            omega,
            chordal: g.is_chordal(),
            connected: true,
            complete: g.is_complete(),
            gap: (n as i64 + 2 - kappa as i64) - (d + f) as i64,
        })
    }

    /// `d + f`, the general lower bound on the depth.
    pub fn lower_bound(&self) -> usize {
        self.d + self.f
    }

    /// `n + 2 - kappa`, the general upper bound on the depth.
    pub fn upper_bound(&self) -> usize {
        self.n + 2 - self.kappa
    }
}

impl Graph {
    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].expect("queued vertices have a distance");
            for w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, i: usize, j: usize) -> Result<Distance, GraphError> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        Ok(match self.distances_from(i)[j] {
            Some(d) => Distance::Finite(d),
            None => Distance::Infinite,
        })
    }

    /// All-pairs distance matrix (BFS from every vertex).
    pub fn distance_matrix(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.n()).map(|v| self.distances_from(v)).collect()
    }

    pub fn diameter(&self) -> Result<usize, GraphError> {
        let mut d = 0;
        for row in self.distance_matrix() {
            for x in row {
                d = d.max(x.ok_or(GraphError::Disconnected)?);
            }
        }
        Ok(d)
    }

    /// `v` is simplicial when its closed neighborhood is a clique, i.e. it lies
    /// in exactly one maximal clique.
    pub fn is_simplicial(&self, v: usize) -> bool {
        self.is_clique(self.closed_neighbors(v))
    }

    /// Splits the vertex set into (simplicial, internal).
    pub fn simplicial_partition(&self) -> (VertexSet, VertexSet) {
        let simplicial: VertexSet = (0..self.n()).filter(|&v| self.is_simplicial(v)).collect();
        (simplicial, self.vertices().difference(simplicial))
    }

    /// Vertex connectivity. Complete graphs get `n - 1`.
    ///
    /// Computed as the minimum, over non-adjacent pairs, of the maximum number
    /// of internally vertex-disjoint paths between them.
    pub fn vertex_connectivity(&self) -> Result<usize, GraphError> {
        self.require_connected()?;
        let n = self.n();
        if self.is_complete() {
            return Ok(n.saturating_sub(1));
        }
        let mut best = n;
        for s in 0..n {
            for t in s + 1..n {
                if !self.has_edge(s, t) {
                    best = best.min(self.max_flow_paths(s, t, best).len());
                }
            }
        }
        Ok(best)
    }

    /// A maximum family of internally vertex-disjoint paths between two
    /// distinct non-adjacent vertices, each listed from `s` to `t`.
    pub fn disjoint_paths(&self, s: usize, t: usize) -> Result<Vec<Vec<usize>>, GraphError> {
        self.check_vertex(s)?;
        self.check_vertex(t)?;
        if s == t || self.has_edge(s, t) {
            return Err(GraphError::Invalid(format!(
                "disjoint paths need distinct non-adjacent endpoints, got {} and {}",
                s + 1,
                t + 1
            )));
        }
        Ok(self.max_flow_paths(s, t, usize::MAX))
    }

    /// Unit-capacity max flow on the vertex-split digraph, stopping early once
    /// `cap` paths exist. Node `2v` is the entry of `v`, `2v + 1` its exit.
    fn max_flow_paths(&self, s: usize, t: usize, cap: usize) -> Vec<Vec<usize>> {
        let n = self.n();
        let nodes = 2 * n;
        // residual[a][b] for the arcs v_in -> v_out and u_out -> w_in.
        let mut residual = vec![vec![0i8; nodes]; nodes];
        for v in 0..n {
            let c = if v == s || v == t { n as i8 } else { 1 };
            residual[2 * v][2 * v + 1] = c;
            for w in self.neighbors(v) {
                residual[2 * v + 1][2 * w] = 1;
            }
        }
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0;
        while flow < cap {
            let mut prev = vec![usize::MAX; nodes];
            prev[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(a) = queue.pop_front() {
                if a == sink {
                    break;
                }
                for b in 0..nodes {
                    if residual[a][b] > 0 && prev[b] == usize::MAX {
                        prev[b] = a;
                        queue.push_back(b);
                    }
                }
            }
            if prev[sink] == usize::MAX {
                break;
            }
            let mut b = sink;
            while b != source {
                let a = prev[b];
                residual[a][b] -= 1;
                residual[b][a] += 1;
                b = a;
            }
            flow += 1;
        }
        // Decompose: follow saturated vertex-to-vertex arcs from s.
        let mut used = vec![vec![false; n]; n];
        let mut paths = Vec::with_capacity(flow);
        for _ in 0..flow {
            let mut path = vec![s];
            let mut cur = s;
            while cur != t {
                let next = self
                    .neighbors(cur)
                    .iter()
                    .find(|&w| {
                        !used[cur][w] && residual[2 * w][2 * cur + 1] > 0 && residual[2 * cur + 1][2 * w] == 0
                    })
                    .expect("flow decomposition follows a saturated arc");
                used[cur][next] = true;
                path.push(next);
                cur = next;
            }
            paths.push(path);
        }
        paths
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_connectivity(g: &Graph) -> usize {
        let n = g.n();
        (0u64..1 << n)
            .filter(|&t| {
                let rest = g.vertices().difference(VertexSet(t));
                g.components_within(rest).len() >= 2
            })
            .map(|t| t.count_ones() as usize)
            .min()
            .unwrap_or(n - 1)
    }

    #[test]
    fn distances() {
        let p5 = Graph::path(5).unwrap();
        assert_eq!(p5.distance(0, 4).unwrap(), Distance::Finite(4));
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.distance(0, 2).unwrap(), Distance::Finite(1));
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.distance(0, 2).unwrap(), Distance::Infinite);
        assert!(two.diameter().is_err());
        assert!(p5.distance(0, 5).is_err());
        assert_eq!(Graph::complete(5).unwrap().diameter().unwrap(), 1);
    }

    #[test]
    fn simplicial_counts() {
        let (s, i) = Graph::complete(4).unwrap().simplicial_partition();
        assert_eq!((s.len(), i.len()), (4, 0));
        let (s, _) = Graph::path(4).unwrap().simplicial_partition();
        assert_eq!(s.to_vec(), vec![0, 3]);
        let (s, _) = Graph::cycle(4).unwrap().simplicial_partition();
        assert!(s.is_empty());
    }

    #[test]
    fn connectivity_small() {
        assert_eq!(Graph::cycle(4).unwrap().vertex_connectivity().unwrap(), 2);
        assert_eq!(brute_connectivity(&Graph::cycle(4).unwrap()), 2);
        assert_eq!(Graph::path(4).unwrap().vertex_connectivity().unwrap(), 1);
        assert_eq!(Graph::complete(4).unwrap().vertex_connectivity().unwrap(), 3);
        let k33 = Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        assert_eq!(k33.vertex_connectivity().unwrap(), 3);
        assert_eq!(brute_connectivity(&k33), 3);
    }

    #[test]
    fn disjoint_paths_are_disjoint() {
        let c6 = Graph::cycle(6).unwrap();
        let paths = c6.disjoint_paths(0, 3).unwrap();
        assert_eq!(paths.len(), 2);
        let mut inner = VertexSet::EMPTY;
        for p in &paths {
            assert_eq!((p[0], *p.last().unwrap()), (0, 3));
            for w in p.windows(2) {
                assert!(c6.has_edge(w[0], w[1]));
            }
            for &v in &p[1..p.len() - 1] {
                assert!(!inner.contains(v));
                inner.insert(v);
            }
        }
        assert!(c6.disjoint_paths(0, 1).is_err());
    }

    #[test]
    fn bundle_of_path() {
        let b = InvariantBundle::compute(&Graph::path(5).unwrap()).unwrap();
        assert_eq!((b.n, b.d, b.f, b.kappa, b.iv, b.omega), (5, 4, 2, 1, 3, 2));
        assert!(b.chordal && !b.complete);
        assert_eq!(b.gap, 0);
    }
}
