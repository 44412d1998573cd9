
use crate::graph::{Graph, GraphError, VertexSet};

/// `G_v`: the graph with the neighborhood of `v` completed to a clique.
pub fn ohtani_completion(g: &Graph, v: usize) -> Result<Graph, GraphError> {
    g.check_vertex(v)?;
    let nbrs = g.neighbors(v).to_vec();
    let mut extra = Vec::new();
    for (k, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[k + 1..] {
            extra.push((a, b));
        }
    }
    g.with_edges(&extra)
}

/// `G \ v` with vertices compacted to `0..n-1`. The vector maps new indices
/// to the original ones.
pub fn delete_vertex(g: &Graph, v: usize) -> Result<(Graph, Vec<usize>), GraphError> {
    g.check_vertex(v)?;
    Ok(g.induced(g.vertices().without(v)))
}

pub fn delete_edge(g: &Graph, i: usize, j: usize) -> Result<Graph, GraphError> {
    g.without_edge(i, j)
}

/// Clique sum of `g1` and `g2`, identifying `glue.0[k]` in `g1` with
/// `glue.1[k]` in `g2`. See [`clique_sum_mapped`] for the labeling.
pub fn clique_sum(g1: &Graph, g2: &Graph, glue: (&[usize], &[usize])) -> Result<Graph, GraphError> {
    clique_sum_mapped(g1, g2, glue).map(|(g, _)| g)
}

/// Like [`clique_sum`], also returning where each vertex of `g2` lands.
/// Vertices of `g1` keep their indices; the unglued vertices of `g2` follow in
/// increasing order.
pub fn clique_sum_mapped(g1: &Graph, g2: &Graph, glue: (&[usize], &[usize])) -> Result<(Graph, Vec<usize>), GraphError> {
    let (a, b) = glue;
    if a.len() != b.len() {
        return Err(GraphError::Invalid(format!("glue sets differ in size: {} vs {}", a.len(), b.len())));
    }
    for &v in a {
        g1.check_vertex(v)?;
    }
    for &v in b {
        g2.check_vertex(v)?;
    }
    let (sa, sb) = (VertexSet::from_slice(a), VertexSet::from_slice(b));
    if sa.len() != a.len() || sb.len() != b.len() {
        return Err(GraphError::Invalid("glue lists repeat a vertex".into()));
    }
    if !g1.is_clique(sa) || !g2.is_clique(sb) {
        return Err(GraphError::Invalid("glue sets must induce complete subgraphs".into()));
    }
    let n = g1.n() + g2.n() - b.len();
    if n > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooLarge(n));
    }
    let mut map = vec![usize::MAX; g2.n()];
    for (&x, &y) in a.iter().zip(b) {
        map[y] = x;
    }
    for (next, slot) in (g1.n()..).zip(map.iter_mut().filter(|s| **s == usize::MAX)) {
        *slot = next;
    }
    let mut edges = g1.edges();
    edges.extend(g2.edges().into_iter().map(|(i, j)| (map[i], map[j])));
    Ok((Graph::from_edges(n, &edges)?, map))
}

/// One side of a decomposition, with its vertices' original indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Part {
    pub graph: Graph,
    pub map: Vec<usize>,
}

/// `G = G_1 ∪_v G_2` with `v` simplicial in both parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub vertex: usize,
    pub parts: [Part; 2],
}

/// Smallest vertex along which `g` splits as a clique sum of two graphs in
/// both of which it is simplicial.
///
/// This happens exactly when `G \ v` has two components and `v`'s neighbors in
/// each form a clique.
pub fn is_decomposable(g: &Graph) -> Option<Decomposition> {
    for v in 0..g.n() {
        let comps = g.components_within(g.vertices().without(v));
        if comps.len() != 2 {
            continue;
        }
        let nv = g.neighbors(v);
        if !comps.iter().all(|&c| g.is_clique(nv.intersection(c))) {
            continue;
        }
        let part = |c: VertexSet| {
            let (graph, map) = g.induced(c.with(v));
            Part { graph, map }
        };
        return Some(Decomposition { vertex: v, parts: [part(comps[0]), part(comps[1])] });
    }
    None
}

/// Connected with exactly one cycle, i.e. `|E| = n`.
pub fn is_unicyclic(g: &Graph) -> bool {
    g.is_connected() && g.edge_count() == g.n()
}
