use serde::Serialize;

use crate::graph::{Graph, GraphError, VertexSet};
use crate::labels;

/// Local shape around the off-path internal vertex or the internal `K_4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Pattern {
    None,
    /// `v'` adjacent to `u_j, u_{j+1}, u_{j+2}` with `u`, `v` simplicial.
    H,
    /// `v'` adjacent to `u_j` and `u_{j+2}` only: the induced square
    /// `u_j, u_{j+1}, u_{j+2}, v'`.
    HPrime,
    /// Diameter 3 with the four internal vertices forming a `K_4`, each
    /// endpoint joined to one side of it.
    HDoublePrime,
}

/// A diametral pair, a shortest path between it and the local pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiametralConfig {
    #[serde(serialize_with = "labels::vertex")]
    pub u: usize,
    #[serde(serialize_with = "labels::vertex")]
    pub v: usize,
    /// `u = u_0, u_1, .., u_d = v`.
    #[serde(serialize_with = "labels::vertices")]
    pub path: Vec<usize>,
    pub endpoints_simplicial: bool,
    #[serde(serialize_with = "labels::opt_vertex")]
    pub off_path_internal: Option<usize>,
    /// Smallest `l` in `0..=d` with `u_l ~ v'`.
    pub j: Option<usize>,
    pub pattern: Pattern,
    /// `e_1 = {u_1, v_1}`, `e_2 = {v_1, v_2}`, `e_3 = {u_1, u_2}`,
    /// `e_4 = {v_2, u_2}` for the two paths `u, u_1, u_2, v` and `u, v_1, v_2, v`.
    #[serde(serialize_with = "labels::opt_edges")]
    pub h2_edges: Option<[(usize, usize); 4]>,
}

impl DiametralConfig {
    pub fn d(&self) -> usize {
        self.path.len() - 1
    }

    /// `u_{j+1}`, the middle vertex of the fan or square.
    pub fn middle(&self) -> Option<usize> {
        self.j.map(|j| self.path[j + 1]).filter(|_| matches!(self.pattern, Pattern::H | Pattern::HPrime))
    }

    /// The unique maximal cliques through the endpoints, when both are
    /// simplicial.
    pub fn mandatory_cliques(&self, g: &Graph) -> Vec<VertexSet> {
        if self.endpoints_simplicial {
            vec![g.closed_neighbors(self.u), g.closed_neighbors(self.v)]
        } else {
            Vec::new()
        }
    }
}

/// Diametral pairs `(u, v)` with `u < v`, pairs with both endpoints
/// simplicial first, each group in lexicographic order.
pub fn diametral_pairs(g: &Graph) -> Result<Vec<(usize, usize)>, GraphError> {
    g.require_connected()?;
    if g.is_complete() {
        return Err(GraphError::Complete);
    }
    let dist = g.distance_matrix();
    let d = g.diameter()?;
    let n = g.n();
    let (simplicial, _) = g.simplicial_partition();
    let mut both = Vec::new();
    let mut rest = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if dist[u][v] == Some(d) {
                if simplicial.contains(u) && simplicial.contains(v) {
                    both.push((u, v));
                } else {
                    rest.push((u, v));
                }
            }
        }
    }
    both.extend(rest);
    Ok(both)
}

/// Every shortest `u`-`v` path, in lexicographic order.
pub fn shortest_paths(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
    let to_v = g.distances_from(v);
    let mut out = Vec::new();
    let mut path = vec![u];
    extend_shortest(g, &to_v, v, &mut path, &mut out);
    out
}

fn extend_shortest(g: &Graph, to_v: &[Option<usize>], v: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let cur = *path.last().expect("path starts at u");
    if cur == v {
        out.push(path.clone());
        return;
    }
    let Some(left) = to_v[cur] else { return };
    for w in g.neighbors(cur) {
        if to_v[w] == Some(left - 1) {
            path.push(w);
            extend_shortest(g, to_v, v, path, out);
            path.pop();
        }
    }
}

fn first_shortest_path(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    let to_v = g.distances_from(v);
    let mut path = vec![u];
    let mut cur = u;
    while cur != v {
        let left = to_v[cur].expect("connected");
        cur = g.neighbors(cur).iter().find(|&w| to_v[w] == Some(left - 1)).expect("a step towards v");
        path.push(cur);
    }
    path
}

/// The configuration of a chosen pair and path. The off-path vertex is
/// reported only when exactly one internal vertex lies off the path.
pub fn config_for_path(g: &Graph, path: Vec<usize>) -> DiametralConfig {
    let u = path[0];
    let v = *path.last().expect("nonempty path");
    let d = path.len() - 1;
    let (simplicial, internal) = g.simplicial_partition();
    let endpoints_simplicial = simplicial.contains(u) && simplicial.contains(v);
    let off = internal.difference(VertexSet::from_slice(&path));
    let off_path_internal = (off.len() == 1).then(|| off.first().expect("one vertex"));
    let j = off_path_internal.and_then(|w| (0..=d).find(|&l| g.has_edge(path[l], w)));
    let mut pattern = Pattern::None;
    if let (Some(w), Some(j)) = (off_path_internal, j) {
        if j + 2 <= d {
            let adj = |k: usize| g.has_edge(w, path[k]);
            if adj(j) && adj(j + 1) && adj(j + 2) && endpoints_simplicial {
                pattern = Pattern::H;
            } else if adj(j) && !adj(j + 1) && adj(j + 2) {
                pattern = Pattern::HPrime;
            }
        }
    }
    DiametralConfig { u, v, path, endpoints_simplicial, off_path_internal, j, pattern, h2_edges: None }
}

/// The `H''` labelings `(u_1, u_2, v_1, v_2)` of a diameter-3 graph with
/// exactly four internal vertices forming a `K_4`, where `u_1, v_1` are the
/// internal neighbors of `u` and `u_2, v_2` those of `v`.
pub fn h2_labelings(g: &Graph, u: usize, v: usize) -> Vec<[usize; 4]> {
    let (simplicial, internal) = g.simplicial_partition();
    if internal.len() != 4 || !g.is_clique(internal) || !simplicial.contains(u) || !simplicial.contains(v) {
        return Vec::new();
    }
    let a = g.neighbors(u).intersection(internal).to_vec();
    let c = g.neighbors(v).intersection(internal).to_vec();
    if a.len() != 2 || c.len() != 2 || VertexSet::from_slice(&a).union(VertexSet::from_slice(&c)) != internal {
        return Vec::new();
    }
    vec![[a[0], c[0], a[1], c[1]], [a[0], c[1], a[1], c[0]]]
}

fn h2_config(u: usize, v: usize, lab: [usize; 4]) -> DiametralConfig {
    let [u1, u2, v1, v2] = lab;
    DiametralConfig {
        u,
        v,
        path: vec![u, u1, u2, v],
        endpoints_simplicial: true,
        off_path_internal: None,
        j: None,
        pattern: Pattern::HDoublePrime,
        h2_edges: Some([(u1, v1), (v1, v2), (u1, u2), (v2, u2)]),
    }
}

/// The configuration used for classification: first preferred diametral
/// pair, lexicographically first shortest path, and the `H''` labeling when
/// one exists.
pub fn diametral_config(g: &Graph) -> Result<DiametralConfig, GraphError> {
    let (u, v) = diametral_pairs(g)?[0];
    if g.distances_from(u)[v] == Some(3) {
        if let Some(&lab) = h2_labelings(g, u, v).first() {
            return Ok(h2_config(u, v, lab));
        }
    }
    Ok(config_for_path(g, first_shortest_path(g, u, v)))
}

/// Every configuration over all preferred diametral pairs and all their
/// shortest paths (or `H''` labelings). Pairs with non-simplicial endpoints
/// are included only when no pair has both endpoints simplicial.
pub fn all_configs(g: &Graph) -> Result<Vec<DiametralConfig>, GraphError> {
    let pairs = diametral_pairs(g)?;
    let (simplicial, _) = g.simplicial_partition();
    let preferred = simplicial.contains(pairs[0].0) && simplicial.contains(pairs[0].1);
    let mut out = Vec::new();
    for (u, v) in pairs {
        if preferred && !(simplicial.contains(u) && simplicial.contains(v)) {
            break;
        }
        let labs = h2_labelings(g, u, v);
        if !labs.is_empty() && g.distances_from(u)[v] == Some(3) {
            out.extend(labs.into_iter().map(|lab| h2_config(u, v, lab)));
        } else {
            out.extend(shortest_paths(g, u, v).into_iter().map(|p| config_for_path(g, p)));
        }
    }
    Ok(out)
}
