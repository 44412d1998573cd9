//! Exhaustive combinatorial checks shared by the property suite and the
//! acceptance runner. None of them touches the oracle.

use binedge::graph::{Graph, InvariantBundle, VertexSet};
use binedge::structure::{delete_vertex, ohtani_completion};

/// Smallest vertex set whose removal disconnects `g`, by subset search;
/// `n - 1` for complete graphs.
pub fn brute_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n - 1;
    }
    (0..n)
        .find(|&k| {
            subsets_of_size(n, k).any(|s| {
                let rest = g.vertices().difference(s);
                g.components_within(rest).len() >= 2
            })
        })
        .expect("a non-complete graph has a separating set")
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).filter(move |m| m.count_ones() as usize == k).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

/// Violations on one connected graph of: connectivity against subset search,
/// pairwise distances and `f` under neighbourhood completion at an internal
/// vertex, and pairwise distances and `f` under deleting it.
pub fn property_violations(g: &Graph) -> Vec<String> {
    let mut out = Vec::new();
    let b = InvariantBundle::compute(g).expect("connected");
    let brute = brute_connectivity(g);
    if b.kappa != brute {
        out.push(format!("kappa {} but brute force gives {brute}", b.kappa));
    }
    let dist = g.distance_matrix();
    for v in 0..g.n() {
        if g.is_simplicial(v) {
            continue;
        }
        let gv = ohtani_completion(g, v).expect("valid vertex");
        let bv = InvariantBundle::compute(&gv).expect("completion stays connected");
        if !g.edges().iter().all(|&(i, j)| gv.has_edge(i, j)) {
            out.push(format!("completion at {v} loses an edge"));
        }
        if bv.f < b.f {
            out.push(format!("completion at {v}: f drops from {} to {}", b.f, bv.f));
        }
        let dv = gv.distance_matrix();
        for (z, row) in dist.iter().enumerate() {
            for (w, &d) in row.iter().enumerate() {
                let (d, e) = (d.expect("connected"), dv[z][w].expect("connected"));
                if e > d || e + 1 < d {
                    out.push(format!("completion at {v}: dist({z}, {w}) moves from {d} to {e}"));
                }
            }
        }
        let (gd, old) = delete_vertex(g, v).expect("valid vertex");
        let fd = gd.simplicial_partition().0.len();
        if fd < b.f {
            out.push(format!("deleting {v}: f drops from {} to {fd}", b.f));
        }
        for (z, row) in gd.distance_matrix().iter().enumerate() {
            for (w, &e) in row.iter().enumerate() {
                if e.is_some_and(|e| e < dist[old[z]][old[w]].expect("connected")) {
                    out.push(format!("deleting {v}: dist({}, {}) shrinks", old[z], old[w]));
                }
            }
        }
    }
    out
}

/// Internal vertices `v` with `G \ v` connected and `d(G \ v) < d(G)`: the
/// diameter can drop when every diametral pair involves `v`.
pub fn deletions_shrinking_diameter(g: &Graph) -> Vec<usize> {
    let d = g.diameter().expect("connected");
    (0..g.n())
        .filter(|&v| !g.is_simplicial(v))
        .filter(|&v| {
            let (gd, _) = delete_vertex(g, v).expect("valid vertex");
            gd.is_connected() && gd.diameter().expect("connected") < d
        })
        .collect()
}
