use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// `G = K_{r_1} ∪_{K_{q_1}} K_{r_2} ∪ .. ∪_{K_{q_{m-1}}} K_{r_m}` where the
/// facets `F_1, .., F_m` form a leaf order and `F_{i-1}` is the unique branch
/// of `F_i` within `F_1, .., F_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainOfCliques {
    pub r: Vec<usize>,
    /// `q[i] = |F_i ∩ F_{i+1}|`.
    pub q: Vec<usize>,
    /// Entry `k` is true when the overlaps `F_k ∩ F_{k+1}` and
    /// `F_{k+1} ∩ F_{k+2}` share a vertex. Length `m - 2`.
    pub overlap_nonempty: Vec<bool>,
    pub facet_order: Vec<VertexSet>,
}

impl ChainOfCliques {
    pub fn overlaps(&self) -> Vec<VertexSet> {
        self.facet_order.windows(2).map(|w| w[0].intersection(w[1])).collect()
    }

    pub fn any_overlap_nonempty(&self) -> bool {
        self.overlap_nonempty.iter().any(|&b| b)
    }

    /// No gluing clique contains the next or the previous one.
    pub fn gluing_cliques_incomparable(&self) -> bool {
        self.overlaps().windows(2).all(|w| !w[0].is_subset(w[1]) && !w[1].is_subset(w[0]))
    }

    /// The class the overlap depth bound applies to: every gluing clique has
    /// at least two vertices, two consecutive gluing cliques meet, and none is
    /// nested in a neighbour.
    pub fn has_meeting_overlaps(&self) -> bool {
        self.q.iter().all(|&q| q >= 2) && self.any_overlap_nonempty() && self.gluing_cliques_incomparable()
    }

    fn key(&self) -> (&[usize], &[usize], Vec<bool>, Vec<u64>) {
        // `true` first so that a nonempty overlap is reported early.
        let ov = self.overlap_nonempty.iter().map(|b| !b).collect();
        (&self.r, &self.q, ov, self.facet_order.iter().map(|f| f.0).collect())
    }
}

/// Recognizes a chain of cliques. Among all valid facet orders the one with
/// lexicographically smallest `(r, q, overlaps, facets)` is returned, so the
/// result does not depend on vertex labels beyond the final tie-break.
pub fn chain_of_cliques(g: &Graph) -> Option<ChainOfCliques> {
    if !g.is_connected() || !g.is_chordal() {
        return None;
    }
    let facets = g.maximal_cliques();
    if facets.len() < 2 {
        return None;
    }
    let mut best: Option<ChainOfCliques> = None;
    let mut order = Vec::with_capacity(facets.len());
    let mut used = vec![false; facets.len()];
    extend(&facets, &mut order, &mut used, &mut |chain| {
        let c = build(chain);
        if best.as_ref().map_or(true, |b| c.key() < b.key()) {
            best = Some(c);
        }
    });
    best
}

fn build(order: &[VertexSet]) -> ChainOfCliques {
    let overlaps: Vec<VertexSet> = order.windows(2).map(|w| w[0].intersection(w[1])).collect();
    ChainOfCliques {
        r: order.iter().map(|f| f.len()).collect(),
        q: overlaps.iter().map(|o| o.len()).collect(),
        overlap_nonempty: overlaps.windows(2).map(|w| !w[0].intersection(w[1]).is_empty()).collect(),
        facet_order: order.to_vec(),
    }
}

fn extend(facets: &[VertexSet], order: &mut Vec<VertexSet>, used: &mut [bool], found: &mut dyn FnMut(&[VertexSet])) {
    if order.len() == facets.len() {
        found(order);
        return;
    }
    for k in 0..facets.len() {
        if used[k] || !(order.is_empty() || unique_branch_is_last(order, facets[k])) {
            continue;
        }
        used[k] = true;
        order.push(facets[k]);
        extend(facets, order, used, found);
        order.pop();
        used[k] = false;
    }
}

/// With `f` appended to `prefix`, the last facet of `prefix` is the only
/// branch of `f`: a facet `b` is a branch when every other facet meets `f`
/// inside `b ∩ f`.
fn unique_branch_is_last(prefix: &[VertexSet], f: VertexSet) -> bool {
    let last = prefix.len() - 1;
    let is_branch = |b: usize| {
        let bf = prefix[b].intersection(f);
        prefix.iter().all(|h| h.intersection(f).is_subset(bf))
    };
    !prefix[last].intersection(f).is_empty() && is_branch(last) && (0..last).all(|b| !is_branch(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::clique_sum;

    #[test]
    fn path_is_a_chain_of_edges() {
        let c = chain_of_cliques(&Graph::path(4).unwrap()).unwrap();
        assert_eq!((c.r, c.q), (vec![2, 2, 2], vec![1, 1]));
        assert_eq!(c.overlap_nonempty, vec![false]);
    }

    #[test]
    fn overlapping_k4_chain() {
        let k4 = Graph::complete(4).unwrap();
        let h = clique_sum(&k4, &k4, (&[2, 3], &[0, 1])).unwrap();
        // Second overlap {3, 5} shares vertex 3 with the first {2, 3}.
        let g = clique_sum(&h, &k4, (&[3, 5], &[0, 1])).unwrap();
        assert_eq!(g.n(), 8);
        let c = chain_of_cliques(&g).unwrap();
        assert_eq!((c.r.clone(), c.q.clone(), c.overlap_nonempty.clone()), (vec![4, 4, 4], vec![2, 2], vec![true]));
        assert!(c.any_overlap_nonempty());
    }

    #[test]
    fn nested_gluing_cliques() {
        // facets {1,5,6}, {2,4,5,6}, {3,4,5,6}, {0,3,4}: {5,6} lies inside {4,5,6}
        let g = crate::graph::io::parse_graph6("FClzw").unwrap();
        let c = chain_of_cliques(&g).unwrap();
        assert_eq!(c.q, vec![2, 3, 2]);
        assert!(c.any_overlap_nonempty());
        assert!(!c.gluing_cliques_incomparable());
        assert!(!c.has_meeting_overlaps());
        let k4 = Graph::complete(4).unwrap();
        let h = clique_sum(&k4, &k4, (&[2, 3], &[0, 1])).unwrap();
        let g = clique_sum(&h, &k4, (&[3, 5], &[0, 1])).unwrap();
        assert!(chain_of_cliques(&g).unwrap().has_meeting_overlaps());
    }

    #[test]
    fn non_chains() {
        assert!(chain_of_cliques(&Graph::star(3).unwrap()).is_none());
        assert!(chain_of_cliques(&Graph::complete(4).unwrap()).is_none());
        assert!(chain_of_cliques(&Graph::cycle(5).unwrap()).is_none());
        let tri = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]).unwrap();
        assert!(chain_of_cliques(&tri).is_none());
    }
}
