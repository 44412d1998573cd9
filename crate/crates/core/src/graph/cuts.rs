use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Graph, VertexSet};

/// Cut vertices and the cutsets of a graph up to a size bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutStructure {
    pub cut_vertices: VertexSet,
    /// Every `T` with `|T| <= max_size` passing [`Graph::is_cutset`], ordered
    /// by size and then by bit pattern.
    pub minimal_cutsets: Vec<VertexSet>,
    /// `a[i]`: number of cutsets of size `i`.
    pub a: BTreeMap<usize, usize>,
    /// `m = sum of a[i]`.
    pub m: usize,
    pub max_size: usize,
}

impl CutStructure {
    pub fn a_i(&self, i: usize) -> usize {
        self.a.get(&i).copied().unwrap_or(0)
    }
}

impl Graph {
    /// Number of connected components of `G` with the vertices of `t` removed.
    pub fn components_after(&self, t: VertexSet) -> usize {
        self.components_within(self.vertices().difference(t)).len()
    }

    /// `T` is a cutset when removing any single vertex from `T` strictly
    /// lowers the component count: `c(T \ {v}) < c(T)` for all `v` in `T`.
    /// The empty set is not a cutset.
    pub fn is_cutset(&self, t: VertexSet) -> bool {
        if t.is_empty() {
            return false;
        }
        let c = self.components_after(t);
        t.iter().all(|v| self.components_after(t.without(v)) < c)
    }

    /// Enumerates cutsets by increasing size up to `max_size`.
    pub fn minimal_cutsets(&self, max_size: usize) -> CutStructure {
        let n = self.n();
        let max_size = max_size.min(n);
        let mut found = Vec::new();
        let mut a = BTreeMap::new();
        for size in 1..=max_size {
            let mut count = 0;
            for_each_subset_of_size(n, size, |t| {
                if self.is_cutset(t) {
                    found.push(t);
                    count += 1;
                }
            });
            if count > 0 {
                a.insert(size, count);
            }
        }
        let cut_vertices = found.iter().filter(|t| t.len() == 1).fold(VertexSet::EMPTY, |acc, t| acc.union(*t));
        CutStructure { cut_vertices, m: found.len(), minimal_cutsets: found, a, max_size }
    }

    /// Inclusion-minimal disconnecting sets of size at most `max_size`: removing
    /// `T` leaves at least two components and no proper subset of `T` does.
    /// Unlike [`Graph::is_cutset`], a pair of adjacent cut vertices of a block
    /// graph is not minimal here.
    pub fn minimal_separators(&self, max_size: usize) -> Vec<VertexSet> {
        let mut found: Vec<VertexSet> = Vec::new();
        for size in 1..=max_size.min(self.n()) {
            let mut layer = Vec::new();
            for_each_subset_of_size(self.n(), size, |t| {
                if self.components_after(t) >= 2 && !found.iter().any(|s| s.is_subset(t)) {
                    layer.push(t);
                }
            });
            found.extend(layer);
        }
        found
    }

    pub fn cut_vertices(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.is_cutset(VertexSet::singleton(v))).collect()
    }
}

/// Calls `f` on every `size`-subset of `{0, .., n-1}` in increasing bit order.
pub(crate) fn for_each_subset_of_size(n: usize, size: usize, mut f: impl FnMut(VertexSet)) {
    if size > n {
        return;
    }
    if size == 0 {
        f(VertexSet::EMPTY);
        return;
    }
    let limit: u128 = 1u128 << n;
    // Gosper's hack.
    let mut x: u128 = (1u128 << size) - 1;
    while x < limit {
        f(VertexSet(x as u64));
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_triangles_on_edge() -> Graph {
        // shared edge {0,1}, apexes 2,3,4
        Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]).unwrap()
    }

    #[test]
    fn component_counts() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.components_after(VertexSet::singleton(1)), 2);
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.components_after(VertexSet::singleton(0)), 1);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.components_after(k4.vertices()), 0);
    }

    #[test]
    fn cutset_predicate() {
        assert!(Graph::path(3).unwrap().is_cutset(VertexSet::singleton(1)));
        assert!(!Graph::cycle(4).unwrap().is_cutset(VertexSet::singleton(0)));
        assert!(three_triangles_on_edge().is_cutset(VertexSet::from_slice(&[0, 1])));
        assert!(!Graph::path(3).unwrap().is_cutset(VertexSet::EMPTY));
    }

    #[test]
    fn star_has_only_its_center() {
        let cs = Graph::star(3).unwrap().minimal_cutsets(4);
        assert_eq!(cs.a_i(1), 1);
        assert!((2..=4).all(|i| cs.a_i(i) == 0));
        assert_eq!(cs.cut_vertices.to_vec(), vec![0]);
    }

    #[test]
    fn triangles_on_shared_edge() {
        let cs = three_triangles_on_edge().minimal_cutsets(5);
        assert_eq!(cs.a_i(1), 0);
        assert_eq!(cs.a_i(2), 1);
        assert_eq!(cs.m, 1);
        assert_eq!(cs.minimal_cutsets, vec![VertexSet::from_slice(&[0, 1])]);
    }

    #[test]
    fn separators_skip_supersets() {
        // triangle {2,3,4} with pendants 1-3 and 0-4
        let g = Graph::from_edges(5, &[(1, 3), (2, 3), (0, 4), (2, 4), (3, 4)]).unwrap();
        assert!(g.is_cutset(VertexSet::from_slice(&[3, 4])));
        assert_eq!(g.minimal_separators(2), vec![VertexSet::singleton(3), VertexSet::singleton(4)]);
        assert_eq!(three_triangles_on_edge().minimal_separators(3), vec![VertexSet::from_slice(&[0, 1])]);
        assert_eq!(Graph::path(3).unwrap().minimal_separators(3), vec![VertexSet::singleton(1)]);
    }

    #[test]
    fn complete_graph_has_none() {
        assert_eq!(Graph::complete(5).unwrap().minimal_cutsets(5).m, 0);
    }

    #[test]
    fn gosper_counts() {
        let mut k = 0;
        for_each_subset_of_size(6, 3, |s| {
            assert_eq!(s.len(), 3);
            k += 1
        });
        assert_eq!(k, 20);
    }
}
