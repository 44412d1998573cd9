use super::{Graph, VertexSet};

impl Graph {
    /// Maximum cardinality search order: each step picks an unnumbered vertex
    /// with the most numbered neighbors (smallest index on ties). Reversed,
    /// this is a perfect elimination ordering whenever the graph is chordal.
    pub fn mcs_order(&self) -> Vec<usize> {
        let n = self.n();
        let mut weight = vec![0usize; n];
        let mut numbered = VertexSet::EMPTY;
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = self
                .vertices()
                .difference(numbered)
                .iter()
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .expect("unnumbered vertices remain");
            numbered.insert(v);
            order.push(v);
            for w in self.neighbors(v).difference(numbered) {
                weight[w] += 1;
            }
        }
        order
    }

    /// True if every vertex's later neighbors in `order` form a clique.
    pub fn is_perfect_elimination_ordering(&self, order: &[usize]) -> bool {
        let mut later = self.vertices();
        for &v in order {
            later.remove(v);
            if !self.is_clique(self.neighbors(v).intersection(later)) {
                return false;
            }
        }
        true
    }

    /// A perfect elimination ordering, if the graph is chordal.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<usize>> {
        let mut order = self.mcs_order();
        order.reverse();
        self.is_perfect_elimination_ordering(&order).then_some(order)
    }

    /// Every induced cycle is a triangle.
    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_and_trees() {
        assert!(!Graph::cycle(4).unwrap().is_chordal());
        assert!(!Graph::cycle(5).unwrap().is_chordal());
        assert!(Graph::cycle(3).unwrap().is_chordal());
        assert!(Graph::star(4).unwrap().is_chordal());
        assert!(Graph::path(6).unwrap().is_chordal());
        let tree = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        assert!(tree.is_chordal());
    }

    #[test]
    fn clique_sum_of_complete_graphs() {
        // K3 ∪_e K4 ∪_e' K3 with disjoint e = {0,1}, e' = {2,3}.
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend([(0, 4), (1, 4), (2, 5), (3, 5)]);
        let g = Graph::from_edges(6, &edges).unwrap();
        let peo = g.perfect_elimination_ordering().unwrap();
        assert!(g.is_perfect_elimination_ordering(&peo));
    }

    #[test]
    fn peo_rejects_bad_order() {
        let p3 = Graph::path(3).unwrap();
        assert!(!p3.is_perfect_elimination_ordering(&[1, 0, 2]));
        assert!(p3.is_perfect_elimination_ordering(&[0, 1, 2]));
    }
}
