use super::{Graph, VertexSet};

impl Graph {
    /// All maximal cliques, each sorted by bit pattern; the list is sorted
    /// by decreasing size, then by bit pattern.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        if self.n() > 0 {
            self.bron_kerbosch(VertexSet::EMPTY, self.vertices(), VertexSet::EMPTY, &mut out);
        }
        out.sort_by(|a, b| b.len().cmp(&a.len()).then(a.0.cmp(&b.0)));
        out
    }

    // Tomita-style pivoting on the vertex of P ∪ X with most neighbors in P.
    fn bron_kerbosch(&self, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| self.neighbors(u).intersection(p).len())
            .expect("P is non-empty");
        for v in p.difference(self.neighbors(pivot)) {
            let nv = self.neighbors(v);
            self.bron_kerbosch(r.with(v), p.intersection(nv), x.intersection(nv), out);
            p.remove(v);
            x.insert(v);
        }
    }

    /// Clique number ω(G).
    pub fn clique_number(&self) -> usize {
        self.maximal_cliques().first().map_or(0, |c| c.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_is_one_clique() {
        let cl = Graph::complete(4).unwrap().maximal_cliques();
        assert_eq!(cl, vec![VertexSet::full(4)]);
    }

    #[test]
    fn four_cycle_has_four_edges() {
        let cl = Graph::cycle(4).unwrap().maximal_cliques();
        assert_eq!(cl.len(), 4);
        assert!(cl.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn isolated_vertices_are_cliques() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(g.maximal_cliques(), vec![VertexSet::from_slice(&[0, 1]), VertexSet::singleton(2)]);
        assert_eq!(Graph::empty(0).unwrap().clique_number(), 0);
    }

    #[test]
    fn brute_force_agrees() {
        // Petersen graph: 15 maximal cliques, all edges.
        let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
        let inner: Vec<_> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let edges: Vec<_> = outer.into_iter().chain(spokes).chain(inner).collect();
        let g = Graph::from_edges(10, &edges).unwrap();
        let cl = g.maximal_cliques();
        assert_eq!(cl.len(), 15);
        for s in 1u64..1 << 10 {
            let s = VertexSet(s);
            let maximal = g.is_clique(s) && (0..10).filter(|&v| !s.contains(v)).all(|v| !g.is_clique(s.with(v)));
            assert_eq!(maximal, cl.contains(&s));
        }
    }
}
