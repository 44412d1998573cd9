use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockKind {
    /// Chordal, any two maximal cliques share at most one vertex.
    BlockGraph,
    /// Chordal, and whenever three maximal cliques have a common vertex their
    /// pairwise intersections coincide.
    GeneralizedBlockGraph,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockProfile {
    pub kind: BlockKind,
    /// Inclusion-minimal separator counts by size, for sizes up to `omega - 1`.
    pub a: BTreeMap<usize, usize>,
    pub m: usize,
    pub omega: usize,
}

impl BlockProfile {
    pub fn a_i(&self, i: usize) -> usize {
        self.a.get(&i).copied().unwrap_or(0)
    }

    pub fn is_generalized_block(&self) -> bool {
        self.kind != BlockKind::Neither
    }
}

pub fn block_profile(g: &Graph) -> BlockProfile {
    let facets = g.maximal_cliques();
    let omega = facets.first().map_or(0, |c| c.len());
    let seps = g.minimal_separators(omega.saturating_sub(1));
    let mut a = BTreeMap::new();
    for s in &seps {
        *a.entry(s.len()).or_insert(0) += 1;
    }
    let kind = if !g.is_connected() || !g.is_chordal() {
        BlockKind::Neither
    } else if pairs(&facets).all(|(a, b)| a.intersection(b).len() <= 1) {
        BlockKind::BlockGraph
    } else if generalized_block_condition(&facets) {
        BlockKind::GeneralizedBlockGraph
    } else {
        BlockKind::Neither
    };
    BlockProfile { kind, a, m: seps.len(), omega }
}

fn pairs(facets: &[VertexSet]) -> impl Iterator<Item = (VertexSet, VertexSet)> + '_ {
    facets.iter().enumerate().flat_map(move |(i, &a)| facets[i + 1..].iter().map(move |&b| (a, b)))
}

fn generalized_block_condition(facets: &[VertexSet]) -> bool {
    let k = facets.len();
    for a in 0..k {
        for b in a + 1..k {
            let ab = facets[a].intersection(facets[b]);
            if ab.is_empty() {
                continue;
            }
            for c in b + 1..k {
                if ab.intersection(facets[c]).is_empty() {
                    continue;
                }
                let ac = facets[a].intersection(facets[c]);
                let bc = facets[b].intersection(facets[c]);
                if ab != ac || ab != bc {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_are_block_graphs() {
        let p = block_profile(&Graph::star(3).unwrap());
        assert_eq!(p.kind, BlockKind::BlockGraph);
        assert_eq!(p.a_i(1), 1);
        assert_eq!(block_profile(&Graph::path(5).unwrap()).kind, BlockKind::BlockGraph);
    }

    #[test]
    fn triangles_on_an_edge() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]).unwrap();
        let p = block_profile(&g);
        assert_eq!(p.kind, BlockKind::GeneralizedBlockGraph);
        assert_eq!((p.a_i(2), p.m, p.omega), (1, 1, 3));
    }

    #[test]
    fn overlaps_meeting_in_a_vertex() {
        // Middle K_4 on {0,1,2,3}; triangles on {0,1} and {1,2}: three facets
        // share vertex 1 but meet pairwise in different sets.
        let g = Graph::complete(4)
            .unwrap()
            .disjoint_union(&Graph::empty(2).unwrap())
            .unwrap()
            .with_edges(&[(0, 4), (1, 4), (1, 5), (2, 5)])
            .unwrap();
        assert_eq!(block_profile(&g).kind, BlockKind::Neither);
        assert_eq!(block_profile(&Graph::cycle(4).unwrap()).kind, BlockKind::Neither);
    }

    #[test]
    fn disjoint_overlaps_are_generalized() {
        // Middle K_4 with triangles on disjoint edges {0,1} and {2,3}.
        let g = Graph::complete(4)
            .unwrap()
            .disjoint_union(&Graph::empty(2).unwrap())
            .unwrap()
            .with_edges(&[(0, 4), (1, 4), (2, 5), (3, 5)])
            .unwrap();
        let p = block_profile(&g);
        assert_eq!(p.kind, BlockKind::GeneralizedBlockGraph);
        assert_eq!((p.a_i(1), p.a_i(2), p.a_i(3)), (0, 2, 0));
    }
}
