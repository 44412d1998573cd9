use serde::{Deserialize, Serialize};

use super::cuts::for_each_subset_of_size;
use super::{Graph, VertexSet};

/// Induced cycles of length at least four.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedCycles {
    /// Number of vertex sets inducing a 4-cycle.
    pub count_c4: usize,
    pub has_c5_or_longer: bool,
    /// One induced cycle of length at least five, in cyclic order.
    pub witness: Option<Vec<usize>>,
}

impl Graph {
    pub fn induced_cycle_scan(&self) -> InducedCycles {
        let mut count_c4 = 0;
        for_each_subset_of_size(self.n(), 4, |s| {
            if s.iter().all(|v| self.neighbors(v).intersection(s).len() == 2) {
                count_c4 += 1;
            }
        });
        let witness = self.long_induced_cycle();
        InducedCycles { count_c4, has_c5_or_longer: witness.is_some(), witness }
    }

    /// Vertex sets inducing a 4-cycle.
    pub fn induced_c4s(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for_each_subset_of_size(self.n(), 4, |s| {
            if s.iter().all(|v| self.neighbors(v).intersection(s).len() == 2) {
                out.push(s);
            }
        });
        out
    }

    /// An induced cycle on at least five vertices, found by growing chordless
    /// paths from each vertex as the smallest member of the cycle.
    fn long_induced_cycle(&self) -> Option<Vec<usize>> {
        for s in 0..self.n() {
            let above = VertexSet(!0u64 << s).intersection(self.vertices()).without(s);
            for p1 in self.neighbors(s).intersection(above) {
                let mut path = vec![s, p1];
                if self.grow(&mut path, above) {
                    return Some(path);
                }
            }
        }
        None
    }

    fn grow(&self, path: &mut Vec<usize>, allowed: VertexSet) -> bool {
        let k = path.len() - 1;
        let last = path[k];
        let inner: VertexSet = path[1..k].iter().copied().collect();
        let on_path: VertexSet = path.iter().copied().collect();
        let mut blocked = on_path;
        for v in inner {
            blocked = blocked.union(self.neighbors(v));
        }
        for w in self.neighbors(last).intersection(allowed).difference(blocked) {
            if self.has_edge(w, path[0]) {
                if path.len() + 1 >= 5 {
                    path.push(w);
                    return true;
                }
                continue;
            }
            path.push(w);
            if self.grow(path, allowed) {
                return true;
            }
            path.pop();
        }
        false
    }
}
