use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};
use crate::structure::clique_sum;

/// Named graph families with their parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `K_f` and a triangle sharing an edge, with a path on `d` vertices hung
    /// from one end of that edge. `f >= 3`, `d >= 2`; `n = f + d`,
    /// `kappa = 1`.
    ExK1 { f: usize, d: usize },
    /// Two triangles on an edge, with a path on `d - 1` vertices hung from a
    /// vertex off that edge. `d >= 3`; `n = d + 2`, `kappa = 1`, `f = 2`.
    Sigma { d: usize },
    /// `K_{f+1}` with triangles on two edges sharing a vertex. `f >= 2`;
    /// `n = f + 3`, `kappa = 2`, `d = 2`.
    Gamma { f: usize },
    /// `K_{f+2}` with triangles on two disjoint edges. `f >= 2`;
    /// `n = f + 4`, `kappa = 2`, `d = 3`.
    Omega { f: usize },
    /// `K_{f+kappa-1}` with a `K_{kappa+1}` on each of two `kappa`-cliques
    /// that share `kappa - 1` vertices. `f >= 2`, `kappa >= 3`;
    /// `n = f + kappa + 1`, `d = 2`.
    Delta { f: usize, kappa: usize },
    Path { n: usize },
    Complete { n: usize },
    Cycle { n: usize },
    Star { leaves: usize },
    /// `K_{r_1} ∪_{K_{q_1}} K_{r_2} ∪ .. ∪_{K_{q_{m-1}}} K_{r_m}`. Each gluing
    /// clique avoids the previous one where possible; with `overlap` set,
    /// consecutive gluing cliques of size at least 2 share one vertex.
    ChainOfCliques { r: Vec<usize>, q: Vec<usize>, overlap: bool },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::ExK1 { .. } => "exk1",
            FamilySpec::Sigma { .. } => "sigma",
            FamilySpec::Gamma { .. } => "gamma",
            FamilySpec::Omega { .. } => "omega",
            FamilySpec::Delta { .. } => "delta",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Star { .. } => "star",
            FamilySpec::ChainOfCliques { .. } => "chain",
        }
    }

    /// `(n, d, f, kappa)` the construction is designed to have, for the
    /// families where it is determined by the parameters.
    pub fn expected_invariants(&self) -> Option<(usize, usize, usize, usize)> {
        match *self {
            FamilySpec::ExK1 { f, d } => Some((f + d, d, f, 1)),
            FamilySpec::Sigma { d } => Some((d + 2, d, 2, 1)),
            FamilySpec::Gamma { f } => Some((f + 3, 2, f, 2)),
            FamilySpec::Omega { f } => Some((f + 4, 3, f, 2)),
            FamilySpec::Delta { f, kappa } => Some((f + kappa + 1, 2, f, kappa)),
            _ => None,
        }
    }
}

fn out_of_range(msg: String) -> GraphError {
    GraphError::Invalid(msg)
}

/// Builds the graph of a family.
pub fn construct(spec: &FamilySpec) -> Result<Graph, GraphError> {
    match spec {
        &FamilySpec::ExK1 { f, d } => {
            if f < 3 || d < 2 {
                return Err(out_of_range(format!("exk1 needs f >= 3 and d >= 2, got f = {f}, d = {d}")));
            }
            let k = Graph::complete(f)?;
            let h = clique_sum(&k, &Graph::complete(3)?, (&[0, 1], &[0, 1]))?;
            clique_sum(&h, &Graph::path(d)?, (&[0], &[0]))
        }
        &FamilySpec::Sigma { d } => {
            if d < 3 {
                return Err(out_of_range(format!("sigma needs d >= 3, got {d}")));
            }
            // triangles {0,1,2} and {1,2,3} on the edge {1,2}; the path starts at 3
            let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])?;
            clique_sum(&diamond, &Graph::path(d - 1)?, (&[3], &[0]))
        }
        &FamilySpec::Gamma { f } => {
            if f < 2 {
                return Err(out_of_range(format!("gamma needs f >= 2, got {f}")));
            }
            let k = Graph::complete(f + 1)?;
            let g = clique_sum(&k, &Graph::complete(3)?, (&[0, 1], &[0, 1]))?;
            clique_sum(&g, &Graph::complete(3)?, (&[1, 2], &[0, 1]))
        }
        &FamilySpec::Omega { f } => {
            if f < 2 {
                return Err(out_of_range(format!("omega needs f >= 2, got {f}")));
            }
            let k = Graph::complete(f + 2)?;
            let g = clique_sum(&k, &Graph::complete(3)?, (&[0, 1], &[0, 1]))?;
            clique_sum(&g, &Graph::complete(3)?, (&[2, 3], &[0, 1]))
        }
        &FamilySpec::Delta { f, kappa } => {
            if f < 2 || kappa < 3 {
                return Err(out_of_range(format!("delta needs f >= 2 and kappa >= 3, got f = {f}, kappa = {kappa}")));
            }
            let k = Graph::complete(f + kappa - 1)?;
            let a: Vec<usize> = (0..kappa).collect();
            let b: Vec<usize> = (1..=kappa).collect();
            let cap: Vec<usize> = (0..kappa).collect();
            let g = clique_sum(&k, &Graph::complete(kappa + 1)?, (&a, &cap))?;
            clique_sum(&g, &Graph::complete(kappa + 1)?, (&b, &cap))
        }
        &FamilySpec::Path { n } => Graph::path(n),
        &FamilySpec::Complete { n } => Graph::complete(n),
        &FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(out_of_range(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::cycle(n)
        }
        &FamilySpec::Star { leaves } => Graph::star(leaves),
        FamilySpec::ChainOfCliques { r, q, overlap } => chain(r, q, *overlap),
    }
}

fn chain(r: &[usize], q: &[usize], overlap: bool) -> Result<Graph, GraphError> {
    if r.is_empty() || q.len() + 1 != r.len() {
        return Err(out_of_range(format!("chain needs |q| = |r| - 1, got |r| = {}, |q| = {}", r.len(), q.len())));
    }
    for (i, &qi) in q.iter().enumerate() {
        if qi == 0 || qi >= r[i].min(r[i + 1]) {
            return Err(out_of_range(format!("chain needs 1 <= q_{} < min(r_{}, r_{})", i + 1, i + 1, i + 2)));
        }
    }
    let mut g = Graph::complete(r[0])?;
    // facet as [previous glue.., new vertices..] in global labels
    let mut facet: Vec<usize> = (0..r[0]).collect();
    let mut prev_glue: Vec<usize> = Vec::new();
    for (i, &qi) in q.iter().enumerate() {
        let fresh: Vec<usize> = facet.iter().copied().filter(|v| !prev_glue.contains(v)).collect();
        let mut glue: Vec<usize> = Vec::with_capacity(qi);
        if overlap && qi >= 2 && !prev_glue.is_empty() {
            glue.push(*prev_glue.last().expect("nonempty"));
        }
        for &v in fresh.iter().rev() {
            if glue.len() == qi {
                break;
            }
            glue.push(v);
        }
        for &v in prev_glue.iter().rev() {
            if glue.len() == qi {
                break;
            }
            if !glue.contains(&v) {
                glue.push(v);
            }
        }
        glue.sort_unstable();
        let n0 = g.n();
        let cap: Vec<usize> = (0..qi).collect();
        g = clique_sum(&g, &Graph::complete(r[i + 1])?, (&glue, &cap))?;
        facet = glue.clone();
        facet.extend(n0..g.n());
        prev_glue = glue;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::InvariantBundle;

    fn ndfk(g: &Graph) -> (usize, usize, usize, usize) {
        let b = InvariantBundle::compute(g).unwrap();
        (b.n, b.d, b.f, b.kappa)
    }

    #[test]
    fn examples_have_their_invariants() {
        let specs = [
            FamilySpec::ExK1 { f: 3, d: 2 },
            FamilySpec::ExK1 { f: 4, d: 3 },
            FamilySpec::Sigma { d: 3 },
            FamilySpec::Sigma { d: 4 },
            FamilySpec::Gamma { f: 2 },
            FamilySpec::Gamma { f: 3 },
            FamilySpec::Omega { f: 2 },
            FamilySpec::Omega { f: 3 },
            FamilySpec::Delta { f: 2, kappa: 3 },
            FamilySpec::Delta { f: 3, kappa: 4 },
        ];
        for spec in specs {
            let g = construct(&spec).unwrap();
            assert_eq!(Some(ndfk(&g)), spec.expected_invariants(), "{spec:?}");
            assert_eq!(InvariantBundle::compute(&g).unwrap().gap, 1, "{spec:?}");
        }
    }

    #[test]
    fn parameter_ranges() {
        assert!(construct(&FamilySpec::Sigma { d: 2 }).is_err());
        assert!(construct(&FamilySpec::Delta { f: 2, kappa: 2 }).is_err());
        assert!(construct(&FamilySpec::ExK1 { f: 2, d: 3 }).is_err());
        assert!(construct(&FamilySpec::ChainOfCliques { r: vec![3, 3], q: vec![3], overlap: false }).is_err());
    }

    #[test]
    fn chains() {
        let spec = FamilySpec::ChainOfCliques { r: vec![4, 4, 4], q: vec![2, 2], overlap: true };
        let g = construct(&spec).unwrap();
        assert_eq!(g.n(), 8);
        let c = crate::structure::chain_of_cliques(&g).unwrap();
        assert_eq!((c.r.clone(), c.q.clone()), (vec![4, 4, 4], vec![2, 2]));
        assert!(c.any_overlap_nonempty());
        let plain = construct(&FamilySpec::ChainOfCliques { r: vec![4, 4, 4], q: vec![2, 2], overlap: false }).unwrap();
        assert!(!crate::structure::chain_of_cliques(&plain).unwrap().any_overlap_nonempty());
        let p = construct(&FamilySpec::ChainOfCliques { r: vec![2, 2, 2], q: vec![1, 1], overlap: false }).unwrap();
        assert_eq!(p, Graph::path(4).unwrap());
    }

    #[test]
    fn serde_shape() {
        let spec: FamilySpec = serde_json::from_str(r#"{"family":"gamma","f":3}"#).unwrap();
        assert_eq!(spec, FamilySpec::Gamma { f: 3 });
    }
}
