//! Exact depth of `S/J_G` at small scale.
//!
//! `J_G` lives in `S = K[x_1..x_n, y_1..y_n]`, laid out as ring variables
//! `0..n` for the `x` and `n..2n` for the `y`. Under lex with variable 0
//! largest (`x_1 > .. > x_n > y_1 > .. > y_n`) the initial ideal of `J_G` is
//! squarefree, so its Betti numbers come from Hochster's formula. A squarefree
//! initial ideal has the same extremal Betti numbers as the ideal itself, hence
//! the same depth, projective dimension and regularity. The other entries of
//! the table are only upper bounds for those of `S/J_G`.

mod betti;
pub mod field;
mod groebner;
mod monomial;
mod poly;
pub mod rank;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::structure::ohtani_completion;

pub use betti::{betti_table, BettiTable, HomologyField};
pub use field::{Field, Fp, F2, Q};
pub use groebner::{buchberger, ideal_equal, initial_ideal, intersect_ideals, is_groebner_basis};
pub use monomial::{Monomial, TermOrder, MAX_RING_VARS};
pub use poly::Polynomial;

/// Default cap on ring variables (graphs up to 8 vertices).
pub const DEFAULT_MAX_VARS: usize = 16;
/// Environment variable overriding [`DEFAULT_MAX_VARS`].
pub const MAX_VARS_ENV: &str = "BINEDGE_ORACLE_MAX_VARS";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{needed} ring variables exceed the oracle limit of {limit}")]
    LimitExceeded { needed: usize, limit: usize },
    #[error("initial ideal has a non-squarefree generator {0}")]
    NotSquarefree(String),
    #[error("vertex {0} is not internal")]
    NotInternal(usize),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum FieldChoice {
    #[default]
    Q,
    F2,
}

impl FieldChoice {
    pub fn name(self) -> &'static str {
        match self {
            FieldChoice::Q => "Q",
            FieldChoice::F2 => "F2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest number of ring variables (`2n`) the oracle accepts.
    pub max_vars: usize,
    pub field: FieldChoice,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_vars: DEFAULT_MAX_VARS, field: FieldChoice::Q }
    }
}

impl OracleConfig {
    /// Defaults, with the variable cap read from `BINEDGE_ORACLE_MAX_VARS`
    /// when set.
    pub fn from_env() -> Result<Self, OracleError> {
        let mut cfg = OracleConfig::default();
        if let Ok(v) = std::env::var(MAX_VARS_ENV) {
            cfg.max_vars = v
                .trim()
                .parse()
                .map_err(|_| OracleError::Invalid(format!("{MAX_VARS_ENV}={v:?} is not a number")))?;
        }
        Ok(cfg)
    }

    pub fn with_field(self, field: FieldChoice) -> Self {
        OracleConfig { field, ..self }
    }

    /// Fails when a graph on `n` vertices is beyond the variable cap.
    pub fn check_order(&self, n: usize) -> Result<(), OracleError> {
        let needed = 2 * n;
        let limit = self.max_vars.min(MAX_RING_VARS - 1);
        if needed > limit {
            return Err(OracleError::LimitExceeded { needed, limit });
        }
        Ok(())
    }
}

/// Exact invariants of `S/J_G` together with the Betti table of the initial
/// ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub n: usize,
    pub depth: usize,
    pub pd: usize,
    pub reg: usize,
    pub extremal: Vec<(usize, usize)>,
    /// Betti numbers of `S/in(J_G)`; entrywise upper bounds for `S/J_G`.
    pub betti_initial: BettiTable,
    pub initial_ideal_size: usize,
    pub groebner_basis_size: usize,
    pub order: String,
    pub field: String,
}

/// `x_i y_j - x_j y_i` for every edge `i < j`.
pub fn jg_generators<F: Field>(g: &Graph) -> Vec<Polynomial<F>> {
    g.edges().into_iter().map(|(i, j)| edge_binomial(g.n(), i, j)).collect()
}

fn edge_binomial<F: Field>(n: usize, i: usize, j: usize) -> Polynomial<F> {
    let m = |a: usize, b: usize| Monomial::var(a).mul(&Monomial::var(b));
    Polynomial::from_terms(TermOrder::Lex, vec![(m(i, n + j), F::one()), (m(j, n + i), F::one().neg())])
}

/// Reduced Groebner basis of `J_G` under the diagonal lex order and the
/// minimal generators of its initial ideal.
pub fn initial_ideal_of<F: Field>(g: &Graph) -> Result<(Vec<Polynomial<F>>, Vec<Monomial>), OracleError> {
    let gens = jg_generators::<F>(g);
    let gb = buchberger(&gens, TermOrder::Lex);
    let init = initial_ideal(&gb, TermOrder::Lex)?;
    Ok((gb, init))
}

/// Depth, projective dimension, regularity and extremal corners of `S/J_G`.
pub fn depth_exact(g: &Graph, cfg: &OracleConfig) -> Result<OracleReport, OracleError> {
    cfg.check_order(g.n())?;
    match cfg.field {
        FieldChoice::Q => run::<Q>(g, HomologyField::Q),
        FieldChoice::F2 => run::<F2>(g, HomologyField::F2),
    }
}

fn run<F: Field>(g: &Graph, hfield: HomologyField) -> Result<OracleReport, OracleError> {
    let (gb, init) = initial_ideal_of::<F>(g)?;
    let table = betti_table(&init, 2 * g.n(), hfield)?;
    Ok(OracleReport {
        n: g.n(),
        depth: table.depth,
        pd: table.pd,
        reg: table.reg,
        extremal: table.extremal_corners.clone(),
        initial_ideal_size: init.len(),
        groebner_basis_size: gb.len(),
        betti_initial: table,
        order: TermOrder::Lex.name().into(),
        field: F::NAME.into(),
    })
}

/// Checks `J_G = J_{G_v} ∩ ((x_v, y_v) + J_{G \ v})` for an internal vertex
/// `v`, with `G \ v` kept on the original variables.
pub fn ohtani_check(g: &Graph, v: usize, cfg: &OracleConfig) -> Result<bool, OracleError> {
    g.check_vertex(v)?;
    cfg.check_order(g.n())?;
    if g.is_simplicial(v) {
        return Err(OracleError::NotInternal(v + 1));
    }
    let n = g.n();
    let jg = jg_generators::<Q>(g);
    let jgv = jg_generators::<Q>(&ohtani_completion(g, v)?);
    let mut rest: Vec<Polynomial<Q>> = g
        .edges()
        .into_iter()
        .filter(|&(i, j)| i != v && j != v)
        .map(|(i, j)| edge_binomial(n, i, j))
        .collect();
    for var in [v, n + v] {
        rest.push(Polynomial::monomial(TermOrder::Lex, Monomial::var(var), Q::one()));
    }
    Ok(ideal_equal(&jg, &intersect_ideals(&jgv, &rest)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        let k2 = Graph::complete(2).unwrap();
        let gens = jg_generators::<Q>(&k2);
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].display(2), "x1*y2 - x2*y1");
        assert_eq!(jg_generators::<Q>(&Graph::path(3).unwrap()).len(), 2);
        assert!(jg_generators::<Q>(&Graph::empty(3).unwrap()).is_empty());
    }

    #[test]
    fn small_depths() {
        let cfg = OracleConfig::default();
        for (g, want) in [
            (Graph::path(3).unwrap(), 4),
            (Graph::complete(3).unwrap(), 4),
            (Graph::cycle(4).unwrap(), 4),
            (Graph::empty(2).unwrap(), 4),
        ] {
            let r = depth_exact(&g, &cfg).unwrap();
            assert_eq!(r.depth, want, "{g:?}");
            assert_eq!(r.depth + r.pd, 2 * g.n());
            assert_eq!(r.betti_initial.get(1, 2), g.edge_count() as u64);
        }
    }

    #[test]
    fn triangle_initial_ideal() {
        let (_, init) = initial_ideal_of::<Q>(&Graph::complete(3).unwrap()).unwrap();
        let names: Vec<_> = init.iter().map(|m| m.display(3)).collect();
        assert_eq!(names, vec!["x1*y2", "x1*y3", "x2*y3"]);
    }

    #[test]
    fn limit() {
        let cfg = OracleConfig::default();
        assert_eq!(
            depth_exact(&Graph::path(9).unwrap(), &cfg),
            Err(OracleError::LimitExceeded { needed: 18, limit: 16 })
        );
    }

    #[test]
    fn ohtani_identity() {
        let cfg = OracleConfig::default();
        assert!(ohtani_check(&Graph::path(3).unwrap(), 1, &cfg).unwrap());
        assert!(ohtani_check(&Graph::cycle(4).unwrap(), 0, &cfg).unwrap());
        assert_eq!(ohtani_check(&Graph::path(3).unwrap(), 0, &cfg), Err(OracleError::NotInternal(1)));
    }

    #[test]
    fn characteristic_two_agrees_on_small_cases() {
        let cfg = OracleConfig::default().with_field(FieldChoice::F2);
        let r = depth_exact(&Graph::cycle(4).unwrap(), &cfg).unwrap();
        assert_eq!((r.depth, r.field.as_str()), (4, "F2"));
    }
}
