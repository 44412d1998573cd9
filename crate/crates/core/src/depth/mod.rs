//! Depth of `S/J_G` from combinatorics alone: the general bounds, the exact
//! values attached to each recognized class, and a certificate naming the
//! rule that produced them.

use serde::Serialize;
use thiserror::Error;

use crate::classify::{classify, ClassLabel, ClassTag};
use crate::graph::{Graph, GraphError, InvariantBundle};
use crate::structure::{block_profile, chain_of_cliques, is_decomposable, is_unicyclic, BlockProfile};

/// Where a depth value or bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rule {
    /// `d + f` for graphs meeting the upper bound.
    #[serde(rename = "gap-zero")]
    GapZero,
    /// `n + 1`: chordal, `kappa = 1`, outside the fan subclass.
    #[serde(rename = "chordal-no-fan")]
    ChordalNoFan,
    /// `n`: chordal, `kappa = 1`, fan with no cut vertex at apex or middle.
    #[serde(rename = "chordal-fan")]
    ChordalFan,
    /// `n + 1`: one induced square whose apex or middle is a cut vertex.
    #[serde(rename = "square-cut")]
    SquareCut,
    /// `n`: one induced square, neither apex nor middle a cut vertex.
    #[serde(rename = "square-no-cut")]
    SquareNoCut,
    /// `n + 2 - kappa`: diameter 2, `kappa >= 2`.
    #[serde(rename = "diameter-two")]
    DiameterTwo,
    /// `n - 1`: internal `K_4` with nothing attached along its middle edges.
    #[serde(rename = "k4-bare-middle")]
    K4BareMiddle,
    /// `n`: diameter 3, `kappa = 2`, chordal, not the bare `K_4` case.
    #[serde(rename = "k4-other")]
    K4Other,
    /// `n`: diameter 3, `kappa = 2`, not chordal.
    #[serde(rename = "diameter-three-square")]
    DiameterThreeSquare,
    /// `n + 1 - sum (i - 1) a_i` for generalized block graphs.
    #[serde(rename = "generalized-block")]
    GeneralizedBlock,
    /// Lower bound `d + f + 1` for chains of cliques with overlapping gluing.
    #[serde(rename = "chain-overlap-lower")]
    ChainOverlapLower,
    /// `(n, n + 1)` for unicyclic graphs that are not cycles.
    #[serde(rename = "unicyclic-bounds")]
    UnicyclicBounds,
    /// Splitting at a vertex simplicial in both parts: depths add, minus 2.
    #[serde(rename = "clique-sum")]
    CliqueSum,
    /// `m + 1` for `K_m`.
    #[serde(rename = "complete")]
    Complete,
    /// `(d + f, n + 2 - kappa)` only.
    #[serde(rename = "generic")]
    Generic,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::GapZero => "gap-zero",
            Rule::ChordalNoFan => "chordal-no-fan",
            Rule::ChordalFan => "chordal-fan",
            Rule::SquareCut => "square-cut",
            Rule::SquareNoCut => "square-no-cut",
            Rule::DiameterTwo => "diameter-two",
            Rule::K4BareMiddle => "k4-bare-middle",
            Rule::K4Other => "k4-other",
            Rule::DiameterThreeSquare => "diameter-three-square",
            Rule::GeneralizedBlock => "generalized-block",
            Rule::ChainOverlapLower => "chain-overlap-lower",
            Rule::UnicyclicBounds => "unicyclic-bounds",
            Rule::CliqueSum => "clique-sum",
            Rule::Complete => "complete",
            Rule::Generic => "generic",
        }
    }

    /// Rules that pin the depth exactly.
    pub fn is_exact(self) -> bool {
        !matches!(self, Rule::ChainOverlapLower | Rule::UnicyclicBounds | Rule::Generic)
    }

    /// The exact rule attached to a class tag, if any.
    pub fn for_tag(tag: ClassTag) -> Option<Rule> {
        Some(match tag {
            ClassTag::HibiMadani_G_d | ClassTag::HibiMadani_F_q => Rule::GapZero,
            ClassTag::D_minus_D1 => Rule::ChordalNoFan,
            ClassTag::D1 => Rule::ChordalFan,
            ClassTag::NonChordalC4_CutHit => Rule::SquareCut,
            ClassTag::NonChordalC4_CutMiss => Rule::SquareNoCut,
            ClassTag::Kappa2plus_D2 => Rule::DiameterTwo,
            ClassTag::Kappa2_D3_Chordal_E23Free => Rule::K4BareMiddle,
            ClassTag::Kappa2_D3_Chordal_Other => Rule::K4Other,
            ClassTag::Kappa2_D3_NonChordal => Rule::DiameterThreeSquare,
            ClassTag::GeneralizedBlock => Rule::GeneralizedBlock,
            ClassTag::ChainOfCliques_Overlap | ClassTag::Unclassified => return None,
        })
    }

    pub const ALL: [Rule; 15] = [
        Rule::GapZero,
        Rule::ChordalNoFan,
        Rule::ChordalFan,
        Rule::SquareCut,
        Rule::SquareNoCut,
        Rule::DiameterTwo,
        Rule::K4BareMiddle,
        Rule::K4Other,
        Rule::DiameterThreeSquare,
        Rule::GeneralizedBlock,
        Rule::ChainOverlapLower,
        Rule::UnicyclicBounds,
        Rule::CliqueSum,
        Rule::Complete,
        Rule::Generic,
    ];
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.id())
    }
}

impl std::str::FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Rule::ALL.into_iter().find(|r| r.id() == s).ok_or_else(|| format!("unknown rule {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DepthError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("not a generalized block graph")]
    NotGeneralizedBlock,
    #[error("exact rules disagree: {0:?}")]
    Inconsistent(Vec<(Rule, usize)>),
    #[error("rule {rule} gives {value} outside the bounds [{lower}, {upper}]")]
    OutOfBounds { rule: Rule, value: usize, lower: usize, upper: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub label: ClassLabel,
    /// Every exact rule that applied, with its value.
    pub exact_rules: Vec<(Rule, usize)>,
    /// The vertex split at, 1-based, when the clique-sum rule was evaluated.
    pub split_vertex: Option<usize>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthResult {
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
    pub rule: Rule,
    pub certificate: Certificate,
}

/// `(d + f, n + 2 - kappa)`, tightened to `(n, n + 1)` for unicyclic graphs
/// that are not cycles.
pub fn depth_bounds(g: &Graph) -> Result<(usize, usize), GraphError> {
    let b = InvariantBundle::compute(g)?;
    if b.complete {
        return Err(GraphError::Complete);
    }
    Ok(bounds_of(g, &b).0)
}

fn bounds_of(g: &Graph, b: &InvariantBundle) -> ((usize, usize), bool) {
    let (mut lo, mut hi) = (b.lower_bound(), b.upper_bound());
    let uni = is_unicyclic(g) && (0..g.n()).any(|v| g.degree(v) != 2);
    let mut tightened = false;
    if uni {
        if b.n > lo {
            lo = b.n;
            tightened = true;
        }
        if b.n + 1 < hi {
            hi = b.n + 1;
            tightened = true;
        }
    }
    ((lo, hi), tightened)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockDepth {
    pub depth: usize,
    /// `m + 1 = d`, exactly when the depth equals `d + f`.
    pub attains_lower_bound: bool,
}

/// `n + 1 - sum_{i=2}^{omega-1} (i - 1) a_i` for a generalized block graph.
pub fn gbg_depth(g: &Graph) -> Result<BlockDepth, DepthError> {
    let profile = block_profile(g);
    if !profile.is_generalized_block() {
        return Err(DepthError::NotGeneralizedBlock);
    }
    Ok(block_depth(g, &profile)?)
}

fn block_depth(g: &Graph, p: &BlockProfile) -> Result<BlockDepth, GraphError> {
    let drop: usize = (2..p.omega).map(|i| (i - 1) * p.a_i(i)).sum();
    let d = g.diameter()?;
    Ok(BlockDepth { depth: g.n() + 1 - drop, attains_lower_bound: p.m + 1 == d })
}

/// `d + f + 1` for a chain of cliques glued along cliques of size at least 2
/// with two consecutive gluing cliques meeting and none nested in a neighbour.
/// A chain with a cut vertex is split there and the parts' bounds are added.
pub fn coc_lower_bound(g: &Graph) -> Option<usize> {
    let chain = chain_of_cliques(g)?;
    let b = InvariantBundle::compute(g).ok()?;
    if let Some(dec) = is_decomposable(g) {
        let part_bound = |h: &Graph| -> Option<(usize, bool)> {
            if h.is_complete() {
                return Some((h.n() + 1, false));
            }
            match coc_lower_bound(h) {
                Some(lb) => Some((lb, true)),
                None => InvariantBundle::compute(h).ok().map(|hb| (hb.lower_bound(), false)),
            }
        };
        let (l1, s1) = part_bound(&dec.parts[0].graph)?;
        let (l2, s2) = part_bound(&dec.parts[1].graph)?;
        let lb = l1 + l2 - 2;
        return ((s1 || s2) && lb > b.lower_bound()).then_some(lb);
    }
chain.has_meeting_overlaps().then_some(b.lower_bound() + 1)
}

/// Bounds and, when some rule applies, the exact depth of `S/J_G`.
pub fn predict_depth(g: &Graph) -> Result<DepthResult, DepthError> {
    g.require_connected()?;
    if g.is_complete() {
        return Err(GraphError::Complete.into());
    }
    predict_inner(g)
}

/// Like [`predict_depth`] but also accepts complete graphs.
fn predict_inner(g: &Graph) -> Result<DepthResult, DepthError> {
    let b = InvariantBundle::compute(g)?;
    if b.complete {
        let v = b.n + 1;
        let label = ClassLabel { tag: ClassTag::Unclassified, invariants: b, detail: Default::default() };
        let certificate = Certificate { label, exact_rules: vec![(Rule::Complete, v)], split_vertex: None, notes: vec![] };
        return Ok(DepthResult { lower: v, upper: v, exact: Some(v), rule: Rule::Complete, certificate });
    }
    let label = classify(g)?;
    let ((mut lower, mut upper), uni) = bounds_of(g, &b);
    let mut bound_rule = if uni { Rule::UnicyclicBounds } else { Rule::Generic };
    let mut exact_rules = Vec::new();
    let mut notes = Vec::new();

    match Rule::for_tag(label.tag) {
        Some(Rule::GeneralizedBlock) => {}
        Some(rule) => {
            let n = b.n;
            let v = match rule {
                Rule::GapZero => b.lower_bound(),
                Rule::ChordalNoFan | Rule::SquareCut => n + 1,
                Rule::ChordalFan | Rule::SquareNoCut | Rule::K4Other | Rule::DiameterThreeSquare => n,
                Rule::DiameterTwo => b.upper_bound(),
                Rule::K4BareMiddle => n - 1,
                _ => unreachable!("class rules only"),
            };
            if rule == Rule::GapZero {
                notes.push("gap 0 value taken from the known classification of graphs meeting d + f".into());
            }
            exact_rules.push((rule, v));
        }
        None => {}
    }

    if b.chordal {
        let profile = block_profile(g);
        if profile.is_generalized_block() {
            exact_rules.push((Rule::GeneralizedBlock, block_depth(g, &profile)?.depth));
        }
    }

    let mut split_vertex = None;
    if let Some(dec) = is_decomposable(g) {
        split_vertex = Some(dec.vertex + 1);
        let p1 = predict_inner(&dec.parts[0].graph)?;
        let p2 = predict_inner(&dec.parts[1].graph)?;
        if let (Some(a), Some(c)) = (p1.exact, p2.exact) {
            exact_rules.push((Rule::CliqueSum, a + c - 2));
        }
        let (lo, hi) = (p1.lower + p2.lower - 2, p1.upper + p2.upper - 2);
        if lo > lower {
            lower = lo;
            bound_rule = Rule::CliqueSum;
        }
        if hi < upper {
            upper = hi;
            bound_rule = Rule::CliqueSum;
        }
    }

    if let Some(lb) = coc_lower_bound(g) {
        if lb > lower {
            lower = lb;
            bound_rule = Rule::ChainOverlapLower;
        }
    }

    if let Some(&(_, v0)) = exact_rules.first() {
        if exact_rules.iter().any(|&(_, v)| v != v0) {
            return Err(DepthError::Inconsistent(exact_rules));
        }
    }
    for &(rule, value) in &exact_rules {
        if value < lower || value > upper {
            return Err(DepthError::OutOfBounds { rule, value, lower, upper });
        }
    }
    let (exact, rule) = match exact_rules.first() {
        Some(&(rule, v)) => {
            lower = v;
            upper = v;
            (Some(v), rule)
        }
        None if lower == upper => (Some(lower), bound_rule),
        None => (None, bound_rule),
    };
    let certificate = Certificate { label, exact_rules, split_vertex, notes };
    Ok(DepthResult { lower, upper, exact, rule, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_ears_on(glue_a: (usize, usize), glue_b: (usize, usize)) -> Graph {
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend([(4, glue_a.0), (4, glue_a.1), (5, glue_b.0), (5, glue_b.1)]);
        Graph::from_edges(6, &edges).unwrap()
    }

    #[test]
    fn bounds() {
        assert_eq!(depth_bounds(&k4_ears_on((0, 1), (1, 2))).unwrap(), (5, 6));
        assert_eq!(depth_bounds(&Graph::path(5).unwrap()).unwrap(), (6, 6));
        // C4 with a pendant: raw (d + f, n + 2 - kappa) = (3, 6)
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        assert_eq!(depth_bounds(&g).unwrap(), (5, 6));
        assert!(depth_bounds(&Graph::complete(3).unwrap()).is_err());
    }

    #[test]
    fn block_formula() {
        assert_eq!(gbg_depth(&Graph::star(3).unwrap()).unwrap().depth, 5);
        assert_eq!(gbg_depth(&Graph::path(4).unwrap()).unwrap().depth, 5);
        let tri = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]).unwrap();
        assert_eq!(gbg_depth(&tri).unwrap().depth, 5);
        assert!(gbg_depth(&Graph::cycle(4).unwrap()).is_err());
    }

    #[test]
    fn chain_bound() {
        // K4 u K4 u K4 glued along {2,3} and {3,4}
        let mut edges = Vec::new();
        for f in [[0, 1, 2, 3], [2, 3, 4, 5], [3, 4, 6, 7]] {
            for a in 0..4 {
                for c in a + 1..4 {
                    edges.push((f[a], f[c]));
                }
            }
        }
        let g = Graph::from_edges(8, &edges).unwrap();
        let b = InvariantBundle::compute(&g).unwrap();
        assert_eq!((b.d, b.f), (2, 5));
        assert_eq!(coc_lower_bound(&g), Some(8));
        assert_eq!(coc_lower_bound(&Graph::path(5).unwrap()), None);
    }

    #[test]
    fn exact_values() {
        let gamma = k4_ears_on((0, 1), (1, 2));
        let r = predict_depth(&gamma).unwrap();
        assert_eq!((r.exact, r.rule), (Some(6), Rule::DiameterTwo));
        let omega = k4_ears_on((0, 1), (2, 3));
        let r = predict_depth(&omega).unwrap();
        assert_eq!((r.exact, r.rule), (Some(5), Rule::K4BareMiddle));
        assert!(r.certificate.exact_rules.contains(&(Rule::GeneralizedBlock, 5)));
        let p5 = predict_depth(&Graph::path(5).unwrap()).unwrap();
        assert_eq!((p5.exact, p5.rule), (Some(6), Rule::GapZero));
    }

    #[test]
    fn two_triangles_then_tail() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]).unwrap();
        let r = predict_depth(&g).unwrap();
        assert_eq!((r.exact, r.rule), (Some(6), Rule::ChordalFan));
        assert_eq!(r.certificate.exact_rules.len(), 3);
    }

    #[test]
    fn rule_ids_round_trip() {
        for r in Rule::ALL {
            assert_eq!(r.id().parse::<Rule>().unwrap(), r);
            assert_eq!(serde_json::to_value(r).unwrap(), r.id());
        }
    }

    #[test]
    fn cycles_get_bounds_only() {
        let r = predict_depth(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(r.exact, None);
        assert_eq!((r.lower, r.upper, r.rule), (2, 5, Rule::Generic));
    }
}
