use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::enumerate::enumerate_connected;
use crate::classify::{check_structural_theorem, classify, feasibility};
use crate::depth::{predict_depth, DepthError, Rule};
use crate::graph::io::to_graph6;
use crate::graph::{Graph, GraphError, InvariantBundle};
use crate::oracle::{depth_exact, OracleConfig, OracleError};

/// Largest order a sweep accepts.
pub const MAX_SWEEP_ORDER: usize = 7;

const BATCH: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("sweep range {0}")]
    Range(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("resume token {0:?} does not match this sweep")]
    Token(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("failed to build the worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
    pub rule: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub depth: usize,
    pub pd: usize,
    pub reg: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Consistency {
    Ok,
    Mismatch,
    Error,
}

/// One line of a sweep report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub index: usize,
    pub graph6: String,
    pub invariants: InvariantBundle,
    pub tag: String,
    pub predicted: Option<Prediction>,
    pub oracle: Option<OracleSummary>,
    /// Has an induced cycle of length at least 5.
    pub long_cycle: bool,
    /// Gap 1 graphs only: the forced-structure check.
    pub structural_ok: Option<bool>,
    /// Gap 1 graphs only: whether `(n, kappa, f, d)` is in the feasibility table.
    pub feasible: Option<bool>,
    pub consistency: Consistency,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub n_min: usize,
    pub n_max: usize,
    pub graphs: usize,
    pub by_tag: BTreeMap<String, usize>,
    pub by_rule: BTreeMap<String, usize>,
    pub exact_predictions: usize,
    pub oracle_runs: usize,
    /// graph6 strings whose exact prediction differs from the oracle.
    pub mismatches: Vec<String>,
    /// Anything contradicting a checked statement, as `graph6: reason`.
    pub counterexamples: Vec<String>,
    /// Graphs with an induced cycle of length at least 5 and oracle depth
    /// equal to `d + f`.
    pub long_cycle_probe: Vec<String>,
}

impl SweepSummary {
    pub fn from_records(n_min: usize, n_max: usize, records: &[SweepRecord]) -> Self {
        let mut s = SweepSummary { n_min, n_max, graphs: records.len(), ..Default::default() };
        for r in records {
            *s.by_tag.entry(r.tag.clone()).or_default() += 1;
            if let Some(p) = &r.predicted {
                *s.by_rule.entry(p.rule.clone()).or_default() += 1;
                s.exact_predictions += p.exact.is_some() as usize;
            }
            if let Some(o) = r.oracle {
                s.oracle_runs += 1;
                if r.long_cycle && o.depth == r.invariants.lower_bound() {
                    s.long_cycle_probe.push(r.graph6.clone());
                }
            }
            if r.consistency == Consistency::Mismatch {
                s.mismatches.push(r.graph6.clone());
            }
            for note in r.notes.iter().filter(|n| n.starts_with("counterexample")) {
                s.counterexamples.push(format!("{}: {note}", r.graph6));
            }
        }
        s
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.counterexamples.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub n_min: usize,
    pub n_max: usize,
    pub with_oracle: bool,
    pub oracle: OracleConfig,
    /// Wall-clock cap; checked between batches.
    pub budget: Option<Duration>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Stop after this many batches of graphs, as if the budget ran out.
    pub batch_limit: Option<usize>,
    pub resume: Option<String>,
}

impl SweepOptions {
    pub fn new(n_max: usize, with_oracle: bool) -> Self {
        SweepOptions {
            n_min: 3,
            n_max,
            with_oracle,
            oracle: OracleConfig::default(),
            budget: None,
            jobs: None,
            batch_limit: None,
            resume: None,
        }
    }

    fn token_prefix(&self) -> String {
        format!("sweep:{}-{}:{}", self.n_min, self.n_max, if self.with_oracle { "oracle" } else { "plain" })
    }

    fn token(&self, next: usize) -> String {
        format!("{}:{next}", self.token_prefix())
    }

    fn parse_token(&self, token: &str) -> Result<usize, SweepError> {
        let bad = || SweepError::Token(token.to_string());
        let (prefix, next) = token.rsplit_once(':').ok_or_else(bad)?;
        if prefix != self.token_prefix() {
            return Err(bad());
        }
        next.parse().map_err(|_| bad())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    /// Records produced by this call, in index order.
    pub records: Vec<SweepRecord>,
    /// Present once every graph has been processed.
    pub summary: Option<SweepSummary>,
    /// Present when the budget ran out first.
    pub resume: Option<String>,
}

/// Runs classification, prediction and optionally the oracle over every
/// connected graph with `n_min <= n <= n_max`.
///
/// `prior` holds the records of earlier partial runs; they count towards the
/// final summary.
pub fn sweep(opts: &SweepOptions, prior: &[SweepRecord]) -> Result<SweepOutcome, SweepError> {
    if opts.n_min < 3 || opts.n_min > opts.n_max || opts.n_max > MAX_SWEEP_ORDER {
        return Err(SweepError::Range(format!(
            "{}..={} is outside 3..={MAX_SWEEP_ORDER}",
            opts.n_min, opts.n_max
        )));
    }
    if opts.with_oracle {
        opts.oracle.check_order(opts.n_max)?;
    }
    let start = match &opts.resume {
        Some(t) => opts.parse_token(t)?,
        None => 0,
    };
    let graphs: Vec<Graph> = (opts.n_min..=opts.n_max)
        .map(enumerate_connected)
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    if start > graphs.len() {
        return Err(SweepError::Token(opts.token(start)));
    }
    let clock = Instant::now();
    let run = |records: &mut Vec<SweepRecord>| -> Option<usize> {
        let mut next = start;
        let mut batches = 0;
        while next < graphs.len() {
            if opts.budget.is_some_and(|b| batches > 0 && clock.elapsed() >= b) || opts.batch_limit.is_some_and(|k| batches >= k) {
                return Some(next);
            }
            batches += 1;
            let end = (next + BATCH).min(graphs.len());
            let batch: Vec<SweepRecord> =
                (next..end).into_par_iter().map(|i| process(i, &graphs[i], opts)).collect();
            records.extend(batch);
            next = end;
        }
        None
    };
    let mut records = Vec::new();
    let stopped = match opts.jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| SweepError::Pool(e.to_string()))?
            .install(|| run(&mut records)),
        None => run(&mut records),
    };
    Ok(match stopped {
        Some(next) => SweepOutcome { records, summary: None, resume: Some(opts.token(next)) },
        None => {
            let mut all = prior.to_vec();
            all.extend(records.iter().cloned());
            all.sort_by_key(|r| r.index);
            let summary = SweepSummary::from_records(opts.n_min, opts.n_max, &all);
            SweepOutcome { records, summary: Some(summary), resume: None }
        }
    })
}

/// The per-graph pipeline.
pub fn process(index: usize, g: &Graph, opts: &SweepOptions) -> SweepRecord {
    let invariants = InvariantBundle::compute(g).expect("enumerated graphs are connected");
    let mut notes = Vec::new();
    let mut consistency = Consistency::Ok;
    let long_cycle = g.induced_cycle_scan().has_c5_or_longer;
    let (mut structural_ok, mut feasible) = (None, None);

    let (tag, predicted) = if invariants.complete {
        let v = invariants.n + 1;
        ("Complete".to_string(), Some(Prediction { lower: v, upper: v, exact: Some(v), rule: Rule::Complete.id().into() }))
    } else {
        let tag = match classify(g) {
            Ok(label) => label.tag.name().to_string(),
            Err(e) => {
                notes.push(format!("classify failed: {e}"));
                consistency = Consistency::Error;
                "Error".to_string()
            }
        };
        let predicted = match predict_depth(g) {
            Ok(r) => Some(Prediction { lower: r.lower, upper: r.upper, exact: r.exact, rule: r.rule.id().into() }),
            Err(e @ (DepthError::Inconsistent(_) | DepthError::OutOfBounds { .. })) => {
                notes.push(format!("counterexample: {e}"));
                consistency = Consistency::Mismatch;
                None
            }
            Err(e) => {
                notes.push(format!("prediction failed: {e}"));
                consistency = Consistency::Error;
                None
            }
        };
        if invariants.gap == 1 {
            let ok = check_structural_theorem(g).unwrap_or(false);
            let fe = feasibility(invariants.n, invariants.kappa, invariants.f, invariants.d).unwrap_or(false);
            if !ok {
                notes.push("counterexample: gap 1 graph without the forced structure".into());
            }
            if !fe {
                notes.push("counterexample: gap 1 graph outside the feasibility table".into());
            }
            structural_ok = Some(ok);
            feasible = Some(fe);
        }
        (tag, predicted)
    };

    let mut oracle = None;
    if opts.with_oracle {
        match depth_exact(g, &opts.oracle) {
            Ok(rep) => {
                let o = OracleSummary { depth: rep.depth, pd: rep.pd, reg: rep.reg };
                if let Some(p) = &predicted {
                    if p.exact.is_some_and(|e| e != o.depth) {
                        notes.push(format!("predicted {} by {}, oracle {}", p.exact.unwrap_or(0), p.rule, o.depth));
                        consistency = Consistency::Mismatch;
                    }
                    if o.depth < p.lower || o.depth > p.upper {
                        notes.push(format!("counterexample: oracle {} outside [{}, {}]", o.depth, p.lower, p.upper));
                        consistency = Consistency::Mismatch;
                    }
                }
                oracle = Some(o);
            }
            Err(e) => {
                notes.push(format!("oracle failed: {e}"));
                if consistency == Consistency::Ok {
                    consistency = Consistency::Error;
                }
            }
        }
    }

    SweepRecord {
        index,
        graph6: to_graph6(g),
        invariants,
        tag,
        predicted,
        oracle,
        long_cycle,
        structural_ok,
        feasible,
        consistency,
        notes,
    }
}

/// Report lines: one JSON record per graph, then the summary.
pub fn render_report(records: &[SweepRecord], summary: &SweepSummary) -> String {
    let mut out = render_records(records);
    out.push_str(&serde_json::to_string(&serde_json::json!({ "summary": summary })).expect("summary serializes"));
    out.push('\n');
    out
}

/// One JSON line per record, as in a partial report.
pub fn render_records(records: &[SweepRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("records serialize"));
        out.push('\n');
    }
    out
}

/// Reads the record lines of a (possibly partial) report, ignoring the
/// summary line.
pub fn parse_records(text: &str) -> Result<Vec<SweepRecord>, serde_json::Error> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with("{\"summary\""))
        .map(serde_json::from_str)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_is_clean() {
        let out = sweep(&SweepOptions::new(5, true), &[]).unwrap();
        let s = out.summary.unwrap();
        assert_eq!(s.graphs, 2 + 6 + 21);
        assert_eq!(s.oracle_runs, s.graphs);
        assert!(s.is_clean(), "{s:?}");
    }

    #[test]
    fn ranges_are_guarded() {
        assert!(matches!(sweep(&SweepOptions::new(8, true), &[]), Err(SweepError::Range(_))));
        let mut o = SweepOptions::new(7, true);
        o.oracle.max_vars = 12;
        assert!(matches!(sweep(&o, &[]), Err(SweepError::Oracle(_))));
    }

    #[test]
    fn resume_round_trip() {
        let mut o = SweepOptions::new(6, false);
        let whole = sweep(&o, &[]).unwrap();
        o.batch_limit = Some(1);
        let mut done = Vec::new();
        let summary = loop {
            let step = sweep(&o, &done).unwrap();
            done.extend(step.records);
            match step.resume {
                Some(token) => o.resume = Some(token),
                None => break step.summary.unwrap(),
            }
        };
        assert_eq!(Some(summary), whole.summary);
        assert_eq!(done, whole.records);
        // a spent budget still lets one batch through
        let mut timed = SweepOptions::new(6, false);
        timed.budget = Some(Duration::ZERO);
        let step = sweep(&timed, &[]).unwrap();
        assert_eq!(step.records.len(), BATCH);
        assert_eq!(step.resume, Some(format!("sweep:3-6:plain:{BATCH}")));
        o.resume = Some("sweep:3-5:plain:0".into());
        assert!(matches!(sweep(&o, &[]), Err(SweepError::Token(_))));
    }

    #[test]
    fn report_lines_round_trip() {
        let out = sweep(&SweepOptions::new(4, false), &[]).unwrap();
        let text = render_report(&out.records, out.summary.as_ref().unwrap());
        assert_eq!(parse_records(&text).unwrap(), out.records);
    }
}
