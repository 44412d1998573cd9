//! Exhaustive enumeration of small graphs, the named example families, and
//! sweeps that cross-check predictions against the oracle.

mod enumerate;
mod families;
mod sweep;

pub use enumerate::{canonical_form, canonical_graph, enumerate_all, enumerate_connected, MAX_ENUMERATION_ORDER};
pub use families::{construct, FamilySpec};
pub use sweep::{
    parse_records, process, render_records, render_report, sweep, Consistency, OracleSummary, Prediction, SweepError, SweepOptions,
    SweepOutcome, SweepRecord, SweepSummary, MAX_SWEEP_ORDER,
};
