use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use binedge::classify::{classify, ClassLabel};
use binedge::depth::{predict_depth, DepthError, DepthResult};
use binedge::graph::io::{parse_graph_text, parse_graph6, to_dot, to_edge_list, to_graph6, ParseError};
use binedge::graph::{Graph, GraphError, InvariantBundle};
use binedge::harness::{
    construct, parse_records, render_records, render_report, sweep, FamilySpec, SweepError, SweepOptions, SweepSummary,
};
use binedge::oracle::{depth_exact, FieldChoice, OracleConfig, OracleError, OracleReport};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Depth of binomial edge ideals: invariants, classification, predicted
/// depth and an exact oracle.
#[derive(Parser, Debug)]
#[command(name = "binedge", version)]
struct Cli {
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Oracle cap on ring variables (2n). Overrides BINEDGE_ORACLE_MAX_VARS.
    #[arg(long, global = true, value_name = "N")]
    max_vars: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// n, d, f, kappa, iv, omega, chordality and the gap.
    Invariants(Input),
    /// Class tag and the witnesses behind it.
    Classify(Input),
    /// Depth bounds and, when a rule applies, the exact value.
    Depth {
        #[command(flatten)]
        input: Input,
        /// Also run the oracle and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Exact depth, projective dimension and regularity via Groebner bases.
    Oracle {
        #[command(flatten)]
        input: Input,
        /// Print the Betti table of the initial ideal.
        #[arg(long)]
        betti: bool,
        #[arg(long, value_enum, default_value = "q")]
        field: FieldArg,
    },
    /// Build a graph from a named family.
    Construct(ConstructArgs),
    /// Classify, predict and optionally run the oracle on every connected graph.
    Sweep(SweepArgs),
    /// Graphviz DOT with 1-based labels.
    ExportDot(Input),
}

#[derive(Args, Debug)]
struct Input {
    /// Edge-list or graph6 file, or '-' for standard input.
    #[arg(value_name = "FILE", required_unless_present = "g6", conflicts_with = "g6")]
    file: Option<PathBuf>,
    /// A graph6 string.
    #[arg(long, value_name = "STR")]
    g6: Option<String>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FieldArg {
    Q,
    F2,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Family {
    Exk1,
    Sigma,
    Gamma,
    Omega,
    Delta,
    Path,
    Complete,
    Cycle,
    Star,
    Chain,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Edges,
    G6,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    f: Option<usize>,
    #[arg(long)]
    kappa: Option<usize>,
    #[arg(long)]
    leaves: Option<usize>,
    /// Clique sizes of a chain, comma separated.
    #[arg(long, value_delimiter = ',')]
    r: Vec<usize>,
    /// Gluing clique sizes of a chain, comma separated.
    #[arg(long, value_delimiter = ',')]
    q: Vec<usize>,
    /// Let consecutive gluing cliques of a chain share a vertex.
    #[arg(long)]
    overlap: bool,
    #[arg(long, value_enum, default_value = "edges")]
    format: Format,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Largest order.
    #[arg(long)]
    n: usize,
    /// Smallest order.
    #[arg(long, default_value_t = 3)]
    n_min: usize,
    #[arg(long)]
    oracle: bool,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the line-delimited report here.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Continue a sweep stopped by its budget; records are read from --out.
    #[arg(long, value_name = "TOKEN", requires = "out")]
    resume: Option<String>,
    /// Wall-clock budget in seconds. Overrides BINEDGE_SWEEP_BUDGET_SECS.
    #[arg(long, value_name = "SECS")]
    budget: Option<f64>,
}

const BUDGET_ENV: &str = "BINEDGE_SWEEP_BUDGET_SECS";
/// Oracle sweeps stop at this order unless the variable cap is raised.
const SWEEP_ORACLE_ORDER: usize = 6;

enum Failure {
    Usage(String),
    Parse(String),
    Limit(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Limit(_) => 3,
            Failure::Mismatch(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Parse(m) | Failure::Limit(m) | Failure::Mismatch(m) => m,
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e.to_string())
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::LimitExceeded { .. } => Failure::Limit(e.to_string()),
            OracleError::Graph(g) => g.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<DepthError> for Failure {
    fn from(e: DepthError) -> Self {
        match e {
            DepthError::Graph(g) => g.into(),
            DepthError::Inconsistent(_) | DepthError::OutOfBounds { .. } => Failure::Mismatch(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<SweepError> for Failure {
    fn from(e: SweepError) -> Self {
        match e {
            SweepError::Range(_) => Failure::Limit(e.to_string()),
            SweepError::Oracle(o) => o.into(),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err((text, failure)) => {
            print!("{text}");
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

/// Output produced so far travels with a failure so that partial reports
/// still reach stdout.
fn run(cli: &Cli) -> Result<String, (String, Failure)> {
    let bare = |f: Failure| (String::new(), f);
    match &cli.command {
        Command::Invariants(input) => {
            let g = read_graph(input).map_err(bare)?;
            let b = InvariantBundle::compute(&g).map_err(|e| bare(e.into()))?;
            Ok(if cli.json { to_json(&b) } else { invariants_table(&b) })
        }
        Command::Classify(input) => {
            let g = read_graph(input).map_err(bare)?;
            let label = classify(&g).map_err(|e| bare(e.into()))?;
            Ok(if cli.json { to_json(&label) } else { class_table(&label) })
        }
        Command::Depth { input, oracle } => {
            let g = read_graph(input).map_err(bare)?;
            let report = if *oracle { Some(depth_exact(&g, &oracle_config(cli, FieldChoice::Q).map_err(bare)?).map_err(|e| bare(e.into()))?) } else { None };
            let (lower, upper, exact, text) = if g.is_complete() {
                let v = g.n() + 1;
                let text = if cli.json {
                    to_json(&json!({ "graph6": to_graph6(&g), "predicted": { "lower": v, "upper": v, "exact": v, "rule": "complete" }, "oracle": report }))
                } else {
                    complete_table(v, report.as_ref())
                };
                (v, v, Some(v), text)
            } else {
                let predicted = predict_depth(&g).map_err(|e| bare(e.into()))?;
                let text = if cli.json {
                    to_json(&json!({ "graph6": to_graph6(&g), "predicted": predicted, "oracle": report }))
                } else {
                    depth_table(&predicted, report.as_ref())
                };
                (predicted.lower, predicted.upper, predicted.exact, text)
            };
            if let Some(r) = &report {
                if exact.is_some_and(|e| e != r.depth) || r.depth < lower || r.depth > upper {
                    let msg = format!("prediction {exact:?} in [{lower}, {upper}] disagrees with oracle depth {}", r.depth);
                    return Err((text, Failure::Mismatch(msg)));
                }
            }
            Ok(text)
        }
        Command::Oracle { input, betti, field } => {
            let g = read_graph(input).map_err(bare)?;
            let field = match field {
                FieldArg::Q => FieldChoice::Q,
                FieldArg::F2 => FieldChoice::F2,
            };
            let report = depth_exact(&g, &oracle_config(cli, field).map_err(bare)?).map_err(|e| bare(e.into()))?;
            Ok(if cli.json { to_json(&report) } else { oracle_table(&report, *betti) })
        }
        Command::Construct(args) => {
            let spec = family_spec(args).map_err(bare)?;
            let g = construct(&spec).map_err(|e| bare(e.into()))?;
            Ok(if cli.json {
                to_json(&json!({ "spec": spec, "graph6": to_graph6(&g), "edges": labeled_edges(&g) }))
            } else {
                match args.format {
                    Format::Edges => to_edge_list(&g),
                    Format::G6 => format!("{}\n", to_graph6(&g)),
                }
            })
        }
        Command::Sweep(args) => run_sweep(cli, args),
        Command::ExportDot(input) => {
            let g = read_graph(input).map_err(bare)?;
            Ok(to_dot(&g, "G"))
        }
    }
}

fn run_sweep(cli: &Cli, args: &SweepArgs) -> Result<String, (String, Failure)> {
    let bare = |f: Failure| (String::new(), f);
    let mut opts = SweepOptions::new(args.n, args.oracle);
    opts.n_min = args.n_min;
    opts.jobs = args.jobs;
    opts.resume = args.resume.clone();
    let mut oracle = oracle_config(cli, FieldChoice::Q).map_err(bare)?;
    if cli.max_vars.is_none() && std::env::var_os(binedge::oracle::MAX_VARS_ENV).is_none() {
        oracle.max_vars = 2 * SWEEP_ORACLE_ORDER;
    }
    opts.oracle = oracle;
    let budget = match args.budget {
        Some(s) => Some(s),
        None => match std::env::var(BUDGET_ENV) {
            Ok(v) => Some(v.trim().parse().map_err(|_| bare(Failure::Usage(format!("{BUDGET_ENV}={v:?} is not a number"))))?),
            Err(_) => None,
        },
    };
    if let Some(secs) = budget {
        opts.budget = Some(Duration::try_from_secs_f64(secs).map_err(|e| bare(Failure::Usage(format!("budget: {e}"))))?);
    }
    let prior = match (&args.resume, &args.out) {
        (Some(_), Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| bare(Failure::Usage(format!("{}: {e}", path.display()))))?;
            parse_records(&text).map_err(|e| bare(Failure::Parse(format!("{}: {e}", path.display()))))?
        }
        _ => Vec::new(),
    };
    let outcome = sweep(&opts, &prior).map_err(|e| bare(e.into()))?;
    let mut all = prior;
    all.extend(outcome.records);
    let report = match &outcome.summary {
        Some(s) => render_report(&all, s),
        None => render_records(&all),
    };
    if let Some(path) = &args.out {
        std::fs::write(path, &report).map_err(|e| bare(Failure::Usage(format!("{}: {e}", path.display()))))?;
    }
    let Some(summary) = outcome.summary else {
        let token = outcome.resume.unwrap_or_default();
        let text = if cli.json {
            to_json(&json!({ "done": all.len(), "resume": token }))
        } else {
            format!("stopped after {} graphs; resume with --resume {token}\n", all.len())
        };
        return Err((text, Failure::Limit(format!("budget exhausted; resume token {token}"))));
    };
    let text = match (&args.out, cli.json) {
        (None, _) => report,
        (Some(_), true) => to_json(&summary),
        (Some(_), false) => summary_table(&summary),
    };
    if !summary.is_clean() {
        let msg = format!("{} mismatches, {} counterexamples", summary.mismatches.len(), summary.counterexamples.len());
        return Err((text, Failure::Mismatch(msg)));
    }
    Ok(text)
}

fn oracle_config(cli: &Cli, field: FieldChoice) -> Result<OracleConfig, Failure> {
    let mut cfg = OracleConfig::from_env()?.with_field(field);
    if let Some(v) = cli.max_vars {
        cfg.max_vars = v;
    }
    Ok(cfg)
}

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    if let Some(code) = &input.g6 {
        return Ok(parse_graph6(code)?);
    }
    let path = input.file.as_ref().expect("clap requires a file or --g6");
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
    };
    Ok(parse_graph_text(&text)?)
}

fn family_spec(a: &ConstructArgs) -> Result<FamilySpec, Failure> {
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| Failure::Usage(format!("--{name} is required for this family")));
    Ok(match a.family {
        Family::Exk1 => FamilySpec::ExK1 { f: need(a.f, "f")?, d: need(a.d, "d")? },
        Family::Sigma => FamilySpec::Sigma { d: need(a.d, "d")? },
        Family::Gamma => FamilySpec::Gamma { f: need(a.f, "f")? },
        Family::Omega => FamilySpec::Omega { f: need(a.f, "f")? },
        Family::Delta => FamilySpec::Delta { f: need(a.f, "f")?, kappa: need(a.kappa, "kappa")? },
        Family::Path => FamilySpec::Path { n: need(a.n, "n")? },
        Family::Complete => FamilySpec::Complete { n: need(a.n, "n")? },
        Family::Cycle => FamilySpec::Cycle { n: need(a.n, "n")? },
        Family::Star => FamilySpec::Star { leaves: need(a.leaves, "leaves")? },
        Family::Chain => FamilySpec::ChainOfCliques { r: a.r.clone(), q: a.q.clone(), overlap: a.overlap },
    })
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn labeled_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().into_iter().map(|(i, j)| (i + 1, j + 1)).collect()
}

fn invariants_table(b: &InvariantBundle) -> String {
    let mut s = String::new();
    let rows: [(&str, String); 10] = [
        ("n", b.n.to_string()),
        ("diameter d", b.d.to_string()),
        ("simplicial f", b.f.to_string()),
        ("internal iv", b.iv.to_string()),
        ("connectivity kappa", b.kappa.to_string()),
        ("clique number", b.omega.to_string()),
        ("chordal", b.chordal.to_string()),
        ("complete", b.complete.to_string()),
        ("gap", b.gap.to_string()),
        ("depth bounds", format!("[{}, {}]", b.lower_bound(), b.upper_bound())),
    ];
    for (k, v) in rows {
        let _ = writeln!(s, "{k:<20}{v}");
    }
    s
}

fn class_table(l: &ClassLabel) -> String {
    let b = &l.invariants;
    let mut s = format!("{:<20}{}\n", "class", l.tag);
    let _ = writeln!(s, "{:<20}n={} d={} f={} kappa={} gap={}", "invariants", b.n, b.d, b.f, b.kappa, b.gap);
    if let Some(c) = &l.detail.config {
        let path: Vec<String> = c.path.iter().map(|v| (v + 1).to_string()).collect();
        let _ = writeln!(s, "{:<20}{}", "diametral path", path.join("-"));
        if let Some(v) = c.off_path_internal {
            let _ = writeln!(s, "{:<20}{}", "off-path internal", v + 1);
        }
        let _ = writeln!(s, "{:<20}{:?}", "pattern", c.pattern);
    }
    for t in &l.detail.cutsets {
        let _ = writeln!(s, "{:<20}{}", "cutset", one_based(t.iter()));
    }
    for a in &l.detail.attachments {
        let _ = writeln!(s, "{:<20}{} at {}", "attached clique", one_based(a.clique.iter()), one_based(a.at.iter()));
    }
    for n in &l.detail.notes {
        let _ = writeln!(s, "{:<20}{n}", "note");
    }
    s
}

fn one_based(vs: impl Iterator<Item = usize>) -> String {
    let items: Vec<String> = vs.map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn depth_table(r: &DepthResult, oracle: Option<&OracleReport>) -> String {
    let mut s = format!("{:<20}{}\n", "class", r.certificate.label.tag);
    let _ = writeln!(s, "{:<20}[{}, {}]", "bounds", r.lower, r.upper);
    match r.exact {
        Some(v) => {
            let _ = writeln!(s, "{:<20}{v} ({})", "predicted depth", r.rule);
        }
        None => {
            let _ = writeln!(s, "{:<20}none ({})", "predicted depth", r.rule);
        }
    }
    for (rule, v) in &r.certificate.exact_rules {
        let _ = writeln!(s, "{:<20}{rule} = {v}", "exact rule");
    }
    for n in &r.certificate.notes {
        let _ = writeln!(s, "{:<20}{n}", "note");
    }
    if let Some(o) = oracle {
        let _ = writeln!(s, "{:<20}{}", "oracle depth", o.depth);
    }
    s
}

fn complete_table(v: usize, oracle: Option<&OracleReport>) -> String {
    let mut s = format!("{:<20}Complete\n", "class");
    let _ = writeln!(s, "{:<20}{v} (complete)", "predicted depth");
    if let Some(o) = oracle {
        let _ = writeln!(s, "{:<20}{}", "oracle depth", o.depth);
    }
    s
}

fn oracle_table(r: &OracleReport, betti: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:<20}{}", "depth", r.depth);
    let _ = writeln!(s, "{:<20}{}", "projective dim", r.pd);
    let _ = writeln!(s, "{:<20}{}", "regularity", r.reg);
    let corners: Vec<String> = r.extremal.iter().map(|(i, j)| format!("({i},{j})")).collect();
    let _ = writeln!(s, "{:<20}{}", "extremal corners", corners.join(" "));
    let _ = writeln!(s, "{:<20}{} / {}", "GB / initial gens", r.groebner_basis_size, r.initial_ideal_size);
    let _ = writeln!(s, "{:<20}{} over {}", "order", r.order, r.field);
    if betti {
        s.push_str("\nBetti table of the initial ideal (upper bounds for J_G):\n");
        s.push_str(&r.betti_initial.render());
    }
    s
}

fn summary_table(s: &SweepSummary) -> String {
    let mut out = format!("orders {}..={}: {} graphs, {} oracle runs, {} exact predictions\n", s.n_min, s.n_max, s.graphs, s.oracle_runs, s.exact_predictions);
    out.push_str("by class:\n");
    for (k, v) in &s.by_tag {
        let _ = writeln!(out, "  {k:<32}{v}");
    }
    out.push_str("by rule:\n");
    for (k, v) in &s.by_rule {
        let _ = writeln!(out, "  {k:<32}{v}");
    }
    let _ = writeln!(out, "mismatches: {}", s.mismatches.len());
    for m in &s.counterexamples {
        let _ = writeln!(out, "  {m}");
    }
    let _ = writeln!(out, "long induced cycle at the lower bound: {}", s.long_cycle_probe.len());
    for g in &s.long_cycle_probe {
        let _ = writeln!(out, "  {g}");
    }
    out
}
