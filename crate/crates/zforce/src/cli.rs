//! Command-line front end.
//!
//! Exit status: 0 on success, 1 for NO answers and failed verification, 2 for
//! unreadable or malformed input, 3 when a size guard or budget stops the run.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use zforce_core::dp::{self, DpError, DpOptions, SizeDecision, DEFAULT_BUDGET};
use zforce_core::reductions::{
    audit_mcc, certify_mcc, corona_with_leaves, gd_to_osgtd, lgd_to_osgtd, mcc_to_osgtd, osgtd_to_cobipartite,
    osgtd_to_hypergraph, tgd_to_osgtd, MccInstance, OsgtdInstance, ReductionError,
};
use zforce_core::rules::{
    is_forcing_set_with_budget, min_forcing_bruteforce_with_limit, replay, ForcingVerdict, DEFAULT_SEARCH_BUDGET,
};
use zforce_core::sequence::{
    forcing_trace_to_sequence, sequence_to_forcing, verify_covering_sequence, verify_sequence_restricted, SequenceError,
};
use zforce_core::treedec::{
    exact_treewidth, heuristic_decomposition, make_nice, validate_td, ExactTreewidth, Heuristic, TreeDecomposition,
};
use zforce_core::{Graph, GuardExceeded, RuleApplication, RuleSet, SequenceVariant, VertexSet};

use crate::formats::{self, GraphFormat, ParseError};
use crate::generate;

#[derive(Parser, Debug)]
#[command(name = "zforce", version, about = "Zero forcing sets and Grundy domination sequences")]
pub struct Cli {
    /// Output style for result records.
    #[arg(long, value_enum, default_value_t = OutputFormat::Kv, global = true)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    /// `key=value` lines
    Kv,
    /// one JSON object per line
    JsonLines,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimum forcing set (or a decision for a given size).
    Solve(SolveArgs),
    /// Check a forcing set, a sequence or a covering sequence.
    Verify(VerifyArgs),
    /// Turn sequences into forcing sets and back.
    Convert(ConvertArgs),
    /// Build reduction instances.
    Reduce(ReduceArgs),
    /// Write generated graphs.
    Generate(GenerateArgs),
    /// Tree decompositions and their nice form.
    Decompose(DecomposeArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Dp,
    Brute,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    MinDegree,
    MinFill,
    Exact,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphOut {
    Pace,
    Edges,
}

impl From<GraphOut> for GraphFormat {
    fn from(g: GraphOut) -> Self {
        match g {
            GraphOut::Pace => GraphFormat::Pace,
            GraphOut::Edges => GraphFormat::EdgeList,
        }
    }
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    pub graph: PathBuf,
    /// Rule set, e.g. `z`, `zt`, `ztd`.
    #[arg(long)]
    pub rules: String,
    #[arg(long, value_enum, default_value_t = Method::Dp)]
    pub method: Method,
    /// Tree decomposition in PACE format (otherwise one is computed).
    #[arg(long)]
    pub td: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Strategy::MinFill)]
    pub decomposition: Strategy,
    /// Decide whether a forcing set of at most this size exists.
    #[arg(long)]
    pub k: Option<usize>,
    /// Cap on stored DP signatures.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    /// Largest graph accepted by the brute-force method.
    #[arg(long, default_value_t = 20)]
    pub max_n: usize,
    #[arg(long)]
    pub set_out: Option<PathBuf>,
    #[arg(long)]
    pub trace_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Graph, or hypergraph with `--covering`.
    pub graph: PathBuf,
    #[arg(long, requires = "set")]
    pub rules: Option<String>,
    /// Initial blue set, one id per line.
    #[arg(long)]
    pub set: Option<PathBuf>,
    /// Trace to replay; without it the rule orders are searched.
    #[arg(long, requires = "set")]
    pub trace: Option<PathBuf>,
    #[arg(long, conflicts_with = "set")]
    pub sequence: Option<PathBuf>,
    #[arg(long, value_parser = parse_variant)]
    pub variant: Option<SequenceVariant>,
    /// Allowed sequence members (one-sided sequences).
    #[arg(long)]
    pub restrict: Option<PathBuf>,
    /// Read the input as a hypergraph and the sequence as edge indices.
    #[arg(long, requires = "sequence")]
    pub covering: bool,
}

#[derive(Args, Debug)]
pub struct ConvertArgs {
    pub graph: PathBuf,
    #[arg(long, value_parser = parse_variant)]
    pub variant: SequenceVariant,
    #[arg(long, conflicts_with_all = ["set", "trace"])]
    pub sequence: Option<PathBuf>,
    #[arg(long, requires = "trace")]
    pub set: Option<PathBuf>,
    #[arg(long, requires = "set")]
    pub trace: Option<PathBuf>,
    #[arg(long)]
    pub set_out: Option<PathBuf>,
    #[arg(long)]
    pub trace_out: Option<PathBuf>,
    #[arg(long)]
    pub sequence_out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Mcc,
    Gd,
    Tgd,
    L,
    Osgtd,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Osgtd,
    Cobipartite,
    Hypergraph,
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub from: Source,
    #[arg(long, value_enum)]
    pub to: Target,
    /// Color classes of a Multicolored Clique instance, one per line.
    #[arg(long)]
    pub partition: Option<PathBuf>,
    /// Side A of a one-sided instance, one id per line.
    #[arg(long)]
    pub side: Option<PathBuf>,
    /// Target length of the source instance.
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// Sequence variant of the co-bipartite lift.
    #[arg(long, value_parser = parse_variant)]
    pub variant: Option<SequenceVariant>,
    /// Decide both sides of the Multicolored Clique reduction.
    #[arg(long)]
    pub certify: bool,
    /// Largest gadget graph handed to the certifying search.
    #[arg(long, default_value_t = 128)]
    pub max_n: usize,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub side_out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = GraphOut::Pace)]
    pub graph_format: GraphOut,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[command(subcommand)]
    pub kind: GenerateKind,
    #[arg(long, short, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = GraphOut::Pace, global = true)]
    pub graph_format: GraphOut,
}

#[derive(Subcommand, Debug)]
pub enum GenerateKind {
    /// Pendant leaf at every vertex of the input graph.
    Corona { graph: PathBuf },
    /// G(n, p).
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
    },
    /// Random labelled tree.
    Tree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Random partial k-tree.
    Ktree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1.0)]
        keep: f64,
        #[arg(long)]
        seed: u64,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    Caterpillar {
        #[arg(long)]
        spine: usize,
        #[arg(long)]
        legs: usize,
    },
    /// Random Multicolored Clique instance; classes go to `--partition-out`.
    Mcc {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        partition_out: PathBuf,
    },
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value_t = Strategy::MinFill)]
    pub method: Strategy,
    /// Emit the nice decomposition with rule nodes instead.
    #[arg(long)]
    pub nice: bool,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

fn parse_variant(s: &str) -> Result<SequenceVariant, String> {
    SequenceVariant::parse(s).ok_or_else(|| format!("unknown variant {s:?} (gd, tgd, z, l, locall)"))
}

/// A failed run with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

fn input_error(msg: impl std::fmt::Display) -> Failure {
    Failure { code: 2, message: msg.to_string() }
}

fn guard_error(msg: impl std::fmt::Display) -> Failure {
    Failure { code: 3, message: msg.to_string() }
}

impl From<GuardExceeded> for Failure {
    fn from(e: GuardExceeded) -> Self {
        guard_error(e)
    }
}

impl From<DpError> for Failure {
    fn from(e: DpError) -> Self {
        match e {
            DpError::Budget(_) | DpError::BagTooLarge { .. } | DpError::Guard(_) => guard_error(e),
            DpError::InvalidDecomposition(_)
            | DpError::InvalidTreeDecomposition(_)
            | DpError::UnsupportedRuleSet(_) => input_error(e),
            DpError::WitnessReplay(_) | DpError::CyclicWitness => Failure { code: 4, message: e.to_string() },
        }
    }
}

impl From<SequenceError> for Failure {
    fn from(e: SequenceError) -> Self {
        match e {
            SequenceError::Guard(_) => guard_error(e),
            _ => input_error(e),
        }
    }
}

impl From<ReductionError> for Failure {
    fn from(e: ReductionError) -> Self {
        input_error(e)
    }
}

/// Result records plus an optional artifact printed verbatim.
#[derive(Debug, Default)]
pub struct Report {
    pub records: Vec<(String, String)>,
    pub artifact: Option<String>,
    pub code: u8,
}

impl Report {
    fn put(&mut self, key: &str, value: impl std::fmt::Display) {
        self.records.push((key.to_string(), value.to_string()));
    }

    /// The result records; when an artifact goes to stdout these belong on
    /// stderr.
    pub fn render(&self, format: OutputFormat) -> String {
        let mut out = String::new();
        for (k, v) in &self.records {
            match format {
                OutputFormat::Kv => out.push_str(&format!("{k}={v}\n")),
                OutputFormat::JsonLines => {
                    let mut obj = serde_json::Map::new();
                    obj.insert(k.clone(), serde_json::Value::String(v.clone()));
                    out.push_str(&serde_json::Value::Object(obj).to_string());
                    out.push('\n');
                }
            }
        }
        out
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn parsed<T>(path: &Path, r: Result<T, ParseError>) -> Result<T, Failure> {
    r.map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read(path)?;
    parsed(path, formats::parse_graph(&text))
}

fn load_ids(path: &Path) -> Result<Vec<usize>, Failure> {
    let text = read(path)?;
    parsed(path, formats::parse_ids(&text))
}

fn load_set(path: &Path, n: usize) -> Result<VertexSet, Failure> {
    let ids = load_ids(path)?;
    if let Some(&v) = ids.iter().find(|&&v| v >= n) {
        return Err(input_error(format!("{}: vertex {v} out of range (n = {n})", path.display())));
    }
    Ok(VertexSet::from_iter(n, ids))
}

fn load_trace(path: &Path) -> Result<Vec<RuleApplication>, Failure> {
    let text = read(path)?;
    parsed(path, formats::parse_trace(&text))
}

fn rule_set(s: &str) -> Result<RuleSet, Failure> {
    RuleSet::parse(s).map_err(input_error)
}

fn inline_trace(trace: &[RuleApplication]) -> String {
    trace.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(";")
}

fn emit(out: Option<&PathBuf>, text: String, report: &mut Report) -> Result<(), Failure> {
    match out {
        Some(p) => write(p, &text),
        None => {
            report.artifact = Some(text);
            Ok(())
        }
    }
}

pub fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Solve(a) => solve(a),
        Command::Verify(a) => verify(a),
        Command::Convert(a) => convert(a),
        Command::Reduce(a) => reduce(a),
        Command::Generate(a) => generate(a),
        Command::Decompose(a) => decompose(a),
    }
}

fn decomposition(g: &Graph, strategy: Strategy) -> Result<TreeDecomposition, Failure> {
    Ok(match strategy {
        Strategy::MinDegree => heuristic_decomposition(g, Heuristic::MinDegree),
        Strategy::MinFill => heuristic_decomposition(g, Heuristic::MinFill),
        Strategy::Exact => match exact_treewidth(g, None)? {
            ExactTreewidth::Width(_, td) => td,
            ExactTreewidth::Exceeds(_) => unreachable!("no bound given"),
        },
    })
}

fn solve(a: &SolveArgs) -> Result<Report, Failure> {
    let g = load_graph(&a.graph)?;
    let rs = rule_set(&a.rules)?;
    let mut report = Report::default();
    if let (Some(k), Method::Dp, None) = (a.k, a.method, &a.td) {
        if rs == RuleSet::Z || rs == RuleSet::ZD {
            return match dp::solve_by_solution_size(&g, k, rs)? {
                SizeDecision::Yes { set, trace } => {
                    report.put("answer", "yes");
                    finish_solution(&mut report, a, &set, &trace)?;
                    Ok(report)
                }
                SizeDecision::TreewidthExceeds => {
                    report.put("answer", "no");
                    report.put("reason", "treewidth");
                    report.code = 1;
                    Ok(report)
                }
                SizeDecision::MinimumLarger => {
                    report.put("answer", "no");
                    report.put("reason", "minimum");
                    report.code = 1;
                    Ok(report)
                }
            };
        }
    }
    let (set, trace, stats) = match a.method {
        Method::Brute => {
            let best = min_forcing_bruteforce_with_limit(&g, rs, a.max_n)?;
            (best.set, best.trace, None)
        }
        Method::Dp => {
            let td = match &a.td {
                Some(p) => {
                    let text = read(p)?;
                    parsed(p, formats::parse_td(&text))?
                }
                None => decomposition(&g, a.decomposition)?,
            };
            let nice = make_nice(&g, &td).map_err(|e| input_error(format!("decomposition: {e}")))?;
            let opts = DpOptions { budget: a.budget, ..DpOptions::default() };
            let sol = dp::solve_with(&g, &nice, rs, &opts)?;
            let (set, trace) = sol.witness.expect("witness requested");
            (set, trace, Some((nice.width(), sol.stats)))
        }
    };
    if let Some(k) = a.k {
        let yes = set.len() <= k;
        report.put("answer", if yes { "yes" } else { "no" });
        if !yes {
            report.put("k_min", set.len());
            report.code = 1;
            return Ok(report);
        }
    }
    finish_solution(&mut report, a, &set, &trace)?;
    if let Some((width, stats)) = stats {
        report.put("width", width);
        report.put("signatures", stats.signatures);
    }
    Ok(report)
}

fn finish_solution(
    report: &mut Report,
    a: &SolveArgs,
    set: &VertexSet,
    trace: &[RuleApplication],
) -> Result<(), Failure> {
    report.put("k", set.len());
    report.put("set", formats::join(set.iter()));
    report.put("trace", inline_trace(trace));
    if let Some(p) = &a.set_out {
        write(p, &formats::write_ids(set.iter()))?;
    }
    if let Some(p) = &a.trace_out {
        write(p, &formats::write_trace(trace))?;
    }
    Ok(())
}

fn verify(a: &VerifyArgs) -> Result<Report, Failure> {
    let mut report = Report::default();
    if a.covering {
        let text = read(&a.graph)?;
        let h = parsed(&a.graph, formats::parse_hypergraph(&text))?;
        let seq = load_ids(a.sequence.as_ref().expect("required by clap"))?;
        match verify_covering_sequence(&h, &seq) {
            Ok(fps) => {
                report.put("valid", true);
                report.put("length", seq.len());
                let chosen: Vec<usize> = fps.iter().map(|f| f.first().expect("non-empty footprint")).collect();
                report.put("footprints", formats::join(chosen));
            }
            Err(e) => invalid(&mut report, e),
        }
        return Ok(report);
    }
    let g = load_graph(&a.graph)?;
    if let Some(seq_path) = &a.sequence {
        let var = a.variant.ok_or_else(|| input_error("--sequence needs --variant"))?;
        let seq = load_ids(seq_path)?;
        let restrict = a.restrict.as_ref().map(|p| load_set(p, g.n())).transpose()?;
        match verify_sequence_restricted(&g, &seq, var, restrict.as_ref()) {
            Ok(w) => {
                report.put("valid", true);
                report.put("length", seq.len());
                report.put("footprints", formats::join(w.chosen(&seq)));
            }
            Err(SequenceError::Guard(e)) => return Err(guard_error(e)),
            Err(e) => invalid(&mut report, e),
        }
        return Ok(report);
    }
    let set_path = a.set.as_ref().ok_or_else(|| input_error("give --set (forcing) or --sequence"))?;
    let rs = rule_set(a.rules.as_deref().ok_or_else(|| input_error("--set needs --rules"))?)?;
    let set = load_set(set_path, g.n())?;
    match &a.trace {
        Some(p) => {
            let trace = load_trace(p)?;
            match replay(&g, &set, &trace, rs) {
                Ok(()) => {
                    report.put("valid", true);
                    report.put("trace", inline_trace(&trace));
                }
                Err(e) => invalid(&mut report, e),
            }
        }
        None => match is_forcing_set_with_budget(&g, &set, rs, DEFAULT_SEARCH_BUDGET).map_err(guard_error)? {
            ForcingVerdict::Yes(trace) => {
                report.put("valid", true);
                report.put("trace", inline_trace(&trace));
            }
            ForcingVerdict::No { largest, .. } => {
                invalid(&mut report, format!("at most {} of {} vertices turn blue", largest.len(), g.n()));
                report.put("largest", formats::join(largest.iter()));
            }
        },
    }
    Ok(report)
}

fn invalid(report: &mut Report, why: impl std::fmt::Display) {
    report.put("valid", false);
    report.put("violation", why);
    report.code = 1;
}

fn convert(a: &ConvertArgs) -> Result<Report, Failure> {
    let g = load_graph(&a.graph)?;
    let mut report = Report::default();
    if let Some(p) = &a.sequence {
        let seq = load_ids(p)?;
        let (set, trace) = sequence_to_forcing(&g, &seq, a.variant)?;
        report.put("rules", a.variant.rule_set());
        report.put("k", set.len());
        report.put("set", formats::join(set.iter()));
        report.put("trace", inline_trace(&trace));
        if let Some(p) = &a.set_out {
            write(p, &formats::write_ids(set.iter()))?;
        }
        if let Some(p) = &a.trace_out {
            write(p, &formats::write_trace(&trace))?;
        }
        return Ok(report);
    }
    let (Some(sp), Some(tp)) = (&a.set, &a.trace) else {
        return Err(input_error("give --sequence, or --set with --trace"));
    };
    let set = load_set(sp, g.n())?;
    let trace = load_trace(tp)?;
    let seq = forcing_trace_to_sequence(&g, &set, &trace, a.variant)?;
    report.put("length", seq.len());
    report.put("sequence", formats::join(seq.iter().copied()));
    if let Some(p) = &a.sequence_out {
        write(p, &formats::write_ids(seq))?;
    }
    Ok(report)
}

fn load_osgtd(a: &ReduceArgs) -> Result<OsgtdInstance, Failure> {
    let g = load_graph(&a.input)?;
    let side = a.side.as_ref().ok_or_else(|| input_error("one-sided input needs --side"))?;
    let side = load_set(side, g.n())?;
    Ok(OsgtdInstance::new(g, side, a.k)?)
}

fn reduce(a: &ReduceArgs) -> Result<Report, Failure> {
    let mut report = Report::default();
    let format = GraphFormat::from(a.graph_format);
    let inst = match (a.from, a.to) {
        (Source::Mcc, Target::Osgtd) => {
            let g = load_graph(&a.input)?;
            let pp = a.partition.as_ref().ok_or_else(|| input_error("--from mcc needs --partition"))?;
            let text = read(pp)?;
            let classes = parsed(pp, formats::parse_partition(&text))?;
            let mcc = MccInstance::new(g, classes)?;
            let red = mcc_to_osgtd(&mcc);
            audit_mcc(&mcc, &red).map_err(|e| Failure { code: 4, message: e.to_string() })?;
            report.put("audit", "pass");
            if a.certify {
                let cert = certify_mcc(&mcc, &red, a.max_n)?;
                let clique = cert.clique.as_ref().map(|c| c.iter().enumerate().map(|(i, &p)| mcc.classes[i][p]));
                report.put("clique", clique.map_or("none".to_string(), formats::join));
                report.put("reaches_target", cert.sequence.is_some());
                report.put("sound", cert.sound());
                if !cert.sound() {
                    report.code = 1;
                }
            }
            red.instance
        }
        (Source::Gd | Source::Tgd | Source::L, Target::Osgtd) => {
            let g = load_graph(&a.input)?;
            match a.from {
                Source::Gd => gd_to_osgtd(&g, a.k)?,
                Source::Tgd => tgd_to_osgtd(&g, a.k)?,
                _ => lgd_to_osgtd(&g, a.k)?,
            }
        }
        (Source::Osgtd, Target::Cobipartite) => {
            let inst = load_osgtd(a)?;
            let var = a.variant.ok_or_else(|| input_error("--to cobipartite needs --variant"))?;
            let (g, k) = osgtd_to_cobipartite(&inst, var)?;
            report.put("n", g.n());
            report.put("m", g.m());
            report.put("target", k);
            emit(a.out.as_ref(), formats::write_graph(&g, format), &mut report)?;
            return Ok(report);
        }
        (Source::Osgtd, Target::Hypergraph) => {
            let inst = load_osgtd(a)?;
            let h = osgtd_to_hypergraph(&inst);
            report.put("vertices", h.vertex_count());
            report.put("edges", h.edges().len());
            report.put("target", inst.target);
            emit(a.out.as_ref(), formats::write_hypergraph(&h), &mut report)?;
            return Ok(report);
        }
        (from, to) => return Err(input_error(format!("no reduction from {from:?} to {to:?}"))),
    };
    report.put("n", inst.graph.n());
    report.put("m", inst.graph.m());
    report.put("side_a", inst.sides.a.len());
    report.put("target", inst.target);
    if let Some(p) = &a.side_out {
        write(p, &formats::write_ids(inst.sides.a.iter()))?;
    }
    emit(a.out.as_ref(), formats::write_graph(&inst.graph, format), &mut report)?;
    Ok(report)
}

fn generate(a: &GenerateArgs) -> Result<Report, Failure> {
    use zforce_core::graph::families;
    let mut report = Report::default();
    let g = match &a.kind {
        GenerateKind::Corona { graph } => corona_with_leaves(&load_graph(graph)?),
        &GenerateKind::Random { n, p, seed } => {
            check_probability(p)?;
            generate::gnp(n, p, seed)
        }
        &GenerateKind::Tree { n, seed } => generate::random_tree(n, seed),
        &GenerateKind::Ktree { n, k, keep, seed } => {
            check_probability(keep)?;
            generate::partial_ktree(n, k, keep, seed)
        }
        &GenerateKind::Path { n } => families::path(n),
        &GenerateKind::Caterpillar { spine, legs } => families::caterpillar(spine, legs),
        GenerateKind::Mcc { k, q, p, seed, partition_out } => {
            check_probability(*p)?;
            if *k < 2 {
                return Err(input_error("need k >= 2"));
            }
            let inst = generate::random_mcc(*k, *q, *p, *seed);
            write(partition_out, &formats::write_partition(&inst.classes))?;
            inst.graph
        }
    };
    report.put("n", g.n());
    report.put("m", g.m());
    emit(a.out.as_ref(), formats::write_graph(&g, a.graph_format.into()), &mut report)?;
    Ok(report)
}

fn check_probability(p: f64) -> Result<(), Failure> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(input_error(format!("probability {p} outside [0, 1]")))
    }
}

fn decompose(a: &DecomposeArgs) -> Result<Report, Failure> {
    let g = load_graph(&a.graph)?;
    let td = decomposition(&g, a.method)?;
    let width = validate_td(&g, &td).map_err(|e| Failure { code: 4, message: e.to_string() })?;
    let mut report = Report::default();
    report.put("width", width);
    report.put("bags", td.bags.len());
    let text = if a.nice {
        let nice = make_nice(&g, &td).map_err(|e| Failure { code: 4, message: e.to_string() })?;
        report.put("nodes", nice.len());
        formats::write_nice(&nice)
    } else {
        formats::write_td(&td, g.n())
    };
    emit(a.out.as_ref(), text, &mut report)?;
    Ok(report)
}
