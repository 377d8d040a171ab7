//! The `dynclique` command-line tool.
//!
//! Exit codes: 0 success, 1 usage, 2 unreadable or malformed input,
//! 3 verification failure.

use std::collections::{BTreeSet, HashSet};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::batch::EdgeBatch;
use crate::clique::Clique;
use crate::delta::{self, ChangeSet, DeltaError, DynamicCliques, NewCliqueAlgo};
use crate::extremal::{self, ExtremalError};
use crate::graph::{Edge, Graph};
use crate::oracle::{self, OracleError, ORACLE_MAX_VERTICES};
use crate::pivot;
use crate::signature::CliqueRegistry;
use crate::stream::{self, EdgeStream, StreamConfig, StreamOrdering};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

pub const METRICS_HEADER: &str = "batch_index,batch_size,elapsed_ms,new_count,del_count,total_change_size";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: stream::ParseError },
    #[error("{path}: {source}")]
    Write { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Output(#[from] io::Error),
    #[error("{0}")]
    Verification(String),
    #[error(transparent)]
    Delta(#[from] DeltaError),
    #[error(transparent)]
    Extremal(#[from] ExtremalError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Extremal(_) => EXIT_USAGE,
            CliError::Read { .. } | CliError::Parse { .. } => EXIT_PARSE,
            CliError::Verification(_) | CliError::Delta(_) => EXIT_VERIFY,
            CliError::Write { .. } | CliError::Output(_) => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "dynclique", version, about = "Maximal cliques of a graph under batched edge updates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the maximal cliques of an edge-list graph.
    Mce {
        input: PathBuf,
        #[arg(long)]
        count_only: bool,
    },
    /// Turn an edge-list graph into an initial graph plus insert batches.
    GenStream {
        input: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
        #[arg(long, default_value_t = 0.1)]
        retain: f64,
        #[arg(long, default_value_t = 1000)]
        batch_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep only streamed edges touching the K highest-degree vertices.
        #[arg(long, value_name = "K", num_args = 0..=1, default_missing_value = "100")]
        high_degree: Option<usize>,
    },
    /// Replay a stream file, reporting per-batch metrics as CSV.
    Stream {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Algo::Enumnte)]
        algo: Algo,
        /// Write the CSV here instead of standard output.
        #[arg(long)]
        metrics_out: Option<PathBuf>,
        /// Print every new and subsumed clique as `new <batch> <clique>` and
        /// `del <batch> <clique>` lines.
        #[arg(long)]
        emit_cliques: bool,
        /// Store canonical strings next to signatures, fail on any hash
        /// collision, and check the final registry against a full
        /// enumeration.
        #[arg(long)]
        verify_signatures: bool,
        /// Write the final registry snapshot here.
        #[arg(long)]
        snapshot_out: Option<PathBuf>,
    },
    /// Compare the incremental algorithms against the brute-force oracle on
    /// random small instances.
    Verify {
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = ORACLE_MAX_VERTICES as u64)]
        max_n: u64,
        #[arg(long, default_value_t = 6)]
        max_batch: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Write an extremal construction and its predicted clique counts.
    Extremal {
        #[arg(value_enum)]
        kind: ExtremalKind,
        n: u64,
        eps: Option<u64>,
        /// Output path prefix.
        #[arg(short, long, default_value = "extremal")]
        out: PathBuf,
    },
    /// Write a seeded random graph as an edge list.
    RandomGraph {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: usize,
        /// Put each vertex in a block of this many vertices, joining pairs
        /// inside a block with probability `--p-in`; `--m` extra edges are
        /// then added uniformly.
        #[arg(long)]
        community: Option<u64>,
        #[arg(long, default_value_t = 0.5)]
        p_in: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Enumn,
    Enumnte,
    Naive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExtremalKind {
    MoonMoser,
    SingleEdge,
    Batch,
    MmPair,
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = out.flush();
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Mce { input, count_only } => cmd_mce(&input, count_only, out, err),
        Command::GenStream { input, out: path, retain, batch_size, seed, high_degree } => {
            let ordering = match high_degree {
                Some(k) => StreamOrdering::HighDegree(k),
                None => StreamOrdering::Random,
            };
            let cfg = StreamConfig { retain_prob: retain, batch_size, seed, ordering };
            cmd_gen_stream(&input, &path, &cfg, out, err)
        }
        Command::Stream { input, algo, metrics_out, emit_cliques, verify_signatures, snapshot_out } => {
            let opts = StreamOptions { algo, emit_cliques, verify_signatures };
            cmd_stream(&input, &opts, metrics_out.as_deref(), snapshot_out.as_deref(), out)
        }
        Command::Verify { trials, max_n, max_batch, seed, inject_fault } => {
            cmd_verify(&VerifyOptions { trials, max_n, max_batch, seed, inject_fault }, out, err)
        }
        Command::Extremal { kind, n, eps, out: prefix } => cmd_extremal(kind, n, eps, &prefix, out),
        Command::RandomGraph { n, m, community, p_in, seed, out: path } => {
            let g = match community {
                Some(size) => stream::community_graph(n, size, p_in, m, seed),
                None => stream::random_graph(n, m, seed),
            };
            write_file(&path, stream::write_edge_list(&g).as_bytes())?;
            writeln!(out, "vertices={} edges={}", g.vertex_count(), g.edge_count())?;
            Ok(())
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|source| CliError::Write { path: path.to_path_buf(), source })
}

fn load_graph(path: &Path, err: &mut dyn Write) -> Result<Graph, CliError> {
    let text = read_file(path)?;
    let (g, report) =
        stream::parse_edge_list(&text).map_err(|source| CliError::Parse { path: path.to_path_buf(), source })?;
    if report.warnings() > 0 {
        writeln!(
            err,
            "warning: {}: dropped {} self loop(s) and {} duplicate edge(s)",
            path.display(),
            report.self_loops,
            report.duplicates
        )?;
    }
    Ok(g)
}

fn cmd_mce(input: &Path, count_only: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let g = load_graph(input, err)?;
    let mut cliques = pivot::maximal_cliques(&g);
    cliques.sort();
    if !count_only {
        for c in &cliques {
            writeln!(out, "{c}")?;
        }
    }
    writeln!(out, "count={}", cliques.len())?;
    Ok(())
}

fn cmd_gen_stream(
    input: &Path,
    path: &Path,
    cfg: &StreamConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let g = load_graph(input, err)?;
    let s = stream::gen_stream(&g, cfg).map_err(|e| CliError::Usage(e.to_string()))?;
    write_file(path, stream::write_stream(&s).as_bytes())?;
    writeln!(
        out,
        "initial_edges={} batches={} streamed_edges={}",
        s.initial.edge_count(),
        s.batches.len(),
        s.edge_count()
    )?;
    Ok(())
}

/// What was measured for one replayed batch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BatchMetrics {
    pub batch_index: usize,
    pub batch_size: usize,
    pub elapsed: Duration,
    pub new_count: usize,
    pub del_count: usize,
    pub total_change_size: u64,
}

impl BatchMetrics {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.batch_index,
            self.batch_size,
            self.elapsed.as_millis(),
            self.new_count,
            self.del_count,
            self.total_change_size
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StreamOptions {
    pub algo: Algo,
    pub emit_cliques: bool,
    pub verify_signatures: bool,
}

/// Result of replaying a stream.
#[derive(Debug)]
pub struct Replay {
    pub metrics: Vec<BatchMetrics>,
    pub graph: Graph,
    pub registry: CliqueRegistry,
}

enum Engine {
    Incremental(DynamicCliques, NewCliqueAlgo),
    Naive(Graph, HashSet<Clique>),
}

/// Replays every batch of `stream`, timing only the update itself.
/// `on_batch` sees each batch's metrics and normalized change.
pub fn replay_stream<F>(stream: &EdgeStream, algo: Algo, verifying: bool, mut on_batch: F) -> Result<Replay, CliError>
where
    F: FnMut(&BatchMetrics, &ChangeSet) -> Result<(), CliError>,
{
    let mut engine = match algo {
        Algo::Naive => {
            let current: HashSet<Clique> = pivot::maximal_cliques(&stream.initial).into_iter().collect();
            Engine::Naive(stream.initial.clone(), current)
        }
        Algo::Enumn => {
            Engine::Incremental(DynamicCliques::new(stream.initial.clone(), verifying)?, NewCliqueAlgo::Filtered)
        }
        Algo::Enumnte => {
            Engine::Incremental(DynamicCliques::new(stream.initial.clone(), verifying)?, NewCliqueAlgo::Excluding)
        }
    };
    let mut metrics = Vec::with_capacity(stream.batches.len());
    for (batch_index, batch) in stream.batches.iter().enumerate() {
        let start = Instant::now();
        let change = match &mut engine {
            Engine::Incremental(state, algo) => state.insert_with(*algo, batch)?,
            Engine::Naive(g, current) => delta::naive_change(g, batch, current)?,
        };
        let elapsed = start.elapsed();
        let change = change.normalized();
        let m = BatchMetrics {
            batch_index,
            batch_size: batch.len(),
            elapsed,
            new_count: change.new_cliques.len(),
            del_count: change.del_cliques.len(),
            total_change_size: change.total_change_size(),
        };
        on_batch(&m, &change)?;
        metrics.push(m);
    }
    let (graph, registry) = match engine {
        Engine::Incremental(state, _) => state.into_parts(),
        Engine::Naive(g, current) => {
            let registry = CliqueRegistry::from_cliques(current.iter(), verifying)
                .map_err(|e| CliError::Verification(e.to_string()))?;
            (g, registry)
        }
    };
    Ok(Replay { metrics, graph, registry })
}

fn cmd_stream(
    input: &Path,
    opts: &StreamOptions,
    metrics_out: Option<&Path>,
    snapshot_out: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let text = read_file(input)?;
    let s = stream::read_stream(&text).map_err(|source| CliError::Parse { path: input.to_path_buf(), source })?;

    let mut csv = String::new();
    csv.push_str(METRICS_HEADER);
    csv.push('\n');
    let replay = replay_stream(&s, opts.algo, opts.verify_signatures, |m, change| {
        csv.push_str(&m.csv_row());
        csv.push('\n');
        if opts.emit_cliques {
            for c in &change.new_cliques {
                writeln!(out, "new {} {c}", m.batch_index)?;
            }
            for c in &change.del_cliques {
                writeln!(out, "del {} {c}", m.batch_index)?;
            }
        }
        Ok(())
    })
    .map_err(|e| match e {
        CliError::Delta(DeltaError::Registry(r)) => CliError::Verification(r.to_string()),
        other => other,
    })?;

    if opts.verify_signatures {
        let fresh = pivot::maximal_cliques(&replay.graph);
        let expected =
            CliqueRegistry::from_cliques(fresh.iter(), true).map_err(|e| CliError::Verification(e.to_string()))?;
        if !expected.same_signatures(&replay.registry) {
            return Err(CliError::Verification(format!(
                "final registry holds {} cliques but the final graph has {}",
                replay.registry.len(),
                expected.len()
            )));
        }
    }
    if let Some(path) = snapshot_out {
        write_file(path, &replay.registry.snapshot())?;
    }
    match metrics_out {
        Some(path) => write_file(path, csv.as_bytes())?,
        None => out.write_all(csv.as_bytes())?,
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub trials: u64,
    pub max_n: u64,
    pub max_batch: usize,
    pub seed: u64,
    pub inject_fault: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrialKind {
    Insert,
    Delete,
    Mixed,
}

/// One randomized verification instance.
#[derive(Debug, Clone)]
pub struct Trial {
    pub kind: TrialKind,
    pub graph: Graph,
    pub inserts: EdgeBatch,
    pub deletes: EdgeBatch,
}

impl Trial {
    /// Graph on `1..=n` for `n` uniform in `1..=max_n`, with an edge density
    /// drawn uniformly from (0, 1), and batches of at most `max_batch` edges.
    pub fn random(rng: &mut ChaCha8Rng, max_n: u64, max_batch: usize) -> Trial {
        let n = rng.random_range(1..=max_n.max(1));
        let density: f64 = rng.random_range(f64::EPSILON..1.0);
        let mut graph = Graph::new();
        let mut absent = Vec::new();
        for v in 1..=n {
            graph.add_vertex(v);
        }
        for a in 1..=n {
            for b in a + 1..=n {
                let e = Edge::new(a, b).expect("a < b");
                if rng.random::<f64>() < density {
                    graph.add_edge(e).expect("fresh pair");
                } else {
                    absent.push(e);
                }
            }
        }
        let mut present: Vec<Edge> = graph.edges().collect();
        let kind = match rng.random_range(0..3u8) {
            0 => TrialKind::Insert,
            1 => TrialKind::Delete,
            _ => TrialKind::Mixed,
        };
        let pick = |pool: &mut Vec<Edge>, rng: &mut ChaCha8Rng| {
            pool.shuffle(rng);
            let k = rng.random_range(1..=max_batch.max(1)).min(pool.len());
            pool[..k].to_vec()
        };
        let ins = if kind == TrialKind::Delete { Vec::new() } else { pick(&mut absent, rng) };
        let del = if kind == TrialKind::Insert { Vec::new() } else { pick(&mut present, rng) };
        Trial {
            kind,
            graph,
            inserts: EdgeBatch::insert(ins).expect("distinct"),
            deletes: EdgeBatch::delete(del).expect("distinct"),
        }
    }

    /// The change computed by the incremental algorithms, plus the final
    /// registry.
    pub fn incremental(&self) -> Result<(ChangeSet, CliqueRegistry), DeltaError> {
        let mut state = DynamicCliques::new(self.graph.clone(), true)?;
        let change = match self.kind {
            TrialKind::Insert => state.insert(&self.inserts)?,
            TrialKind::Delete => state.delete(&self.deletes)?,
            TrialKind::Mixed => state.update(&self.inserts, &self.deletes)?,
        };
        Ok((change.normalized(), state.into_parts().1))
    }

    pub fn expected(&self) -> Result<ChangeSet, OracleError> {
        let change = match self.kind {
            TrialKind::Insert => oracle::oracle_change(&self.graph, &self.inserts)?,
            TrialKind::Delete => oracle::oracle_change(&self.graph, &self.deletes)?,
            TrialKind::Mixed => oracle::oracle_mixed_change(&self.graph, &self.inserts, &self.deletes)?,
        };
        Ok(change.normalized())
    }

    pub fn final_graph(&self) -> Graph {
        let mut g = self.graph.clone();
        if self.kind != TrialKind::Delete {
            self.inserts.apply(&mut g).expect("trial batches are valid");
        }
        if self.kind != TrialKind::Insert {
            self.deletes.apply(&mut g).expect("trial batches are valid");
        }
        g
    }

    /// Plain-text description sufficient to rebuild the instance.
    pub fn repro(&self) -> String {
        let mut s = String::new();
        let kind = match self.kind {
            TrialKind::Insert => "insert",
            TrialKind::Delete => "delete",
            TrialKind::Mixed => "mixed",
        };
        let join = |edges: &mut dyn Iterator<Item = Edge>| edges.map(|e| e.to_string()).collect::<Vec<_>>().join(" ");
        let _ = writeln!(s, "kind: {kind}");
        let _ = writeln!(s, "vertices: 1..={}", self.graph.vertex_count());
        let _ = writeln!(s, "edges: {}", join(&mut self.graph.edges()));
        let _ = writeln!(s, "inserts: {}", join(&mut self.inserts.edges().iter().copied()));
        let _ = writeln!(s, "deletes: {}", join(&mut self.deletes.edges().iter().copied()));
        s
    }
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn describe(cliques: &[Clique]) -> String {
    let parts: Vec<String> = cliques.iter().map(|c| format!("{{{c}}}")).collect();
    format!("[{}]", parts.join(" "))
}

fn check_trial(trial: &Trial, inject_fault: bool) -> Result<(), String> {
    let expected = trial.expected().map_err(|e| e.to_string())?;
    let (mut got, registry) = trial.incremental().map_err(|e| e.to_string())?;
    if inject_fault {
        match got.new_cliques.pop() {
            Some(_) => {}
            None => got.new_cliques.push(Clique::from_vertices([u64::MAX])),
        }
    }
    if got != expected {
        return Err(format!(
            "change mismatch\nexpected new: {}\nexpected del: {}\ngot new: {}\ngot del: {}",
            describe(&expected.new_cliques),
            describe(&expected.del_cliques),
            describe(&got.new_cliques),
            describe(&got.del_cliques)
        ));
    }
    let before = oracle::oracle_cliques(&trial.graph).map_err(|e| e.to_string())?;
    let after = oracle::oracle_cliques(&trial.final_graph()).map_err(|e| e.to_string())?;
    let removed: BTreeSet<&Clique> = got.del_cliques.iter().collect();
    let rebuilt: BTreeSet<Clique> =
        before.iter().filter(|c| !removed.contains(c)).cloned().chain(got.new_cliques.iter().cloned()).collect();
    if rebuilt != after {
        return Err("reconstruction from the change does not give the final clique set".into());
    }
    let fresh = CliqueRegistry::from_cliques(after.iter(), true).map_err(|e| e.to_string())?;
    if !fresh.same_signatures(&registry) {
        return Err("final registry differs from the final clique set".into());
    }
    Ok(())
}

fn cmd_verify(opts: &VerifyOptions, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    if opts.max_n == 0 || opts.max_n > ORACLE_MAX_VERTICES as u64 {
        return Err(CliError::Usage(format!("--max-n must be between 1 and {ORACLE_MAX_VERTICES}")));
    }
    if opts.max_batch == 0 {
        return Err(CliError::Usage("--max-batch must be positive".into()));
    }
    if opts.trials == 0 {
        writeln!(err, "warning: --trials 0 checks nothing")?;
    }
    for t in 0..opts.trials {
        let trial = Trial::random(&mut trial_rng(opts.seed, t), opts.max_n, opts.max_batch);
        if let Err(reason) = check_trial(&trial, opts.inject_fault) {
            writeln!(out, "FAIL trial {t} (seed {})", opts.seed)?;
            write!(out, "{}", trial.repro())?;
            writeln!(out, "{reason}")?;
            return Err(CliError::Verification(format!("trial {t} disagrees with the oracle")));
        }
    }
    writeln!(
        out,
        "PASS {} trials (seed {}, max n {}, max batch {})",
        opts.trials, opts.seed, opts.max_n, opts.max_batch
    )?;
    Ok(())
}

fn cmd_extremal(
    kind: ExtremalKind,
    n: u64,
    eps: Option<u64>,
    prefix: &Path,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let with_ext = |ext: &str| -> PathBuf {
        let mut p = prefix.as_os_str().to_owned();
        p.push(ext);
        PathBuf::from(p)
    };
    if eps.is_some() && kind != ExtremalKind::Batch {
        return Err(CliError::Usage("only `batch` takes an eps argument".into()));
    }
    let mut written = Vec::new();
    let mut emit = |path: PathBuf, body: String| -> Result<(), CliError> {
        write_file(&path, body.as_bytes())?;
        written.push(path);
        Ok(())
    };
    let update_sidecar = |p: &extremal::Prediction| {
        format!(
            "cliques_before={}\ncliques_after={}\nnew={}\ndel={}\nchange={}\n",
            p.cliques_before, p.cliques_after, p.cliques_after, p.cliques_before, p.change
        )
    };
    match kind {
        ExtremalKind::MoonMoser => {
            let g = extremal::moon_moser(n)?;
            emit(with_ext(".edges"), stream::write_edge_list(&g))?;
            emit(with_ext(".expected"), format!("cliques={}\n", extremal::f_max(n)?))?;
        }
        ExtremalKind::SingleEdge => {
            let inst = extremal::single_edge_extremal(n)?;
            let s = EdgeStream {
                initial: inst.graph.clone(),
                batches: vec![EdgeBatch::insert(vec![inst.edge]).expect("one edge")],
            };
            emit(with_ext(".edges"), stream::write_edge_list(&inst.graph))?;
            emit(with_ext(".stream"), stream::write_stream(&s))?;
            emit(with_ext(".expected"), update_sidecar(&inst.predicted))?;
        }
        ExtremalKind::Batch => {
            let eps = eps.ok_or_else(|| CliError::Usage("`batch` needs an eps argument".into()))?;
            let inst = extremal::batch_extremal(n, eps)?;
            let s = EdgeStream { initial: inst.graph.clone(), batches: vec![inst.batch.clone()] };
            emit(with_ext(".edges"), stream::write_edge_list(&inst.graph))?;
            emit(with_ext(".stream"), stream::write_stream(&s))?;
            emit(with_ext(".expected"), update_sidecar(&inst.predicted))?;
        }
        ExtremalKind::MmPair => {
            let pair = extremal::moon_moser_correction_pair(n)?;
            let s = EdgeStream { initial: pair.h.clone(), batches: vec![pair.cycle.clone()] };
            emit(with_ext(".h.edges"), stream::write_edge_list(&pair.h))?;
            emit(with_ext(".h.expected"), format!("cliques={}\n", pair.cliques_each))?;
            emit(with_ext(".g.edges"), stream::write_edge_list(&pair.g))?;
            emit(with_ext(".g.expected"), format!("cliques={}\n", pair.cliques_each))?;
            emit(with_ext(".stream"), stream::write_stream(&s))?;
        }
    }
    for p in written {
        writeln!(out, "wrote {}", p.display())?;
    }
    Ok(())
}

/// Entry point used by the binary.
pub fn main_with_std_io() -> i32 {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let code = run(std::env::args_os(), &mut out, &mut err);
    if out.flush().is_err() && code == EXIT_OK {
        return EXIT_USAGE;
    }
    code
}
