//! The `pvc` command-line front end.
//!
//! Every solver command prints one `key=value` line (a [`RunRecord`]). Keys
//! that depend on the machine (wall time, node counts) only appear with
//! `--timing`, so records are byte-identical across thread counts.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::approx::{
    approx_max_partial_vc, approx_max_vc_dimension, approx_via_double_hitting, greedy_partial_double_hitting,
    ApproxResult,
};
use crate::error::{Error, Result};
use crate::exact::{SearchConfig, SolveResult, DEFAULT_CEILING};
use crate::generate;
use crate::graph::neighborhood_hypergraph;
use crate::hypergraph::Hypergraph;
use crate::io;
use crate::planar::{compute_levels, LeveledPlanarGraph};
use crate::reductions::{
    clique_to_vcdim, is_to_disting_transversal, mpvc_to_mpvcd, verify_reduction, Instance, ReductionKind, Variant,
};
use crate::vertex_set::VertexSet;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "pvc", version, about = "Partial VC dimension solvers and instance tools")]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, env = "PVC_THREADS")]
    pub threads: Option<usize>,
    /// Solver commands: also write the record here. gen/reduce: instance path.
    /// bench: also write the CSV here.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Add wall time and node counts to the output.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Search-tree node limit per exhaustive enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_CEILING)]
    pub ceiling: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ApproxMethod {
    Greedy,
    DoubleHitting,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact maximum class count for k vertices, or the decision with -l.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        l: Option<usize>,
    },
    /// Approximate maximum class count with a certified upper bound.
    Approx {
        #[arg(long)]
        input: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ApproxMethod::Greedy)]
        method: ApproxMethod,
    },
    /// VC dimension, exact or via the 2-approximation.
    Vcdim {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        approx2: bool,
    },
    /// Minimum distinguishing transversal.
    Dt {
        #[arg(long)]
        input: PathBuf,
    },
    /// Level-deletion scheme on a planar graph's neighborhood hypergraph.
    #[command(group(ArgGroup::new("lv").required(true).args(["levels", "outer_face"])))]
    Baker {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        levels: Option<PathBuf>,
        /// Comma-separated 1-based outer-face vertices; levels by BFS.
        #[arg(long, value_delimiter = ',')]
        outer_face: Option<Vec<usize>>,
        #[arg(long)]
        epsilon: f64,
        #[arg(short, required_unless_present = "min_dt")]
        k: Option<usize>,
        #[arg(long)]
        min_dt: bool,
    },
    /// Build a reduction target; writes the instance to --out and the
    /// certificate to <out>.cert.
    Reduce {
        kind: ReductionKind,
        #[arg(long)]
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        variant: Option<Variant>,
        /// Also solve both sides and check the identity.
        #[arg(long)]
        verify: bool,
    },
    /// Seeded instance generators. Output goes to --out or stdout.
    #[command(group(ArgGroup::new("family").required(true).args(["hypergraph", "graph", "cubic", "grid"])))]
    Gen {
        /// Random twin-free hypergraph.
        #[arg(long)]
        hypergraph: bool,
        /// Random graph with edge probability --density.
        #[arg(long)]
        graph: bool,
        /// Random simple cubic graph.
        #[arg(long)]
        cubic: bool,
        /// Grid graph; the level file goes to <out>.lvl.
        #[arg(long)]
        grid: bool,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 12)]
        m: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 3)]
        rows: usize,
        #[arg(long)]
        cols: Option<usize>,
    },
    /// Run a benchmark suite and print a CSV table.
    Bench {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Greedy against the exact optimum.
    Ratios,
    /// Double-hitting transfer on graph-shaped instances.
    DoubleHitting,
    /// 2-approximation of the VC dimension.
    Vcdim,
    /// Level deletion on grids.
    Baker,
}

/// One run as a single `key=value` line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunRecord {
    pub cmd: &'static str,
    /// SHA-256 of the input file, hex.
    pub input_digest: Option<String>,
    pub seed: u64,
    pub payload: Vec<(String, String)>,
    pub version: &'static str,
}

impl RunRecord {
    fn new(cmd: &'static str, seed: u64, input_digest: Option<String>) -> Self {
        RunRecord {
            cmd,
            input_digest,
            seed,
            payload: Vec::new(),
            version: VERSION,
        }
    }

    fn push(&mut self, key: &str, value: impl ToString) {
        self.payload.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.payload.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn render(&self) -> String {
        let mut s = format!("cmd={}", self.cmd);
        if let Some(d) = &self.input_digest {
            write!(s, " input=sha256:{d}").unwrap();
        }
        write!(s, " seed={}", self.seed).unwrap();
        for (k, v) in &self.payload {
            write!(s, " {k}={v}").unwrap();
        }
        write!(s, " version={}", self.version).unwrap();
        s
    }
}

fn set_text(s: &VertexSet) -> String {
    let v: Vec<String> = s.to_one_based().iter().map(|x| x.to_string()).collect();
    format!("[{}]", v.join(","))
}

fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<(String, String)> {
    let text = read(path)?;
    let d = digest(text.as_bytes());
    Ok((text, d))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text)?;
    Ok(())
}

fn sidecar(path: &Path, ext: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn solve_payload(rec: &mut RunRecord, r: &SolveResult, timing: bool) {
    rec.push("problem", r.problem);
    if let Some(k) = r.k {
        rec.push("k", k);
    }
    if let Some(l) = r.ell {
        rec.push("l", l);
    }
    if let Some(d) = r.decided {
        rec.push("decided", d);
    }
    if let Some(reason) = r.reason {
        rec.push("reason", reason);
    }
    rec.push("value", r.value);
    rec.push("witness", set_text(&r.witness));
    if timing {
        rec.push("enumerated", r.enumerated);
        rec.push("time_ms", r.elapsed_ms);
    }
}

fn approx_payload(rec: &mut RunRecord, r: &ApproxResult) {
    rec.push("method", r.method);
    rec.push("value", r.value);
    rec.push("upper_bound", r.upper_bound);
    rec.push("ratio", r.claimed_ratio);
    if let Some(d) = r.double_hit {
        rec.push("double_hit", d);
    }
    rec.push("witness", set_text(&r.witness));
}

/// Exit code of a command and the record it produced, if any.
pub struct Outcome {
    pub code: i32,
    pub record: Option<RunRecord>,
}

/// Runs a parsed command, writing its output to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(Error::input("--threads must be at least 1"));
        }
        // Fails only when a pool already exists, e.g. a second call in-process.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let cfg = SearchConfig::with_ceiling(cli.ceiling);
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Solve { input, k, l } => cmd_solve(cli, &cfg, input, *k, *l)?,
        Command::Approx { input, k, method } => cmd_approx(cli, input, *k, *method)?,
        Command::Vcdim { input, approx2 } => cmd_vcdim(cli, &cfg, input, *approx2)?,
        Command::Dt { input } => cmd_dt(cli, &cfg, input)?,
        Command::Baker {
            graph,
            levels,
            outer_face,
            epsilon,
            k,
            min_dt,
        } => cmd_baker(cli, &cfg, graph, levels.as_deref(), outer_face.as_deref(), *epsilon, *k, *min_dt)?,
        Command::Reduce {
            kind,
            graph,
            k,
            variant,
            verify,
        } => cmd_reduce(cli, &cfg, *kind, graph, *k, *variant, *verify)?,
        Command::Gen {
            hypergraph,
            graph,
            cubic,
            grid,
            n,
            m,
            density,
            rows,
            cols,
        } => {
            let family = if *hypergraph {
                Family::Hypergraph { n: *n, m: *m, density: *density }
            } else if *graph {
                Family::Graph { n: *n, p: *density }
            } else if *cubic {
                Family::Cubic { n: *n }
            } else {
                debug_assert!(*grid);
                Family::Grid { rows: *rows, cols: cols.unwrap_or(*rows) }
            };
            cmd_gen(cli, family, out)?
        }
        Command::Bench { suite, count } => {
            let csv = cmd_bench(&cfg, *suite, *count, cli.seed, cli.timing)?;
            out.write_all(csv.as_bytes())?;
            if let Some(p) = &cli.out {
                write_file(p, &csv)?;
            }
            Outcome { code: 0, record: None }
        }
    };
    if let Some(mut rec) = outcome.record {
        if cli.timing && rec.get("time_ms").is_none() {
            rec.push("time_ms", start.elapsed().as_millis());
        }
        let line = rec.render();
        writeln!(out, "{line}")?;
        if let (Some(p), false) = (&cli.out, matches!(cli.command, Command::Gen { .. } | Command::Reduce { .. })) {
            write_file(p, &format!("{line}\n"))?;
        }
    }
    Ok(outcome.code)
}

pub fn cmd_solve(cli: &Cli, cfg: &SearchConfig, input: &Path, k: usize, l: Option<usize>) -> Result<Outcome> {
    let (text, d) = load(input)?;
    let h = io::parse_phg(&text)?;
    let r = match l {
        Some(l) => cfg.partial_vc_decision(&h, k, l)?,
        None => cfg.max_partial_vc(&h, k)?,
    };
    let mut rec = RunRecord::new("solve", cli.seed, Some(d));
    solve_payload(&mut rec, &r, cli.timing);
    let code = if r.decided == Some(false) { 1 } else { 0 };
    Ok(Outcome { code, record: Some(rec) })
}

pub fn cmd_approx(cli: &Cli, input: &Path, k: usize, method: ApproxMethod) -> Result<Outcome> {
    let (text, d) = load(input)?;
    let h = io::parse_phg(&text)?;
    let r = match method {
        ApproxMethod::Greedy => approx_max_partial_vc(&h, k)?,
        ApproxMethod::DoubleHitting => {
            if h.find_incidence_four_cycle().is_some() {
                greedy_partial_double_hitting(&h, k)?
            } else {
                approx_via_double_hitting(&h, k)?
            }
        }
    };
    let mut rec = RunRecord::new("approx", cli.seed, Some(d));
    rec.push("k", k);
    approx_payload(&mut rec, &r);
    Ok(Outcome { code: 0, record: Some(rec) })
}

pub fn cmd_vcdim(cli: &Cli, cfg: &SearchConfig, input: &Path, approx2: bool) -> Result<Outcome> {
    let (text, d) = load(input)?;
    let h = io::parse_phg(&text)?;
    let mut rec = RunRecord::new("vcdim", cli.seed, Some(d));
    if approx2 {
        let c = approx_max_vc_dimension(&h)?;
        rec.push("method", "approx2");
        rec.push("value", c.dimension);
        rec.push("verified", c.verify(&h));
        rec.push("witness", set_text(&c.shattered));
    } else {
        let r = cfg.vc_dimension(&h)?;
        solve_payload(&mut rec, &r, cli.timing);
    }
    Ok(Outcome { code: 0, record: Some(rec) })
}

pub fn cmd_dt(cli: &Cli, cfg: &SearchConfig, input: &Path) -> Result<Outcome> {
    let (text, d) = load(input)?;
    let h = io::parse_phg(&text)?;
    let r = cfg.min_distinguishing_transversal(&h)?;
    let mut rec = RunRecord::new("dt", cli.seed, Some(d));
    solve_payload(&mut rec, &r, cli.timing);
    Ok(Outcome { code: 0, record: Some(rec) })
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_baker(
    cli: &Cli,
    cfg: &SearchConfig,
    graph: &Path,
    levels: Option<&Path>,
    outer_face: Option<&[usize]>,
    epsilon: f64,
    k: Option<usize>,
    min_dt: bool,
) -> Result<Outcome> {
    let (text, gd) = load(graph)?;
    let g = io::parse_edge(&text)?;
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    let lg = match (levels, outer_face) {
        (Some(p), _) => {
            let lt = read(p)?;
            hasher.update(lt.as_bytes());
            let n = g.n();
            LeveledPlanarGraph::new(g, io::parse_levels(&lt, n)?)?
        }
        (None, Some(face)) => {
            let mut s = VertexSet::new();
            for &v in face {
                if v == 0 || v > g.n() {
                    return Err(Error::input(format!("outer-face vertex {v} is outside 1..{}", g.n())));
                }
                s.insert(v - 1);
            }
            compute_levels(&g, &s)?
        }
        (None, None) => return Err(Error::input("baker needs --levels or --outer-face")),
    };
    let d = if levels.is_some() {
        hasher.finalize().iter().map(|b| format!("{b:02x}")).collect()
    } else {
        gd
    };
    let mut rec = RunRecord::new("baker", cli.seed, Some(d));
    rec.push("epsilon", epsilon);
    if min_dt {
        let b = cfg.baker_min(&lg, epsilon)?;
        rec.push("mode", "min-dt");
        rec.push("lambda", b.lambda);
        rec.push("residue", b.residue);
        rec.push("slabs", b.slabs.len());
        solve_payload(&mut rec, &b.result, cli.timing);
    } else {
        let k = k.ok_or_else(|| Error::input("baker needs -k unless --min-dt is given"))?;
        let b = cfg.baker_max(&lg, k, epsilon)?;
        rec.push("mode", "max");
        rec.push("k", k);
        rec.push("lambda", b.lambda);
        rec.push("residue", b.residue);
        rec.push("dp_value", b.dp_value);
        approx_payload(&mut rec, &b.result);
    }
    Ok(Outcome { code: 0, record: Some(rec) })
}

pub fn cmd_reduce(
    cli: &Cli,
    cfg: &SearchConfig,
    kind: ReductionKind,
    graph: &Path,
    k: usize,
    variant: Option<Variant>,
    verify: bool,
) -> Result<Outcome> {
    let out = cli
        .out
        .as_deref()
        .ok_or_else(|| Error::input("reduce writes files; give --out <instance path>"))?;
    let (text, d) = load(graph)?;
    let g = io::parse_edge(&text)?;
    let cert = match kind {
        ReductionKind::CliqueToVcdim => clique_to_vcdim(&g, k, variant.unwrap_or(Variant::Bipartite))?,
        ReductionKind::IsToDt => is_to_disting_transversal(&g, k)?,
        ReductionKind::MpvcToMpvcd => mpvc_to_mpvcd(&g, k)?,
    };
    let instance = match &cert.target {
        Instance::Graph(t) => io::write_edge(t),
        Instance::Hypergraph(h) => io::write_phg(h),
    };
    write_file(out, &instance)?;
    let cert_path = sidecar(out, "cert");
    write_file(&cert_path, &io::write_certificate(&cert))?;
    let mut rec = RunRecord::new("reduce", cli.seed, Some(d));
    rec.push("kind", cert.kind);
    rec.push("variant", cert.variant.map_or("none", |v| v.tag()));
    rec.push("k", cert.k);
    rec.push("k_prime", cert.k_prime);
    rec.push("target", digest(instance.as_bytes()));
    if verify {
        let v = verify_reduction(&cert, cfg)?;
        rec.push("holds", v.holds);
        rec.push("source_opt", v.source_opt);
        rec.push("target_opt", v.target_opt);
    }
    Ok(Outcome { code: 0, record: Some(rec) })
}

pub enum Family {
    Hypergraph { n: usize, m: usize, density: f64 },
    Graph { n: usize, p: f64 },
    Cubic { n: usize },
    Grid { rows: usize, cols: usize },
}

pub fn cmd_gen(cli: &Cli, family: Family, out: &mut dyn Write) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let (text, levels) = match family {
        Family::Hypergraph { n, m, density } => {
            (io::write_phg(&generate::random_twin_free(&mut rng, n, m, density)?), None)
        }
        Family::Graph { n, p } => (io::write_edge(&generate::random_graph(&mut rng, n, p)?), None),
        Family::Cubic { n } => (io::write_edge(&generate::random_cubic(&mut rng, n)?), None),
        Family::Grid { rows, cols } => {
            let (g, lv) = generate::grid(rows, cols);
            (io::write_edge(&g), Some(io::write_levels(&lv)))
        }
    };
    match &cli.out {
        None => {
            out.write_all(text.as_bytes())?;
            Ok(Outcome { code: 0, record: None })
        }
        Some(p) => {
            write_file(p, &text)?;
            if let Some(lv) = &levels {
                write_file(&sidecar(p, "lvl"), lv)?;
            }
            let mut rec = RunRecord::new("gen", cli.seed, None);
            rec.push("output", digest(text.as_bytes()));
            Ok(Outcome { code: 0, record: Some(rec) })
        }
    }
}

/// One benchmark row; `opt` is `None` when the exact oracle ran out of budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub instance: String,
    pub method: String,
    pub value: usize,
    pub bound: usize,
    /// Rational as `p/q` or an integer.
    pub ratio: String,
    pub opt: Option<usize>,
    pub time_ms: Option<u128>,
}

pub const BENCH_HEADER: &str = "instance,method,value,bound,ratio,opt,time_ms";

impl BenchRow {
    pub fn csv(&self) -> String {
        let dash = |o: Option<String>| o.unwrap_or_else(|| "-".into());
        format!(
            "{},{},{},{},{},{},{}",
            self.instance,
            self.method,
            self.value,
            self.bound,
            self.ratio,
            dash(self.opt.map(|o| o.to_string())),
            dash(self.time_ms.map(|t| t.to_string()))
        )
    }
}

fn exact_or_none<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Capacity(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Rows of a benchmark suite; deterministic in `seed`.
pub fn bench_rows(cfg: &SearchConfig, suite: Suite, count: usize, seed: u64, timing: bool) -> Result<Vec<BenchRow>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    let clock = |t: Instant| timing.then(|| t.elapsed().as_millis());
    match suite {
        Suite::Ratios => {
            for i in 0..count {
                let n = rng.gen_range(5..=10);
                let m = rng.gen_range(n..=2 * n);
                let h = generate::random_twin_free(&mut rng, n, m, 0.4)?;
                for k in 1..=4.min(h.n()) {
                    let t = Instant::now();
                    let a = approx_max_partial_vc(&h, k)?;
                    let time = clock(t);
                    let opt = exact_or_none(cfg.max_partial_vc(&h, k))?.map(|r| r.value);
                    rows.push(BenchRow {
                        instance: format!("twinfree-{i}-n{}-m{}-k{k}", h.n(), h.m()),
                        method: a.method.to_string(),
                        value: a.value,
                        bound: a.upper_bound,
                        ratio: a.claimed_ratio.to_string(),
                        opt,
                        time_ms: time,
                    });
                }
            }
        }
        Suite::DoubleHitting => {
            for i in 0..count {
                let n = rng.gen_range(6..=12);
                let g = generate::random_graph(&mut rng, n, 0.35)?;
                let edges: Vec<Vec<usize>> = g.edges().iter().map(|&(u, v)| vec![u + 1, v + 1]).collect();
                let h = Hypergraph::from_one_based(n, &edges)?;
                for k in 2..=4 {
                    let t = Instant::now();
                    let a = approx_via_double_hitting(&h, k)?;
                    let time = clock(t);
                    let opt = exact_or_none(cfg.max_partial_vc(&h, k))?.map(|r| r.value);
                    rows.push(BenchRow {
                        instance: format!("graph-{i}-n{n}-m{}-k{k}", h.m()),
                        method: a.method.to_string(),
                        value: a.value,
                        bound: a.upper_bound,
                        ratio: a.claimed_ratio.to_string(),
                        opt,
                        time_ms: time,
                    });
                }
            }
        }
        Suite::Vcdim => {
            for i in 0..count {
                let n = rng.gen_range(5..=12);
                let m = rng.gen_range(n..=3 * n);
                let h = generate::random_hypergraph(&mut rng, n, m, 0.5)?;
                let t = Instant::now();
                let c = approx_max_vc_dimension(&h)?;
                let time = clock(t);
                let opt = exact_or_none(cfg.vc_dimension(&h))?.map(|r| r.value);
                rows.push(BenchRow {
                    instance: format!("random-{i}-n{n}-m{m}"),
                    method: "approx2".into(),
                    value: c.dimension,
                    bound: 2 * c.dimension,
                    ratio: "2".into(),
                    opt,
                    time_ms: time,
                });
            }
        }
        Suite::Baker => {
            for side in 3..3 + count.min(3) {
                let (g, lv) = generate::grid(side, side);
                let lg = LeveledPlanarGraph::new(g, lv)?;
                let h = neighborhood_hypergraph(lg.graph());
                for k in 2..=4 {
                    let t = Instant::now();
                    let b = cfg.baker_max(&lg, k, 1.0)?;
                    let time = clock(t);
                    let opt = exact_or_none(cfg.max_partial_vc(&h, k))?.map(|r| r.value);
                    rows.push(BenchRow {
                        instance: format!("grid-{side}x{side}-k{k}"),
                        method: format!("baker-eps1-lambda{}", b.lambda),
                        value: b.result.value,
                        bound: b.result.upper_bound,
                        ratio: "2".into(),
                        opt,
                        time_ms: time,
                    });
                }
            }
        }
    }
    Ok(rows)
}

pub fn cmd_bench(cfg: &SearchConfig, suite: Suite, count: usize, seed: u64, timing: bool) -> Result<String> {
    let mut csv = String::from(BENCH_HEADER);
    csv.push('\n');
    for row in bench_rows(cfg, suite, count, seed, timing)? {
        csv.push_str(&row.csv());
        csv.push('\n');
    }
    Ok(csv)
}

/// Entry point for the binary: parses `args`, runs, and reports errors on
/// stderr. Returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match execute(&cli, &mut lock) {
        Ok(code) => code,
        Err(e) => {
            let _ = lock.flush();
            eprintln!("pvc: {e}");
            e.exit_code()
        }
    }
}
