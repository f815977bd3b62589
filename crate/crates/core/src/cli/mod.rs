//! Command-line front end. [`run`] parses arguments, executes one command
//! and returns the process exit code.

mod instance;

pub use instance::InstanceFile;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{self, BoundResult};
use crate::certificate::CoverCertificate;
use crate::covers;
use crate::generators::{self, Family, GeneratorMetadata, RandomOptions};
use crate::hypergraph::{validate_parts, PartitionedHypergraph};
use crate::solvers::{tau_s_exact, SolveOptions, SolveStatus};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Overrides [`DEFAULT_STEP_BUDGET`] when set.
pub const STEP_BUDGET_ENV: &str = "RYSER_STEP_BUDGET";
pub const DEFAULT_STEP_BUDGET: u64 = 50_000_000;

#[derive(Debug, Parser)]
#[command(name = "ryser", version, about = "Build, check and cover r-partite t-intersecting hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate an instance file.
    Gen(GenArgs),
    /// Check intersection properties of an instance.
    Verify(VerifyArgs),
    /// Exact s-cover number.
    Solve(SolveArgs),
    /// Run a constructive cover algorithm.
    Cover(CoverArgs),
    /// Evaluate the closed-form bounds at (r, t).
    Bounds(BoundsArgs),
    /// Write the asymptotic bound grid as CSV.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenFamily {
    Hrl,
    Tpp,
    Blowup,
    AffineDual,
    Complete,
    Extend,
    Restrict,
    Random,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: GenFamily,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// Affine dimension.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// Number of shared parts added by `extend`.
    #[arg(long)]
    a: Option<usize>,
    /// Source instance for `blowup`, `extend` and `restrict`.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Part sizes for `complete`, comma separated.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    /// Parts kept by `restrict`, comma separated.
    #[arg(long, value_delimiter = ',')]
    keep: Vec<usize>,
    /// Target edge count for `random`.
    #[arg(long)]
    edges: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    part_size: Option<usize>,
    /// Output path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    t: Option<usize>,
    /// Check k-wise t-intersection (needs --t).
    #[arg(long)]
    k: Option<usize>,
    /// Check that all pairwise intersections are equal (to --t if given).
    #[arg(long)]
    strict: bool,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 1)]
    s: usize,
    /// Search node budget.
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads; the printed result does not depend on this.
    #[arg(long)]
    parallel: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    TwoEdge,
    ThreeEdge,
    #[value(alias = "prop29")]
    Pipeline,
    Kwise,
    Trivial,
}

#[derive(Debug, Args)]
struct CoverArgs {
    #[arg(long)]
    input: PathBuf,
    /// Defaults to the smallest pairwise intersection.
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, value_enum, default_value = "auto")]
    method: Method,
    #[arg(long)]
    k: Option<usize>,
    /// Edge indices for `two-edge` and `three-edge`, comma separated.
    #[arg(long, value_delimiter = ',')]
    edges: Vec<usize>,
    /// Node budget for the k-wise subset search.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[arg(long, allow_negative_numbers = true)]
    r: i64,
    #[arg(long, allow_negative_numbers = true)]
    t: i64,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long)]
    s: Option<i64>,
    /// Regular degree.
    #[arg(long)]
    d: Option<i64>,
    /// Minimum degree (with --Delta).
    #[arg(long = "delta")]
    min_degree: Option<i64>,
    /// Maximum degree (with --delta).
    #[arg(long = "Delta")]
    max_degree: Option<i64>,
    #[arg(long)]
    strict: bool,
}

#[derive(Debug, Args)]
struct ReportArgs {
    #[arg(long, default_value_t = 360)]
    steps: i64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Failed(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Failed(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs one command line (including the program name) and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
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
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Solve(a) => cmd_solve(a, out),
        Command::Cover(a) => cmd_cover(a, out),
        Command::Bounds(a) => cmd_bounds(a, out),
        Command::Report(a) => cmd_report(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Failed(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILED
        }
    }
}

fn need<T>(value: Option<T>, flag: &str, what: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--{flag} is required for {what}")))
}

fn emit(out: &mut dyn Write, value: &Value) -> Outcome {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Failed(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(EXIT_OK)
}

fn load(path: &Path) -> Result<(PartitionedHypergraph, Option<GeneratorMetadata>), Failure> {
    let file = InstanceFile::read(path)?;
    let h = file.to_hypergraph()?;
    Ok((h, file.metadata))
}

fn min_intersection(h: &PartitionedHypergraph) -> usize {
    h.min_pairwise_intersection().map(|(t, _)| t).unwrap_or(h.r())
}

fn observed_metadata(family: Family, h: &PartitionedHypergraph) -> GeneratorMetadata {
    GeneratorMetadata::new(family, h.r(), min_intersection(h))
}

fn cmd_gen(a: GenArgs, out: &mut dyn Write) -> Outcome {
    let (h, meta) = match a.family {
        GenFamily::Hrl => generators::h_r_ell(need(a.r, "r", "hrl")?, need(a.ell, "ell", "hrl")?)?,
        GenFamily::Tpp => generators::truncated_projective_plane(need(a.q, "q", "tpp")?)?,
        GenFamily::AffineDual => {
            generators::affine_lines_dual(need(a.q, "q", "affine-dual")?, need(a.n, "n", "affine-dual")?)?
        }
        GenFamily::Complete => {
            if a.parts.is_empty() {
                return Err(Failure::Usage("--parts is required for complete".into()));
            }
            let h = generators::complete_partite(&a.parts)?;
            let meta = observed_metadata(Family::Complete, &h);
            (h, meta)
        }
        GenFamily::Blowup => {
            let t = need(a.t, "t", "blowup")?;
            let (src, src_meta) = load(&need(a.input, "input", "blowup")?)?;
            let h = generators::blowup(&src, t)?;
            let mut meta = observed_metadata(Family::Blowup, &h);
            if let Some(m) = src_meta {
                meta.claimed_tau = m.claimed_tau;
                meta.claimed_regular_degree = m.claimed_regular_degree;
            }
            (h, meta)
        }
        GenFamily::Extend => {
            let extra = need(a.a, "a", "extend")?;
            let (src, _) = load(&need(a.input, "input", "extend")?)?;
            let h = generators::shared_vertex_extension(&src, extra)?;
            let meta = observed_metadata(Family::Extend, &h);
            (h, meta)
        }
        GenFamily::Restrict => {
            if a.keep.is_empty() {
                return Err(Failure::Usage("--keep is required for restrict".into()));
            }
            let (src, _) = load(&need(a.input, "input", "restrict")?)?;
            let h = generators::delete_parts(&src, &a.keep)?;
            let meta = observed_metadata(Family::Restrict, &h);
            (h, meta)
        }
        GenFamily::Random => {
            let opts = RandomOptions { part_size: a.part_size };
            generators::random_rt_graph(
                need(a.r, "r", "random")?,
                need(a.t, "t", "random")?,
                need(a.edges, "edges", "random")?,
                a.seed,
                opts,
            )?
        }
    };
    let file = InstanceFile::from_hypergraph(&h, Some(meta));
    match a.out {
        Some(path) => {
            file.write(&path)?;
            writeln!(out, "wrote {}: r = {}, {} edges", path.display(), h.r(), h.edge_count())?;
        }
        None => out.write_all(file.to_canonical_json().as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn check(property: &str, t: Option<usize>, holds: bool) -> Value {
    json!({ "property": property, "t": t, "holds": holds })
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> Outcome {
    if a.k.is_some() && a.t.is_none() {
        return Err(Failure::Usage("--k needs --t".into()));
    }
    let file = InstanceFile::read(&a.input)?;
    file.check_header()?;
    let violations = validate_parts(&file.part_sizes, &file.edges);
    if !violations.is_empty() {
        let listed: Vec<String> = violations.iter().map(ToString::to_string).collect();
        emit(out, &json!({ "valid": false, "violations": listed, "passed": false }))?;
        return Ok(EXIT_FAILED);
    }
    let h = file.to_hypergraph()?;
    let mut checks = Vec::new();
    if let Some(m) = &file.metadata {
        checks.push(check("metadata-t", Some(m.guaranteed_t), h.is_t_intersecting(m.guaranteed_t)));
        for &(k, t) in &m.guaranteed_kwise {
            checks.push(json!({
                "property": "metadata-kwise", "k": k, "t": t, "holds": kwise_holds(&h, k, t)?,
            }));
        }
    }
    if let Some(t) = a.t {
        checks.push(check("t-intersecting", Some(t), h.is_t_intersecting(t)));
        if let Some(k) = a.k {
            checks.push(json!({
                "property": "kwise", "k": k, "t": t, "holds": kwise_holds(&h, k, t)?,
            }));
        }
    }
    let strict_t = h.is_strictly_intersecting();
    if a.strict {
        let holds = match a.t {
            Some(t) => strict_t == Some(t),
            None => strict_t.is_some(),
        };
        checks.push(check("strict", strict_t, holds));
    }
    let passed = checks.iter().all(|c| c["holds"] == Value::Bool(true));
    let min = (h.edge_count() >= 2).then(|| min_intersection(&h));
    emit(
        out,
        &json!({
            "valid": true,
            "r": h.r(),
            "edges": h.edge_count(),
            "min_intersection": min,
            "strict_t": strict_t,
            "checks": checks,
            "passed": passed,
        }),
    )?;
    Ok(if passed { EXIT_OK } else { EXIT_FAILED })
}

/// Vacuously true with fewer than `k` edges.
fn kwise_holds(h: &PartitionedHypergraph, k: usize, t: usize) -> Result<bool, Failure> {
    if k < 2 {
        return Err(Failure::Usage("--k must be at least 2".into()));
    }
    if h.edge_count() < k {
        return Ok(true);
    }
    Ok(h.kwise_min_intersection_parallel(k)? >= t)
}

fn step_budget(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(STEP_BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{STEP_BUDGET_ENV} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_STEP_BUDGET),
    }
}

fn cmd_solve(a: SolveArgs, out: &mut dyn Write) -> Outcome {
    let (h, _) = load(&a.input)?;
    let budget = step_budget(a.budget)?;
    let threads = a.parallel.unwrap_or(1);
    if threads == 0 {
        return Err(Failure::Usage("--parallel must be at least 1".into()));
    }
    let opts = SolveOptions::with_budget(budget);
    let mut sol = if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Failure::Failed(e.to_string()))?;
        pool.install(|| tau_s_exact(&h, a.s, SolveOptions { parallel: true, ..opts }))?
    } else {
        tau_s_exact(&h, a.s, opts)?
    };
    if threads > 1 && sol.status == SolveStatus::Exact {
        // Replay sequentially up to the known optimum so the witness matches
        // the single-threaded run.
        let replay = tau_s_exact(&h, a.s, SolveOptions { upper_limit: Some(sol.value), ..opts })?;
        if replay.value == sol.value {
            sol.witness = replay.witness;
        }
    }
    let exact = sol.status == SolveStatus::Exact;
    emit(
        out,
        &json!({
            "tau_s": exact.then_some(sol.value),
            "s": a.s,
            "best": sol.value,
            "lower_bound": sol.lower_bound,
            "status": if exact { "exact" } else { "unknown" },
            "witness": sol.witness.vertices,
        }),
    )?;
    Ok(if exact { EXIT_OK } else { EXIT_UNKNOWN })
}

fn edge_args<const N: usize>(given: &[usize], default: impl FnOnce() -> [usize; N]) -> Result<[usize; N], Failure> {
    match given.len() {
        0 => Ok(default()),
        n if n == N => Ok(given.try_into().expect("length checked")),
        n => Err(Failure::Usage(format!("--edges expects {N} indices, got {n}"))),
    }
}

fn cmd_cover(a: CoverArgs, out: &mut dyn Write) -> Outcome {
    let (h, _) = load(&a.input)?;
    if a.method == Method::Kwise && (a.k.is_none() || a.t.is_none()) {
        return Err(Failure::Usage("--method kwise needs --k and --t".into()));
    }
    let t = a.t.unwrap_or_else(|| min_intersection(&h));
    let min_pair = || h.min_pairwise_intersection().map(|(_, p)| p).unwrap_or((0, 1));
    let cert: CoverCertificate = match a.method {
        Method::Auto => covers::general_cover(&h, t)?,
        Method::Trivial => covers::trivial_cover(&h, t)?,
        Method::TwoEdge => {
            let [e1, e2] = edge_args(&a.edges, || {
                let (e1, e2) = min_pair();
                [e1, e2]
            })?;
            covers::two_edge_cover(&h, t, e1, e2)?.0
        }
        Method::ThreeEdge => {
            let [e1, e2, e3] = edge_args(&a.edges, || {
                let (e1, e2) = min_pair();
                let e3 = (0..).find(|e| *e != e1 && *e != e2).expect("unbounded range");
                [e1, e2, e3]
            })?;
            covers::three_edge_cover(&h, t, e1, e2, e3)?.0
        }
        Method::Pipeline => covers::three_edge_pipeline_cover(&h, t)?.certificate,
        Method::Kwise => {
            let k = a.k.expect("checked above");
            let budget = a.budget.or(Some(covers::DEFAULT_KWISE_BUDGET));
            covers::kwise_cover_with_budget(&h, k, t, budget)?
        }
    };
    if !cert.is_valid_for(&h) {
        return Err(Failure::Failed(format!("{} certificate failed re-validation", cert.provenance)));
    }
    emit(
        out,
        &json!({
            "size": cert.size(),
            "vertices": cert.vertices,
            "provenance": cert.provenance,
            "bound": cert.claimed_bound,
            "t": t,
        }),
    )
}

fn bound_error(e: Error) -> Failure {
    match e {
        Error::InvalidArgument(m) | Error::Precondition(m) => Failure::Usage(m),
        other => other.into(),
    }
}

fn cmd_bounds(a: BoundsArgs, out: &mut dyn Write) -> Outcome {
    let (r, t) = (a.r, a.t);
    let lower = bounds::lower_bound(r, t).map_err(bound_error)?;
    let upper = bounds::upper_bound(r, t).map_err(bound_error)?;
    let cases = bounds::upper_bound_cases(r, t).map_err(bound_error)?;
    let status = (t < r).then(|| bounds::conjecture_status(r, t)).transpose().map_err(bound_error)?;
    let mut results: Vec<BoundResult> = vec![lower.clone()];
    results.extend(cases.into_iter().filter(|c| c.applicable));
    let mut report = json!({
        "r": r,
        "t": t,
        "lower": lower.value,
        "upper": upper.value,
        "upper_source": upper.source,
        "status": status.as_ref().map(|s| s.status.to_string()),
        "status_source": status.as_ref().and_then(|s| s.source),
        "not_tight": status.as_ref().map(|s| s.not_tight),
    });
    if let Some(k) = a.k {
        let b = bounds::kwise_bound(r, t, k).map_err(bound_error)?;
        report["kwise"] = json!(b.value);
        results.push(b);
    }
    if let Some(d) = a.d {
        let b = bounds::regular_bound(r, t, d).map_err(bound_error)?;
        report["regular"] = json!(b.value);
        results.push(b);
    }
    match (a.min_degree, a.max_degree) {
        (Some(lo), Some(hi)) => {
            let b = bounds::degree_bound(r, t, lo, hi).map_err(bound_error)?;
            report["degree"] = json!(b.value);
            results.push(b);
        }
        (None, None) => {}
        _ => return Err(Failure::Usage("--delta and --Delta go together".into())),
    }
    if a.strict {
        let b = bounds::strict_bound(r, t).map_err(bound_error)?;
        report["strict"] = json!(b.as_ref().map(|b| b.value));
        results.extend(b);
    }
    if let Some(s) = a.s {
        let bs = bounds::scover_bounds(r, t, s).map_err(bound_error)?;
        report["scover"] = json!(bs);
        results.extend(bs);
    }
    report["bounds"] = json!(results);
    emit(out, &report)
}

fn cmd_report(a: ReportArgs, out: &mut dyn Write) -> Outcome {
    let grid = bounds::asymptotics_grid(a.steps).map_err(bound_error)?;
    let rows = bounds::asymptotics_report(&grid)?;
    let csv = bounds::asymptotics_csv(&rows);
    match a.out {
        Some(path) => {
            std::fs::write(&path, csv).map_err(|e| Failure::Failed(format!("{}: {e}", path.display())))?;
            writeln!(out, "wrote {} rows to {}", rows.len(), path.display())?;
        }
        None => out.write_all(csv.as_bytes())?,
    }
    Ok(EXIT_OK)
}
