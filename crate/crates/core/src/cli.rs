//! Command-line front end.
//!
//! Exit codes: 0 success or `BOUND_HOLDS`, 2 invalid input, 3 kernel
//! failure, 10 `INCONCLUSIVE`, 20 `BOUND_VIOLATED`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::body::{make_body, BodySpec, ConvexBody};
use crate::error::Error;
use crate::mixed::{mixed_volume, MixedVolumeResult};
use crate::random::RandomStream;
use crate::verifier::{
    default_samples, strictness_probe, verify_constants, verify_identity, verify_lemma_sharpness,
    verify_needle_average, verify_theorem, ExperimentReport, Rhs, NEEDLE_STREAM, SHARPNESS_STREAM,
    THEOREM_STREAM,
};

pub const SCHEMA_VERSION: u32 = 1;
pub const WORKERS_ENV: &str = "QUERMASS_WORKERS";
pub const DEFAULT_M_BALL: usize = 256;
pub const DEFAULT_CONSTANTS_MAX_N: usize = 10;
pub const DEFAULT_IDENTITY_SAMPLES: usize = 100;
pub const DEFAULT_NEEDLE_SAMPLES: usize = 100_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_KERNEL: i32 = 3;

const BODIES_HELP: &str = "\
Bodies, as one of:
  * comma-separated shortcuts: cubeN, simplexN, crossN, seg:eI (unit segment
    [0, e_I]; needs --n unless another body fixes the dimension), and
    ball:k=K,m=M,seed=S (inscribed ball approximant)
  * an inline JSON array of body specs, e.g.
    '[{\"kind\":\"vertices\",\"points\":[[0,0],[1,0],[0,1]]}]'
  * a path to a file holding such a JSON array
Spec kinds: vertices, cube, simplex, cross_polytope, segment, point, ball_inscribed.";

#[derive(Parser, Debug)]
#[command(name = "quermass", version, about = "Mixed volumes, quermassintegral brackets and Monte Carlo checks of projection inequalities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug, Clone, Default)]
pub struct CommonArgs {
    #[arg(long, global = true, help = "Bodies (see --help)", long_help = BODIES_HELP)]
    pub bodies: Option<String>,
    /// Number of bodies projected (checked against --bodies).
    #[arg(long, global = true)]
    pub d: Option<usize>,
    /// Ambient dimension.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Sphere dimension for the lemma experiments.
    #[arg(long, global = true)]
    pub k: Option<usize>,
    /// Monte Carlo sample count [default: 10000 for n ≤ 3, 1000 above].
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Points in the ball approximant.
    #[arg(long = "m-ball", global = true)]
    pub m_ball: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads [default: $QUERMASS_WORKERS, else all cores]. Never changes results.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Include wall-clock timing in the report (breaks bitwise reproducibility).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Mixed volume V(A₁,…,A_n) of n bodies in ℝⁿ.
    MixedVolume,
    /// Hull volume and facet description of each body.
    Volume,
    /// Run one of the experiments.
    Verify {
        #[arg(value_enum)]
        claim: Claim,
    },
    /// Re-run the configuration embedded in a JSON report.
    Replay { report: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// Projection average against the bracketed quermassintegral.
    Theorem,
    /// Needle averages against r_k.
    Lemma,
    /// Ball-approximant instance of the needle average.
    LemmaSharpness,
    /// Per-draw projection/segment identity.
    Identity,
    /// Closed-form identities between the constants.
    Constants,
    /// Normalized gap between both sides of the inequality.
    Probe,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    MixedVolume,
    Volume,
    Verify(Claim),
}

/// Fully resolved run parameters, embedded in every report. Worker count and
/// output path are deliberately left out so that reports do not depend on them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Task,
    pub bodies: Vec<BodySpec>,
    pub d: Option<usize>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub samples: Option<usize>,
    pub m_ball: Option<usize>,
    pub seed: u64,
    pub format: Format,
    pub timing: bool,
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn invalid(field: &str, reason: impl std::fmt::Display) -> Self {
        CliError {
            code: EXIT_INVALID,
            message: format!("invalid {field}: {reason}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if e.is_validation() { EXIT_INVALID } else { EXIT_KERNEL };
        let mut message = e.to_string();
        if let Error::SampleFailed { index, frame, .. } = &e {
            let _ = write!(message, "\n  replay: sample {index}, frame {frame:?}");
        }
        CliError { code, message }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Expands one shortcut token. `n` is the ambient dimension if known.
fn shortcut(token: &str, n: Option<usize>) -> CliResult<BodySpec> {
    let num = |s: &str| -> CliResult<usize> {
        s.parse()
            .map_err(|_| CliError::invalid("bodies", format!("bad number in shortcut '{token}'")))
    };
    if let Some(rest) = token.strip_prefix("seg:e") {
        let i = num(rest)?;
        let n = n.ok_or_else(|| CliError::invalid("n", format!("needed to expand '{token}'")))?;
        if i == 0 || i > n {
            return Err(CliError::invalid("bodies", format!("'{token}' needs 1 ≤ I ≤ n = {n}")));
        }
        let mut end = vec![0.0; n];
        end[i - 1] = 1.0;
        return Ok(BodySpec::segment(end).labelled(token));
    }
    if let Some(rest) = token.strip_prefix("ball:") {
        let (mut k, mut m, mut seed) = (None, None, 0u64);
        for kv in rest.split(',') {
            let (key, val) = kv
                .split_once('=')
                .ok_or_else(|| CliError::invalid("bodies", format!("expected key=value in '{token}'")))?;
            match key {
                "k" => k = Some(num(val)?),
                "m" => m = Some(num(val)?),
                "seed" => {
                    seed = val
                        .parse()
                        .map_err(|_| CliError::invalid("bodies", format!("bad seed in '{token}'")))?
                }
                _ => return Err(CliError::invalid("bodies", format!("unknown key '{key}' in '{token}'"))),
            }
        }
        let k = k.or(n).ok_or_else(|| CliError::invalid("bodies", format!("'{token}' needs k=")))?;
        return Ok(BodySpec::ball_inscribed(k, m.unwrap_or(DEFAULT_M_BALL), seed));
    }
    for (prefix, make) in [
        ("cube", BodySpec::cube as fn(usize) -> BodySpec),
        ("simplex", BodySpec::simplex),
        ("cross", BodySpec::cross_polytope),
    ] {
        if let Some(rest) = token.strip_prefix(prefix) {
            return Ok(make(num(rest)?));
        }
    }
    Err(CliError::invalid("bodies", format!("unknown shortcut '{token}'")))
}

/// Splits a shortcut list on commas, keeping `key=value` parts with the
/// preceding `ball:` token.
fn split_shortcuts(list: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for part in list.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match out.last_mut() {
            Some(prev) if prev.starts_with("ball:") && part.contains('=') && !part.contains(':') => {
                prev.push(',');
                prev.push_str(part);
            }
            _ => out.push(part.to_string()),
        }
    }
    out
}

fn shortcut_dim(token: &str) -> Option<usize> {
    for prefix in ["cube", "simplex", "cross"] {
        if let Some(rest) = token.strip_prefix(prefix) {
            return rest.parse().ok();
        }
    }
    token
        .strip_prefix("ball:")?
        .split(',')
        .find_map(|kv| kv.strip_prefix("k=")?.parse().ok())
}

fn parse_json_specs(text: &str, source: &str) -> CliResult<Vec<BodySpec>> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| CliError::invalid("bodies", format!("malformed JSON in {source}: {e}")))?;
    let value = match value {
        Value::Array(_) => value,
        single => Value::Array(vec![single]),
    };
    serde_json::from_value(value).map_err(|e| CliError::invalid("bodies", format!("bad body spec in {source}: {e}")))
}

pub fn parse_bodies(arg: &str, n: Option<usize>) -> CliResult<Vec<BodySpec>> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        return parse_json_specs(trimmed, "--bodies");
    }
    let path = std::path::Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::invalid("bodies", format!("cannot read {arg}: {e}")))?;
        return parse_json_specs(&text, arg);
    }
    let tokens = split_shortcuts(arg);
    if tokens.is_empty() {
        return Err(CliError::invalid("bodies", "empty body list"));
    }
    let n = n.or_else(|| tokens.iter().find_map(|t| shortcut_dim(t)));
    tokens.iter().map(|t| shortcut(t, n)).collect()
}

fn build_bodies(specs: &[BodySpec]) -> CliResult<Vec<ConvexBody>> {
    Ok(specs.iter().map(make_body).collect::<crate::Result<Vec<_>>>()?)
}

fn require_bodies(config: &RunConfig) -> CliResult<()> {
    if config.bodies.is_empty() {
        return Err(CliError::invalid("bodies", "required for this command"));
    }
    Ok(())
}

/// Fills defaults and checks `--d`/`--n` against the bodies.
pub fn resolve(task: Task, args: &CommonArgs) -> CliResult<RunConfig> {
    let bodies = match &args.bodies {
        Some(b) => parse_bodies(b, args.n)?,
        None => Vec::new(),
    };
    let mut config = RunConfig {
        command: task,
        bodies,
        d: args.d,
        n: args.n,
        k: args.k,
        samples: args.samples,
        m_ball: args.m_ball,
        seed: args.seed,
        format: args.format,
        timing: args.timing,
    };
    let built = build_bodies(&config.bodies)?;
    if let Some(first) = built.first() {
        let n = first.ambient_dim();
        if let Some(given) = config.n {
            if given != n {
                return Err(CliError::invalid("n", format!("--n {given} but bodies live in ℝ^{n}")));
            }
        }
        config.n = Some(n);
    }
    match task {
        Task::MixedVolume | Task::Volume => {
            require_bodies(&config)?;
            config.d = None;
        }
        Task::Verify(Claim::Theorem | Claim::Probe | Claim::Identity) => {
            require_bodies(&config)?;
            let d = config.bodies.len();
            if let Some(given) = config.d {
                if given != d {
                    return Err(CliError::invalid("d", format!("--d {given} but {d} bodies were given")));
                }
            }
            config.d = Some(d);
            let n = config.n.unwrap_or(0);
            let default = if task == Task::Verify(Claim::Identity) {
                DEFAULT_IDENTITY_SAMPLES
            } else {
                default_samples(n)
            };
            config.samples.get_or_insert(default);
            if task != Task::Verify(Claim::Identity) {
                config.m_ball.get_or_insert(DEFAULT_M_BALL);
            }
        }
        Task::Verify(Claim::Lemma) => {
            config.k.ok_or_else(|| CliError::invalid("k", "required for verify lemma"))?;
            config.samples.get_or_insert(DEFAULT_NEEDLE_SAMPLES);
        }
        Task::Verify(Claim::LemmaSharpness) => {
            let k = config
                .k
                .ok_or_else(|| CliError::invalid("k", "required for verify lemma-sharpness"))?;
            config.samples.get_or_insert(default_samples(k));
            config.m_ball.get_or_insert(DEFAULT_M_BALL);
        }
        Task::Verify(Claim::Constants) => {
            config.n.get_or_insert(DEFAULT_CONSTANTS_MAX_N);
        }
    }
    Ok(config)
}

#[derive(Serialize)]
struct Timing {
    wall_seconds: f64,
}

#[derive(Serialize)]
struct HullReport {
    label: String,
    dim: usize,
    affine_dim: usize,
    volume: f64,
    vertex_count: usize,
    hull_vertices: Vec<usize>,
    facets: Vec<crate::hull::Facet>,
}

enum Outcome {
    Report(Box<ExperimentReport>),
    Mixed(MixedVolumeResult),
    Hulls(Vec<HullReport>),
}

/// Runs a resolved configuration and returns the rendered output and exit code.
pub fn execute(config: &RunConfig) -> CliResult<(String, i32)> {
    let start = Instant::now();
    let bodies = build_bodies(&config.bodies)?;
    let samples = config.samples.unwrap_or(0);
    let m_ball = config.m_ball.unwrap_or(DEFAULT_M_BALL);
    let stream = |id| RandomStream::new(config.seed, id);
    let outcome = match config.command {
        Task::MixedVolume => Outcome::Mixed(mixed_volume(&bodies)?),
        Task::Volume => Outcome::Hulls(
            bodies
                .iter()
                .map(|b| {
                    let h = b.hull()?;
                    Ok(HullReport {
                        label: b.label.clone(),
                        dim: h.dim,
                        affine_dim: h.affine_dim,
                        volume: h.volume,
                        vertex_count: b.vertex_count(),
                        hull_vertices: h.hull_vertices.clone(),
                        facets: h.facets.clone(),
                    })
                })
                .collect::<crate::Result<Vec<_>>>()?,
        ),
        Task::Verify(claim) => Outcome::Report(Box::new(match claim {
            Claim::Theorem => verify_theorem(&bodies, samples, m_ball, stream(THEOREM_STREAM))?,
            Claim::Probe => strictness_probe(&bodies, samples, m_ball, stream(THEOREM_STREAM))?,
            Claim::Identity => verify_identity(&bodies, samples, stream(THEOREM_STREAM))?,
            Claim::Constants => verify_constants(config.n.unwrap_or(DEFAULT_CONSTANTS_MAX_N))?,
            Claim::Lemma => verify_needle_average(config.k.unwrap_or(0), samples, stream(NEEDLE_STREAM))?,
            Claim::LemmaSharpness => {
                verify_lemma_sharpness(config.k.unwrap_or(0), m_ball, samples, stream(SHARPNESS_STREAM))?
            }
        })),
    };
    let timing = config.timing.then(|| Timing {
        wall_seconds: start.elapsed().as_secs_f64(),
    });
    let code = match &outcome {
        Outcome::Report(r) => r.verdict.exit_code(),
        _ => EXIT_OK,
    };
    let text = match config.format {
        Format::Json => render_json(config, &outcome, timing)?,
        Format::Csv => render_csv(&outcome),
        Format::Table => render_table(config, &outcome),
    };
    Ok((text, code))
}

fn render_json(config: &RunConfig, outcome: &Outcome, timing: Option<Timing>) -> CliResult<String> {
    let mut doc = serde_json::Map::new();
    doc.insert("schema_version".into(), SCHEMA_VERSION.into());
    doc.insert("config".into(), to_value(config)?);
    match outcome {
        Outcome::Report(r) => {
            if let Value::Object(fields) = to_value(&**r)? {
                doc.extend(fields);
            }
        }
        Outcome::Mixed(m) => {
            doc.insert("claim".into(), "mixed-volume".into());
            doc.insert("result".into(), to_value(m)?);
        }
        Outcome::Hulls(h) => {
            doc.insert("claim".into(), "volume".into());
            doc.insert("hulls".into(), to_value(h)?);
        }
    }
    doc.insert("timing".into(), to_value(&timing)?);
    let mut s = serde_json::to_string_pretty(&Value::Object(doc)).map_err(|e| CliError {
        code: EXIT_KERNEL,
        message: e.to_string(),
    })?;
    s.push('\n');
    Ok(s)
}

fn to_value<T: Serialize + ?Sized>(v: &T) -> CliResult<Value> {
    serde_json::to_value(v).map_err(|e| CliError {
        code: EXIT_KERNEL,
        message: e.to_string(),
    })
}

fn render_csv(outcome: &Outcome) -> String {
    let mut s = String::from("sample_index,value\n");
    let values: Vec<f64> = match outcome {
        Outcome::Report(r) => r.values.clone(),
        Outcome::Mixed(m) => vec![m.value],
        Outcome::Hulls(h) => h.iter().map(|h| h.volume).collect(),
    };
    for (i, v) in values.iter().enumerate() {
        let _ = writeln!(s, "{i},{v:e}");
    }
    s
}

fn fmt_opt(v: Option<usize>) -> String {
    v.map_or("-".into(), |v| v.to_string())
}

fn render_table(config: &RunConfig, outcome: &Outcome) -> String {
    let mut s = String::new();
    let labels: Vec<String> = config
        .bodies
        .iter()
        .map(|b| make_body(b).map(|b| b.label).unwrap_or_default())
        .collect();
    if !labels.is_empty() {
        let _ = writeln!(s, "{:<14}{}", "bodies", labels.join(", "));
    }
    let _ = writeln!(
        s,
        "{:<14}d={} n={} k={} samples={} m_ball={} seed={}",
        "config",
        fmt_opt(config.d),
        fmt_opt(config.n),
        fmt_opt(config.k),
        fmt_opt(config.samples),
        fmt_opt(config.m_ball),
        config.seed
    );
    let _ = writeln!(s, "{:<14}{}", "workers", rayon::current_num_threads());
    match outcome {
        Outcome::Mixed(m) => {
            let _ = writeln!(s, "{:<14}{:.12}", "mixed volume", m.value);
            let _ = writeln!(s, "{:<14}{}", "terms", m.terms_evaluated);
        }
        Outcome::Hulls(hulls) => {
            for h in hulls {
                let _ = writeln!(
                    s,
                    "{:<14}volume={:.12} affine_dim={} vertices={}/{} facets={}",
                    h.label,
                    h.volume,
                    h.affine_dim,
                    h.hull_vertices.len(),
                    h.vertex_count,
                    h.facets.len()
                );
            }
        }
        Outcome::Report(r) => {
            let _ = writeln!(s, "{:<14}{}", "claim", r.claim);
            if let Some(l) = &r.lhs {
                let _ = writeln!(s, "{:<14}{:.8} ± {:.2e} ({} samples)", "lhs", l.mean, l.stderr, l.samples);
            }
            match (&r.rhs, r.constant_used) {
                (Some(Rhs::Bracket(b)), Some(c)) => {
                    let _ = writeln!(
                        s,
                        "{:<14}[{:.8}, {:.8}] = {:.6} × [{:.8}, {:.8}]",
                        "rhs",
                        c * b.lower,
                        c * b.upper,
                        c,
                        b.lower,
                        b.upper
                    );
                }
                (Some(Rhs::Interval { lower, upper }), _) => {
                    let _ = writeln!(s, "{:<14}[{lower:.8}, {upper:.8}]", "bracket");
                }
                (Some(Rhs::Exact(x)), _) => {
                    let _ = writeln!(s, "{:<14}{x:.8}", "rhs");
                }
                _ => {}
            }
            if let Some(m) = r.margin {
                let _ = writeln!(s, "{:<14}{m:.6}", "margin");
            }
            for (key, v) in &r.details {
                if v.is_number() {
                    let _ = writeln!(s, "  {key} = {v}");
                }
            }
            let failed = r.checks.iter().filter(|c| !c.passed).count();
            let _ = writeln!(s, "{:<14}{} run, {} failed", "checks", r.checks.len(), failed);
            for c in &r.checks {
                if !c.passed || r.checks.len() <= 12 {
                    let _ = writeln!(
                        s,
                        "  {} {:<40} value={:.6e} expected={:.6e} tol={:.1e}",
                        if c.passed { "PASS" } else { "FAIL" },
                        c.name,
                        c.value,
                        c.expected,
                        c.tolerance
                    );
                }
            }
            let _ = writeln!(s, "{:<14}{}", "verdict", r.verdict);
        }
    }
    s
}

fn worker_count(flag: Option<usize>) -> CliResult<usize> {
    let n = match flag {
        Some(n) => n,
        None => match std::env::var(WORKERS_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| CliError::invalid("workers", format!("{WORKERS_ENV}={v} is not a count")))?,
            Err(_) => std::thread::available_parallelism().map_or(1, |n| n.get()),
        },
    };
    if n == 0 {
        return Err(CliError::invalid("workers", "must be at least 1"));
    }
    Ok(n)
}

fn load_replay(path: &std::path::Path) -> CliResult<RunConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::invalid("report", format!("cannot read {}: {e}", path.display())))?;
    let doc: Value =
        serde_json::from_str(&text).map_err(|e| CliError::invalid("report", format!("malformed JSON: {e}")))?;
    let config = doc
        .get("config")
        .cloned()
        .ok_or_else(|| CliError::invalid("report", "no embedded config"))?;
    serde_json::from_value(config).map_err(|e| CliError::invalid("report", format!("bad config: {e}")))
}

fn run_inner(cli: Cli, stderr: &mut dyn Write) -> CliResult<(String, i32)> {
    let workers = worker_count(cli.common.workers)?;
    let config = match &cli.command {
        Command::MixedVolume => resolve(Task::MixedVolume, &cli.common)?,
        Command::Volume => resolve(Task::Volume, &cli.common)?,
        Command::Verify { claim } => resolve(Task::Verify(*claim), &cli.common)?,
        Command::Replay { report } => load_replay(report)?,
    };
    let _ = writeln!(stderr, "workers: {workers}, seed: {}", config.seed);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError {
            code: EXIT_KERNEL,
            message: e.to_string(),
        })?;
    pool.install(|| execute(&config))
}

/// Parses `args` (including the program name), runs, writes to `stdout` or
/// `--out`, and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let out = cli.common.out.clone();
    match run_inner(cli, stderr) {
        Ok((text, code)) => {
            let written = match &out {
                Some(path) => std::fs::write(path, &text),
                None => stdout.write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => code,
                Err(e) => {
                    let _ = writeln!(stderr, "error: cannot write output: {e}");
                    EXIT_INVALID
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortcut_expansion() {
        let b = parse_bodies("cube3,simplex2,cross4", None).unwrap();
        assert_eq!(b, vec![BodySpec::cube(3), BodySpec::simplex(2), BodySpec::cross_polytope(4)]);
        let s = parse_bodies("seg:e1,seg:e2", Some(2)).unwrap();
        assert_eq!(s[1].points, Some(vec![vec![0.0, 1.0]]));
        let mixed = parse_bodies("cube3,seg:e3", None).unwrap();
        assert_eq!(mixed[1].points, Some(vec![vec![0.0, 0.0, 1.0]]));
        let ball = parse_bodies("ball:k=3,m=64,seed=5,cube3", None).unwrap();
        assert_eq!(ball[0], BodySpec::ball_inscribed(3, 64, 5));
        assert_eq!(ball.len(), 2);
    }

    #[test]
    fn shortcut_errors_name_the_field() {
        let e = parse_bodies("seg:e1", None).unwrap_err();
        assert!(e.message.contains("invalid n"));
        assert_eq!(e.code, EXIT_INVALID);
        assert!(parse_bodies("seg:e3", Some(2)).is_err());
        assert!(parse_bodies("blob3", None).unwrap_err().message.contains("bodies"));
        assert!(parse_bodies("[{\"kind\": \"cube\"", None).unwrap_err().message.contains("malformed JSON"));
    }

    #[test]
    fn inline_json_bodies() {
        let b = parse_bodies(r#"[{"kind":"vertices","points":[[0,0],[1,0],[0,1]]}]"#, None).unwrap();
        assert_eq!(b.len(), 1);
        let one = parse_bodies(r#"{"kind":"cube","dim":2}"#, None).unwrap();
        assert_eq!(one, vec![BodySpec::cube(2)]);
        assert!(parse_bodies(r#"[{"kind":"cube","dim":2,"colour":1}]"#, None).is_err());
    }

    #[test]
    fn resolution_fills_defaults() {
        let args = CommonArgs {
            bodies: Some("cube3,cube3".into()),
            ..Default::default()
        };
        let c = resolve(Task::Verify(Claim::Theorem), &args).unwrap();
        assert_eq!((c.d, c.n, c.samples, c.m_ball), (Some(2), Some(3), Some(10_000), Some(256)));
        let bad = CommonArgs {
            d: Some(1),
            ..args.clone()
        };
        assert!(resolve(Task::Verify(Claim::Theorem), &bad).is_err());
        assert!(resolve(Task::Verify(Claim::Lemma), &CommonArgs::default()).is_err());
    }

    #[test]
    fn config_round_trips_through_json() {
        let args = CommonArgs {
            bodies: Some("cube2".into()),
            seed: 9,
            format: Format::Json,
            ..Default::default()
        };
        let c = resolve(Task::Verify(Claim::Probe), &args).unwrap();
        let text = serde_json::to_string(&c).unwrap();
        let back: RunConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(c, back);
    }
}
