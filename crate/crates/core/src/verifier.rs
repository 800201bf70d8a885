//! Monte Carlo experiments for the projection inequality, the needle-average
//! lemma and its sharpness instance.
//!
//! Per-sample values are computed in parallel but always reduced in index
//! order, and sample `i` always draws from the same keystream position, so
//! every number in a report is independent of the worker count.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::body::{ball_bracket, make_body, project, BodySpec, ConvexBody};
use crate::error::{Error, Result};
use crate::hull::convex_hull_flat;
use crate::linalg::factorial;
use crate::mixed::{mixed_volume, projection_identity, quermass_bracket, QuermassBracket};
use crate::random::{grassmann_frame, haar_orthogonal, uniform_sphere, RandomStream};
use crate::special::{
    constants_suite, kappa, projection_constant, r_constant, sharpness_identity, theorem_constant,
    IDENTITY_TOL,
};

pub const MIN_SAMPLES: usize = 100;
pub const MAX_ESTIMATOR_DIM: usize = 6;
/// Width of the confidence band used by verdicts.
pub const SIGMAS: f64 = 3.0;
pub const NEEDLE_SIGMAS: f64 = 4.0;
pub const IDENTITY_RESIDUAL_TOL: f64 = 1e-7;
pub const NEEDLE_COUNT: usize = 2000;
pub const NEEDLE_VOLUME_TOL: f64 = 0.05;
pub const SHARPNESS_WIDTH_TOL: f64 = 0.05;
/// Paired draws on which the segment form is evaluated next to the projection form.
pub const SEGMENT_CHECK_SAMPLES: usize = 1000;

pub const THEOREM_STREAM: u64 = 0;
pub const NEEDLE_STREAM: u64 = 1;
pub const SHARPNESS_STREAM: u64 = 2;
pub const CATALOG_STREAM: u64 = 0xCA7;

/// Default sample count for a theorem-type experiment in ambient dimension `n`.
pub fn default_samples(n: usize) -> usize {
    if n <= 3 {
        10_000
    } else {
        1_000
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: usize,
    pub seed: u64,
    pub stream_id: u64,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl MonteCarloEstimate {
    pub fn from_values(values: &[f64], stream: RandomStream, wall_time: Duration) -> Result<Self> {
        let samples = values.len();
        if samples < 2 {
            return Err(Error::invalid("samples", "an estimate needs at least 2 samples"));
        }
        let nf = samples as f64;
        let mean = values.iter().sum::<f64>() / nf;
        let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (nf - 1.0);
        Ok(MonteCarloEstimate {
            mean,
            stderr: var.sqrt() / nf.sqrt(),
            samples,
            seed: stream.seed,
            stream_id: stream.stream_id,
            wall_time,
        })
    }

    /// Estimate of `t · X`.
    pub fn scaled(&self, t: f64) -> MonteCarloEstimate {
        MonteCarloEstimate {
            mean: self.mean * t,
            stderr: self.stderr * t.abs(),
            ..self.clone()
        }
    }
}

/// An estimate together with its per-sample values, in index order.
#[derive(Clone, Debug)]
pub struct Sampled {
    pub estimate: MonteCarloEstimate,
    pub values: Vec<f64>,
}

fn sample_in_order<F>(samples: usize, stream: RandomStream, f: F) -> Result<Sampled>
where
    F: Fn(u64) -> Result<f64> + Sync,
{
    let start = Instant::now();
    let values = (0..samples as u64)
        .into_par_iter()
        .map(&f)
        .collect::<Result<Vec<f64>>>()?;
    let estimate = MonteCarloEstimate::from_values(&values, stream, start.elapsed())?;
    Ok(Sampled { estimate, values })
}

fn check_estimator_args(bodies: &[ConvexBody], samples: usize) -> Result<(usize, usize)> {
    if samples < MIN_SAMPLES {
        return Err(Error::invalid("samples", format!("need at least {MIN_SAMPLES}, got {samples}")));
    }
    let d = bodies.len();
    let n = bodies.first().map(ConvexBody::ambient_dim).ok_or(Error::EmptyInput)?;
    if d == 0 || d >= n || n > MAX_ESTIMATOR_DIM {
        return Err(Error::invalid(
            "d",
            format!("need 1 ≤ d < n ≤ {MAX_ESTIMATOR_DIM}, got d = {d}, n = {n}"),
        ));
    }
    if let Some(b) = bodies.iter().find(|b| b.ambient_dim() != n) {
        return Err(Error::DimensionMismatch {
            context: "bodies in ℝⁿ",
            expected: n,
            found: b.ambient_dim(),
        });
    }
    Ok((d, n))
}

fn with_frame(index: u64, frame: &[Vec<f64>], r: Result<f64>) -> Result<f64> {
    r.map_err(|e| Error::SampleFailed {
        index,
        frame: frame.to_vec(),
        source: Box::new(e),
    })
}

fn projected_value(bodies: &[ConvexBody], frame: &[Vec<f64>]) -> Result<f64> {
    let projected = bodies
        .iter()
        .map(|b| project(b, frame))
        .collect::<Result<Vec<_>>>()?;
    Ok(mixed_volume(&projected)?.value)
}

fn segment_value(bodies: &[ConvexBody], rows: &[Vec<f64>]) -> Result<f64> {
    let n = bodies[0].ambient_dim();
    let mut args = bodies.to_vec();
    for row in rows {
        let mut coords = vec![0.0; n];
        coords.extend_from_slice(row);
        args.push(ConvexBody::from_flat(n, coords, "segment")?);
    }
    Ok(mixed_volume(&args)?.value)
}

/// Mean of `V(P A₁,…,P A_d)` over seeded uniform frames of G(d, n).
pub fn estimate_avg_projected_mv(bodies: &[ConvexBody], samples: usize, stream: RandomStream) -> Result<Sampled> {
    let (d, n) = check_estimator_args(bodies, samples)?;
    sample_in_order(samples, stream, |i| {
        let frame = grassmann_frame(d, n, &mut stream.rng_at(i))?;
        with_frame(i, &frame, projected_value(bodies, &frame))
    })
}

/// Mean of `V(A₁,…,A_d,[0,q_{d+1}],…,[0,q_n])` over seeded Haar draws. With
/// the same stream, draw `i` is the one whose top `d` rows
/// [`estimate_avg_projected_mv`] uses.
pub fn estimate_avg_segment_mv(bodies: &[ConvexBody], samples: usize, stream: RandomStream) -> Result<Sampled> {
    let (d, n) = check_estimator_args(bodies, samples)?;
    sample_in_order(samples, stream, |i| {
        let q = haar_orthogonal(n, &mut stream.rng_at(i))?;
        with_frame(i, &q.rows, segment_value(bodies, &q.rows[d..]))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    BoundHolds,
    BoundViolated,
    Inconclusive,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::BoundHolds => 0,
            Verdict::Inconclusive => 10,
            Verdict::BoundViolated => 20,
        }
    }

    /// `BOUND_HOLDS` becomes `INCONCLUSIVE` when `ok` is false.
    fn unless(self, ok: bool) -> Verdict {
        match (self, ok) {
            (Verdict::BoundHolds, false) => Verdict::Inconclusive,
            (v, _) => v,
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::BoundHolds => "BOUND_HOLDS",
            Verdict::BoundViolated => "BOUND_VIOLATED",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// How a failed check affects the verdict: a failed `Exact` check is a
/// violation; the other kinds only make the run inconclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Exact,
    Statistical,
    Resolution,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub kind: CheckKind,
    pub value: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    /// `|value − expected| ≤ tolerance`.
    pub fn near(name: impl Into<String>, kind: CheckKind, value: f64, expected: f64, tolerance: f64) -> Check {
        Check {
            name: name.into(),
            kind,
            value,
            expected,
            tolerance,
            passed: (value - expected).abs() <= tolerance,
        }
    }

    /// `value ≤ limit`.
    pub fn at_most(name: impl Into<String>, kind: CheckKind, value: f64, limit: f64) -> Check {
        Check {
            name: name.into(),
            kind,
            value,
            expected: limit,
            tolerance: 0.0,
            passed: value <= limit,
        }
    }
}

fn verdict_from_checks(checks: &[Check]) -> Verdict {
    if checks.iter().any(|c| !c.passed && c.kind == CheckKind::Exact) {
        Verdict::BoundViolated
    } else if checks.iter().any(|c| !c.passed) {
        Verdict::Inconclusive
    } else {
        Verdict::BoundHolds
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rhs {
    Bracket(QuermassBracket),
    Exact(f64),
    Interval { lower: f64, upper: f64 },
}

/// Parameters an experiment actually ran with.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct ExperimentParams {
    pub d: Option<usize>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub samples: Option<usize>,
    pub m_ball: Option<usize>,
    pub seed: u64,
    pub stream_id: u64,
    pub bodies: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub claim: String,
    pub params: ExperimentParams,
    pub lhs: Option<MonteCarloEstimate>,
    pub rhs: Option<Rhs>,
    pub constant_used: Option<f64>,
    pub verdict: Verdict,
    pub margin: Option<f64>,
    pub checks: Vec<Check>,
    pub details: BTreeMap<String, Value>,
    #[serde(skip)]
    pub values: Vec<f64>,
}

impl ExperimentReport {
    fn new(claim: &str, params: ExperimentParams) -> Self {
        ExperimentReport {
            claim: claim.to_string(),
            params,
            lhs: None,
            rhs: None,
            constant_used: None,
            verdict: Verdict::BoundHolds,
            margin: None,
            checks: Vec::new(),
            details: BTreeMap::new(),
            values: Vec::new(),
        }
    }

    pub fn all_checks_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details.insert(key.to_string(), json!(value));
    }
}

/// Verdict for `lhs ≤ c·V` when only `V ∈ [lower, upper]` is known.
pub fn bound_verdict(lhs: &MonteCarloEstimate, c_lower: f64, c_upper: f64) -> Verdict {
    let low_end = lhs.mean - SIGMAS * lhs.stderr;
    if low_end > c_upper {
        Verdict::BoundViolated
    } else if low_end > c_lower {
        Verdict::Inconclusive
    } else {
        Verdict::BoundHolds
    }
}

/// `(c·upper + 3σ − lhs) / (c·upper)`.
pub fn bound_margin(lhs: &MonteCarloEstimate, c_upper: f64) -> f64 {
    (c_upper + SIGMAS * lhs.stderr - lhs.mean) / c_upper
}

fn theorem_params(bodies: &[ConvexBody], samples: usize, m_ball: usize, stream: RandomStream) -> ExperimentParams {
    ExperimentParams {
        d: Some(bodies.len()),
        n: bodies.first().map(ConvexBody::ambient_dim),
        samples: Some(samples),
        m_ball: Some(m_ball),
        seed: stream.seed,
        stream_id: stream.stream_id,
        bodies: bodies.iter().map(|b| b.label.clone()).collect(),
        ..Default::default()
    }
}

struct TheoremParts {
    lhs: Sampled,
    bracket: QuermassBracket,
    constant: f64,
    checks: Vec<Check>,
    details: BTreeMap<String, Value>,
}

fn theorem_parts(bodies: &[ConvexBody], samples: usize, m_ball: usize, stream: RandomStream) -> Result<TheoremParts> {
    let (d, n) = check_estimator_args(bodies, samples)?;
    let lhs = estimate_avg_projected_mv(bodies, samples, stream)?;
    let bracket = quermass_bracket(bodies, m_ball, stream.seed)?;
    let constant = projection_constant(d, n)?;
    let sub_constant = theorem_constant(d, n)?;
    let ratio = factorial(n) / factorial(d);

    // segment form on the first paired draws
    let paired = samples.min(SEGMENT_CHECK_SAMPLES);
    let seg = estimate_avg_segment_mv(bodies, paired, stream)?;
    let proj_head = MonteCarloEstimate::from_values(&lhs.values[..paired], stream, Duration::ZERO)?;
    let worst = lhs.values[..paired]
        .iter()
        .zip(&seg.values)
        .map(|(p, s)| (factorial(d) * p - factorial(n) * s).abs() / (factorial(d) * p).abs().max(1.0))
        .fold(0.0_f64, f64::max);
    let seg_scaled = seg.estimate.scaled(ratio);
    let joint = (proj_head.stderr.powi(2) + seg_scaled.stderr.powi(2)).sqrt();

    let mut checks = vec![
        Check::at_most("paired_identity_residual", CheckKind::Exact, worst, IDENTITY_RESIDUAL_TOL),
        Check::near(
            "segment_form_matches_projection_form",
            CheckKind::Statistical,
            seg_scaled.mean,
            proj_head.mean,
            SIGMAS * joint + 1e-12 * proj_head.mean.abs(),
        ),
        Check::near(
            "constants_consistent",
            CheckKind::Exact,
            sub_constant * ratio,
            constant,
            IDENTITY_TOL * constant,
        ),
    ];
    checks.push(Check::at_most(
        "bracket_ordered",
        CheckKind::Exact,
        bracket.lower,
        bracket.upper * (1.0 + 1e-9),
    ));

    let mut details = BTreeMap::new();
    details.insert("segment_form_lhs".into(), json!(seg.estimate));
    details.insert("segment_form_constant".into(), json!(sub_constant));
    details.insert(
        "segment_form_rhs".into(),
        json!({"lower": sub_constant * bracket.lower, "upper": sub_constant * bracket.upper}),
    );
    details.insert("rhs_lower".into(), json!(constant * bracket.lower));
    details.insert("rhs_upper".into(), json!(constant * bracket.upper));
    details.insert("paired_samples".into(), json!(paired));
    Ok(TheoremParts { lhs, bracket, constant, checks, details })
}

/// Projection average against `κ_d/κ_n · V(A₁,…,A_d,Bⁿ,…,Bⁿ)`, with the
/// ball slots bracketed. The segment form runs on paired draws.
pub fn verify_theorem(bodies: &[ConvexBody], samples: usize, m_ball: usize, stream: RandomStream) -> Result<ExperimentReport> {
    let parts = theorem_parts(bodies, samples, m_ball, stream)?;
    let c = parts.constant;
    let est = parts.lhs.estimate.clone();
    let mut report = ExperimentReport::new("theorem", theorem_params(bodies, samples, m_ball, stream));
    report.verdict = bound_verdict(&est, c * parts.bracket.lower, c * parts.bracket.upper)
        .unless(parts.checks.iter().all(|ch| ch.passed));
    report.margin = Some(bound_margin(&est, c * parts.bracket.upper));
    report.constant_used = Some(c);
    report.lhs = Some(est);
    report.rhs = Some(Rhs::Bracket(parts.bracket));
    report.checks = parts.checks;
    report.details = parts.details;
    report.values = parts.lhs.values;
    Ok(report)
}

/// Normalized gap `(c·lower − lhs)/(c·lower)` with its standard error. The
/// verdict never goes beyond `BOUND_HOLDS` / `INCONCLUSIVE`.
pub fn strictness_probe(bodies: &[ConvexBody], samples: usize, m_ball: usize, stream: RandomStream) -> Result<ExperimentReport> {
    let parts = theorem_parts(bodies, samples, m_ball, stream)?;
    let c = parts.constant;
    let est = parts.lhs.estimate.clone();
    let c_lower = c * parts.bracket.lower;
    let c_upper = c * parts.bracket.upper;
    let mut report = ExperimentReport::new("probe", theorem_params(bodies, samples, m_ball, stream));
    report.verdict = match bound_verdict(&est, c_lower, c_upper) {
        Verdict::BoundHolds if parts.checks.iter().all(|ch| ch.passed) => Verdict::BoundHolds,
        _ => Verdict::Inconclusive,
    };
    report.margin = Some(bound_margin(&est, c_upper));
    report.constant_used = Some(c);
    report.details = parts.details;
    if c_lower > 0.0 {
        report.detail("gap", (c_lower - est.mean) / c_lower);
        report.detail("gap_stderr", est.stderr / c_lower);
    }
    report.detail("gap_upper", (c_upper - est.mean) / c_upper);
    report.lhs = Some(est);
    report.rhs = Some(Rhs::Bracket(parts.bracket));
    report.checks = parts.checks;
    report.values = parts.lhs.values;
    Ok(report)
}

/// Per-draw check of `d!·V(P A) = n!·V(A, [0,q_{d+1}], …, [0,q_n])`.
pub fn verify_identity(bodies: &[ConvexBody], samples: usize, stream: RandomStream) -> Result<ExperimentReport> {
    let (d, n) = check_estimator_args(bodies, samples)?;
    let start = Instant::now();
    let pairs = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let q = haar_orthogonal(n, &mut stream.rng_at(i))?;
            projection_identity(bodies, &q.rows).map_err(|e| Error::SampleFailed {
                index: i,
                frame: q.rows.clone(),
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let residuals: Vec<f64> = pairs.iter().map(|p| p.relative_residual()).collect();
    let worst = residuals.iter().cloned().fold(0.0_f64, f64::max);
    let projected: Vec<f64> = pairs.iter().map(|p| p.projected).collect();

    let mut report = ExperimentReport::new(
        "identity",
        ExperimentParams {
            d: Some(d),
            n: Some(n),
            samples: Some(samples),
            seed: stream.seed,
            stream_id: stream.stream_id,
            bodies: bodies.iter().map(|b| b.label.clone()).collect(),
            ..Default::default()
        },
    );
    report.lhs = Some(MonteCarloEstimate::from_values(&projected, stream, start.elapsed())?);
    report.checks.push(Check::at_most(
        "max_relative_residual",
        CheckKind::Exact,
        worst,
        IDENTITY_RESIDUAL_TOL,
    ));
    report.detail("max_relative_residual", worst);
    report.verdict = verdict_from_checks(&report.checks);
    report.values = residuals;
    Ok(report)
}

/// All closed-form identities between the constants for dimensions up to `max_n`.
pub fn verify_constants(max_n: usize) -> Result<ExperimentReport> {
    let suite = constants_suite(max_n)?;
    let mut report = ExperimentReport::new(
        "constants",
        ExperimentParams {
            n: Some(max_n),
            ..Default::default()
        },
    );
    for r in &suite {
        let mut name = r.name.clone();
        for (tag, v) in [("k", r.k), ("d", r.d), ("n", r.n)] {
            if let Some(v) = v {
                name.push_str(&format!(" {tag}={v}"));
            }
        }
        report.checks.push(Check::at_most(name, CheckKind::Exact, r.relative_gap, IDENTITY_TOL));
    }
    let worst = suite.iter().map(|r| r.relative_gap).fold(0.0_f64, f64::max);
    report.detail("max_relative_gap", worst);
    report.detail("identities", suite.len());
    report.verdict = verdict_from_checks(&report.checks);
    Ok(report)
}

fn check_k(k: usize, lo: usize, hi: usize) -> Result<()> {
    if k < lo || k > hi {
        return Err(Error::invalid("k", format!("need {lo} ≤ k ≤ {hi}, got {k}")));
    }
    Ok(())
}

/// Volume of the zonotope `Σ [0, g_i]` in ℝ^k for k ∈ {2, 3}, as the sum of
/// `|det|` over all k-subsets of generators.
pub fn zonotope_volume(k: usize, gens: &[Vec<f64>]) -> Result<f64> {
    let m = gens.len();
    match k {
        2 => Ok((0..m)
            .into_par_iter()
            .map(|i| {
                let a = &gens[i];
                gens[i + 1..].iter().map(|b| (a[0] * b[1] - a[1] * b[0]).abs()).sum::<f64>()
            })
            .collect::<Vec<f64>>()
            .iter()
            .sum()),
        3 => Ok((0..m)
            .into_par_iter()
            .map(|i| {
                let a = &gens[i];
                let mut s = 0.0;
                for j in i + 1..m {
                    let b = &gens[j];
                    let w = [
                        a[1] * b[2] - a[2] * b[1],
                        a[2] * b[0] - a[0] * b[2],
                        a[0] * b[1] - a[1] * b[0],
                    ];
                    for c in &gens[j + 1..] {
                        s += (w[0] * c[0] + w[1] * c[1] + w[2] * c[2]).abs();
                    }
                }
                s
            })
            .collect::<Vec<f64>>()
            .iter()
            .sum()),
        _ => Err(Error::invalid("k", format!("zonotope volume supports k = 2, 3; got {k}"))),
    }
}

/// Zonotope volume through the hull of all `2^m` vertex sums.
fn zonotope_volume_by_hull(k: usize, gens: &[Vec<f64>]) -> Result<f64> {
    let m = gens.len();
    let mut coords = Vec::with_capacity(k << m);
    for mask in 0u32..1 << m {
        let mut p = vec![0.0; k];
        for (i, g) in gens.iter().enumerate() {
            if mask & (1 << i) != 0 {
                p.iter_mut().zip(g).for_each(|(x, y)| *x += y);
            }
        }
        coords.extend(p);
    }
    Ok(convex_hull_flat(k, &coords)?.volume)
}

/// Needle averages on S^{k−1}: the support-function mean `E[max(0, c·e₁)]`
/// against `r_k`, and for `k ≤ 3` the volume of the averaged needle body
/// against `κ_k r_k^k`.
pub fn verify_needle_average(k: usize, samples: usize, stream: RandomStream) -> Result<ExperimentReport> {
    check_k(k, 2, 6)?;
    if samples < MIN_SAMPLES {
        return Err(Error::invalid("samples", format!("need at least {MIN_SAMPLES}, got {samples}")));
    }
    let r = r_constant(k)?;
    let lhs = sample_in_order(samples, stream, |i| {
        let c = uniform_sphere(k, &mut stream.rng_at(i))?;
        Ok(c[0].max(0.0))
    })?;
    let est = lhs.estimate.clone();
    let mut report = ExperimentReport::new(
        "lemma",
        ExperimentParams {
            k: Some(k),
            samples: Some(samples),
            seed: stream.seed,
            stream_id: stream.stream_id,
            ..Default::default()
        },
    );
    report.checks.push(Check::near(
        "support_mean_matches_r_k",
        CheckKind::Statistical,
        est.mean,
        r,
        NEEDLE_SIGMAS * est.stderr,
    ));

    if k <= 3 {
        let zstream = stream.substream(stream.stream_id + 0x100);
        let mut rng = zstream.rng();
        let scale = 1.0 / NEEDLE_COUNT as f64;
        let gens = (0..NEEDLE_COUNT)
            .map(|_| uniform_sphere(k, &mut rng).map(|c| c.into_iter().map(|x| x * scale).collect()))
            .collect::<Result<Vec<Vec<f64>>>>()?;
        let vol = zonotope_volume(k, &gens)?;
        let target = kappa(k) * r.powi(k as i32);
        report.checks.push(Check::near(
            "needle_body_volume",
            CheckKind::Statistical,
            vol,
            target,
            NEEDLE_VOLUME_TOL * target,
        ));
        report.detail("needle_body_volume", vol);
        report.detail("needle_body_target", target);
        report.detail("needles", NEEDLE_COUNT);

        let few: Vec<Vec<f64>> = gens[..10].to_vec();
        let by_det = zonotope_volume(k, &few)?;
        let by_hull = zonotope_volume_by_hull(k, &few)?;
        report.checks.push(Check::near(
            "zonotope_formula_matches_hull",
            CheckKind::Exact,
            by_det,
            by_hull,
            1e-9 * by_hull.max(1e-300),
        ));
    }
    report.rhs = Some(Rhs::Exact(r));
    report.constant_used = Some(r);
    report.verdict = verdict_from_checks(&report.checks);
    report.lhs = Some(est);
    report.values = lhs.values;
    Ok(report)
}

/// `avg_c V(K,…,K,[0,c])` for the inner ball approximant `K` against the
/// exact value `κ_{k−1}/k` of the same average with the ball itself.
pub fn verify_lemma_sharpness(k: usize, m_ball: usize, samples: usize, stream: RandomStream) -> Result<ExperimentReport> {
    check_k(k, 2, 4)?;
    if samples < MIN_SAMPLES {
        return Err(Error::invalid("samples", format!("need at least {MIN_SAMPLES}, got {samples}")));
    }
    let ball = ball_bracket(k, m_ball, stream.seed)?;
    let inner = ball.inner.reduced()?;
    let s = ball.outer_scale;
    let kf = k as f64;

    // V(K,…,K,[0,c]) = Vol_{k−1}(K | c^⊥) / k for a unit vector c
    let lhs = sample_in_order(samples, stream, |i| {
        let q = haar_orthogonal(k, &mut stream.rng_at(i))?;
        let v = project(&inner, &q.rows[1..]).and_then(|p| p.volume()).map(|v| v / kf);
        with_frame(i, &q.rows, v)
    })?;
    let est = lhs.estimate.clone();

    let mut report = ExperimentReport::new(
        "lemma-sharpness",
        ExperimentParams {
            k: Some(k),
            samples: Some(samples),
            m_ball: Some(m_ball),
            seed: stream.seed,
            stream_id: stream.stream_id,
            bodies: vec![inner.label.clone()],
            ..Default::default()
        },
    );

    // projection shortcut against the polarization kernel on two draws
    for i in 0..2u64 {
        let q = haar_orthogonal(k, &mut stream.rng_at(i))?;
        let mut args = vec![inner.clone(); k - 1];
        let mut coords = vec![0.0; k];
        coords.extend_from_slice(&q.rows[0]);
        args.push(ConvexBody::from_flat(k, coords, "needle")?);
        let direct = mixed_volume(&args)?.value;
        report.checks.push(Check::near(
            format!("projection_formula_sample_{i}"),
            CheckKind::Exact,
            lhs.values[i as usize],
            direct,
            1e-9 * direct.abs().max(1.0),
        ));
    }

    let target = kappa(k - 1) / kf;
    let lower = est.mean - SIGMAS * est.stderr;
    let upper = s.powi(k as i32 - 1) * (est.mean + SIGMAS * est.stderr);
    let width = (upper - lower) / target;
    report.checks.push(Check {
        name: "bracket_contains_target".into(),
        kind: CheckKind::Statistical,
        value: target,
        expected: (lower + upper) / 2.0,
        tolerance: (upper - lower) / 2.0,
        passed: lower <= target && target <= upper,
    });
    report.checks.push(Check::at_most(
        "bracket_relative_width",
        CheckKind::Resolution,
        width,
        SHARPNESS_WIDTH_TOL,
    ));

    // the needle average of F is r_k·F(B^k), and F(B^k) = κ_k ∈ [Vol K, s^k Vol K]
    let r = r_constant(k)?;
    let vol = inner.volume()?;
    let f_lower = r * vol;
    let f_upper = r * s.powi(k as i32) * vol;
    report.checks.push(Check {
        name: "matches_r_k_times_ball_bracket".into(),
        kind: CheckKind::Statistical,
        value: est.mean,
        expected: (f_lower + f_upper) / 2.0,
        tolerance: (f_upper - f_lower) / 2.0 + SIGMAS * est.stderr,
        passed: lower <= f_upper && f_lower <= upper,
    });
    let ident = sharpness_identity(k)?;
    report.checks.push(Check::at_most(
        "r_k_kappa_k_identity",
        CheckKind::Exact,
        ident.relative_gap,
        IDENTITY_TOL,
    ));

    report.detail("target", target);
    report.detail("outer_scale", s);
    report.detail("inner_volume", vol);
    report.detail("r_k_bracket", json!({"lower": f_lower, "upper": f_upper}));
    report.rhs = Some(Rhs::Interval { lower, upper });
    report.constant_used = Some(r);
    report.margin = Some((upper - target) / upper);
    report.verdict = verdict_from_checks(&report.checks);
    report.lhs = Some(est);
    report.values = lhs.values;
    Ok(report)
}

/// One tuple of the random inequality catalog.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CatalogCase {
    pub d: usize,
    pub n: usize,
    pub bodies: Vec<BodySpec>,
}

impl CatalogCase {
    pub fn build(&self) -> Result<Vec<ConvexBody>> {
        self.bodies.iter().map(make_body).collect()
    }
}

pub const CATALOG_SIZE: usize = 20;

/// Seeded tuples of random V-polytopes with `2 ≤ n ≤ 4`, `1 ≤ d < n` and 4 to
/// 8 Gaussian vertices per body.
pub fn random_catalog(seed: u64) -> Vec<CatalogCase> {
    let mut rng = RandomStream::new(seed, CATALOG_STREAM).rng();
    (0..CATALOG_SIZE)
        .map(|i| {
            let n = 2 + i % 3;
            let d = rng.random_range(1..n);
            let bodies = (0..d)
                .map(|j| {
                    let m = rng.random_range(4..=8);
                    let pts = (0..m)
                        .map(|_| (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect())
                        .collect();
                    BodySpec::vertices(pts).labelled(format!("rand{i}.{j}"))
                })
                .collect();
            CatalogCase { d, n, bodies }
        })
        .collect()
}
