//! Γ-function constants: ball and sphere volumes, the needle constant r_k,
//! the projection-average constant, and the closed forms they satisfy.
//!
//! Every constant here has two evaluation routes (the defining ratio of
//! ball/sphere volumes and a closed Γ form). [`constants_suite`] runs all of
//! them side by side.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::factorial;

/// Lanczos approximation with g = 7 and nine terms. Relative error is
/// below 1e-14 for real arguments in [0.5, 50].
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

pub fn gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::invalid("x", format!("gamma needs a positive argument, got {x}")));
    }
    Ok(gamma_pos(x))
}

fn gamma_pos(x: f64) -> f64 {
    if x < 0.5 {
        // reflection keeps the series in its accurate range
        return PI / ((PI * x).sin() * gamma_pos(1.0 - x));
    }
    let x = x - 1.0;
    let mut a = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * a
}

fn require(cond: bool, field: &'static str, reason: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::invalid(field, reason))
    }
}

/// Vol S^{k−1} = 2π^{k/2} / Γ(k/2).
pub fn sphere_area(k: usize) -> Result<f64> {
    require(k >= 1, "k", "sphere_area needs k ≥ 1")?;
    Ok(2.0 * PI.powf(k as f64 / 2.0) / gamma_pos(k as f64 / 2.0))
}

/// κ_k = Vol B^k = Vol S^{k−1} / k.
pub fn ball_volume(k: usize) -> Result<f64> {
    require(k >= 1, "k", "ball_volume needs k ≥ 1")?;
    Ok(sphere_area(k)? / k as f64)
}

/// κ_k with κ₀ = 1.
pub(crate) fn kappa(k: usize) -> f64 {
    if k == 0 {
        1.0
    } else {
        2.0 * PI.powf(k as f64 / 2.0) / gamma_pos(k as f64 / 2.0) / k as f64
    }
}

/// r_k = Γ(k/2) / (√π (k−1) Γ((k−1)/2)).
pub fn r_constant(k: usize) -> Result<f64> {
    require(k >= 2, "k", "r_k needs k ≥ 2")?;
    let kf = k as f64;
    Ok(gamma_pos(kf / 2.0) / (PI.sqrt() * (kf - 1.0) * gamma_pos((kf - 1.0) / 2.0)))
}

fn check_pair(d: usize, n: usize) -> Result<()> {
    require(d >= 1, "d", format!("need d ≥ 1, got {d}"))?;
    require(d < n, "d", format!("need d < n, got d = {d}, n = {n}"))
}

/// d!·κ_d / (n!·κ_n), the constant of the segment-frame form.
pub fn theorem_constant(d: usize, n: usize) -> Result<f64> {
    check_pair(d, n)?;
    Ok(factorial(d) * kappa(d) / (factorial(n) * kappa(n)))
}

/// Closed form (2√π)^{−(n−d)} Γ((d+1)/2) / Γ((n+1)/2) of
/// [`theorem_constant`], obtained from the duplication formula.
pub fn theorem_constant_closed(d: usize, n: usize) -> Result<f64> {
    check_pair(d, n)?;
    let base = 1.0 / (2.0 * PI.sqrt());
    Ok(base.powi((n - d) as i32) * gamma_pos((d as f64 + 1.0) / 2.0)
        / gamma_pos((n as f64 + 1.0) / 2.0))
}

/// κ_d / κ_n, the constant multiplying the quermassintegral when the left
/// side averages d-dimensional projections.
pub fn projection_constant(d: usize, n: usize) -> Result<f64> {
    check_pair(d, n)?;
    Ok(kappa(d) / kappa(n))
}

/// Literal product r_{d+1} ⋯ r_n.
pub fn r_product(d: usize, n: usize) -> Result<f64> {
    check_pair(d, n)?;
    (d + 1..=n).map(r_constant).product()
}

/// Γ(n/2)Γ(d) / (π^{(n−d)/2} Γ(d/2) Γ(n)).
pub fn r_product_closed(d: usize, n: usize) -> Result<f64> {
    check_pair(d, n)?;
    let (df, nf) = (d as f64, n as f64);
    Ok(gamma_pos(nf / 2.0) * gamma_pos(df)
        / (PI.powf((nf - df) / 2.0) * gamma_pos(df / 2.0) * gamma_pos(nf)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstantReport {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub value: f64,
    pub alternate_value: f64,
    pub relative_gap: f64,
}

/// Tolerance every shipped identity must meet.
pub const IDENTITY_TOL: f64 = 1e-10;

impl ConstantReport {
    fn new(name: &str, value: f64, alternate_value: f64) -> Self {
        ConstantReport {
            name: name.to_string(),
            k: None,
            d: None,
            n: None,
            value,
            alternate_value,
            relative_gap: relative_gap(value, alternate_value),
        }
    }

    fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    fn with_pair(mut self, d: usize, n: usize) -> Self {
        self.d = Some(d);
        self.n = Some(n);
        self
    }

    pub fn passed(&self) -> bool {
        self.relative_gap <= IDENTITY_TOL
    }
}

pub fn relative_gap(value: f64, alternate: f64) -> f64 {
    (value - alternate).abs() / value.abs().max(1e-300)
}

/// r_k against Vol B^{k−1} / Vol S^{k−1}.
pub fn r_constant_report(k: usize) -> Result<ConstantReport> {
    let value = r_constant(k)?;
    let alt = ball_volume(k - 1)? / sphere_area(k)?;
    Ok(ConstantReport::new("r_k", value, alt).with_k(k))
}

/// d!κ_d/(n!κ_n) against its duplication-formula closed form.
pub fn theorem_constant_report(d: usize, n: usize) -> Result<ConstantReport> {
    Ok(ConstantReport::new(
        "theorem_constant",
        theorem_constant(d, n)?,
        theorem_constant_closed(d, n)?,
    )
    .with_pair(d, n))
}

/// The product r_{d+1}⋯r_n against its Γ closed form. The second report
/// compares the same product with [`theorem_constant`].
pub fn r_product_identity(d: usize, n: usize) -> Result<(ConstantReport, ConstantReport)> {
    require(n <= 30, "n", format!("r_product_identity supports n ≤ 30, got {n}"))?;
    let product = r_product(d, n)?;
    let closed = ConstantReport::new("r_product", product, r_product_closed(d, n)?).with_pair(d, n);
    let vs_theorem =
        ConstantReport::new("r_product_vs_theorem_constant", product, theorem_constant(d, n)?)
            .with_pair(d, n);
    Ok((closed, vs_theorem))
}

/// r_k·κ_k against κ_{k−1}/k.
pub fn sharpness_identity(k: usize) -> Result<ConstantReport> {
    let value = r_constant(k)? * ball_volume(k)?;
    Ok(ConstantReport::new("r_k_kappa_k", value, kappa(k - 1) / k as f64).with_k(k))
}

/// Γ(2z) against (2π)^{−1/2} 2^{2z−1/2} Γ(z) Γ(z+1/2).
pub fn duplication_report(z: f64) -> Result<ConstantReport> {
    let lhs = gamma(2.0 * z)?;
    let rhs = 2f64.powf(2.0 * z - 0.5) * gamma(z)? * gamma(z + 0.5)? / (2.0 * PI).sqrt();
    Ok(ConstantReport::new("gamma_duplication", lhs, rhs))
}

/// All shipped identities up to dimension `max_n`.
pub fn constants_suite(max_n: usize) -> Result<Vec<ConstantReport>> {
    let mut out = Vec::new();
    for z in [0.75, 1.5, 3.7, 10.25] {
        out.push(duplication_report(z)?);
    }
    for k in 2..=max_n {
        out.push(r_constant_report(k)?);
        out.push(sharpness_identity(k)?);
    }
    for n in 2..=max_n {
        for d in 1..n {
            out.push(theorem_constant_report(d, n)?);
            let (closed, vs_theorem) = r_product_identity(d, n)?;
            out.push(closed);
            out.push(vs_theorem);
        }
    }
    Ok(out)
}
