//! Mixed volumes of V-polytopes and certified quermassintegral brackets.
//!
//! `V(A₁,…,A_n)` is evaluated by the polarization identity
//!
//! ```text
//! n!·V(A₁,…,A_n) = Σ_{∅≠S⊆[n]} (−1)^{n−|S|} Vol(Σ_{i∈S} A_i)
//! ```
//!
//! Identical arguments are grouped, so a subset sum is `Σ_g c_g·A_g` over
//! distinct bodies `A_g` with multiplicities `c_g`; each distinct multiset
//! is hulled once. Terms are reduced in a fixed order (subset size, then
//! lexicographic) so the value does not depend on scheduling.

use rayon::prelude::*;
use serde::Serialize;

use crate::body::{ball_bracket, minkowski_sum, project, scale, ConvexBody, FRAME_TOL};
use crate::error::{Error, Result};
use crate::linalg::factorial;
use crate::random::frame_residual;
use crate::special::kappa;

pub const MAX_DIM: usize = 8;
/// Computed values below `−NEGATIVE_TOL · max(1, largest term)` are errors.
pub const NEGATIVE_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MixedVolumeResult {
    pub value: f64,
    pub n: usize,
    pub terms_evaluated: usize,
    pub max_term_volume: f64,
}

#[derive(Clone, Copy, Debug)]
pub struct MixedVolumeOptions {
    /// Replace bodies and partial sums by their extreme points before
    /// forming the next sum. Never changes the result.
    pub prune: bool,
}

impl Default for MixedVolumeOptions {
    fn default() -> Self {
        MixedVolumeOptions { prune: true }
    }
}

pub fn mixed_volume(bodies: &[ConvexBody]) -> Result<MixedVolumeResult> {
    mixed_volume_with(bodies, MixedVolumeOptions::default())
}

/// Subsets of `0..n` as bitmasks, by size and then lexicographically.
fn ordered_subsets(n: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity((1 << n) - 1);
    for size in 1..=n {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(idx.iter().fold(0u32, |m, &i| m | (1 << i)));
            // next combination
            let mut i = size;
            while i > 0 && idx[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    out
}

pub fn mixed_volume_with(bodies: &[ConvexBody], opts: MixedVolumeOptions) -> Result<MixedVolumeResult> {
    let n = bodies.len();
    if n == 0 || n > MAX_DIM {
        return Err(Error::invalid(
            "bodies",
            format!("mixed volume takes 1 to {MAX_DIM} bodies, got {n}"),
        ));
    }
    for b in bodies {
        if b.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                context: "mixed_volume (n bodies in ℝⁿ)",
                expected: n,
                found: b.ambient_dim(),
            });
        }
    }

    // distinct bodies and the group of each argument
    let mut distinct: Vec<ConvexBody> = Vec::new();
    let mut group_of = Vec::with_capacity(n);
    for b in bodies {
        match distinct.iter().position(|d| d.coords() == b.coords()) {
            Some(g) => group_of.push(g),
            None => {
                group_of.push(distinct.len());
                distinct.push(b.clone());
            }
        }
    }
    if opts.prune {
        distinct = distinct
            .iter()
            .map(ConvexBody::reduced)
            .collect::<Result<_>>()?;
    }
    let groups = distinct.len();

    let subsets = ordered_subsets(n);
    let key_of = |mask: u32| -> Vec<u8> {
        let mut counts = vec![0u8; groups];
        for (i, &g) in group_of.iter().enumerate() {
            if mask & (1 << i) != 0 {
                counts[g] += 1;
            }
        }
        counts
    };
    let mut keys: Vec<Vec<u8>> = Vec::new();
    let mut term_key = Vec::with_capacity(subsets.len());
    for &mask in &subsets {
        let key = key_of(mask);
        let pos = match keys.iter().position(|k| *k == key) {
            Some(p) => p,
            None => {
                keys.push(key);
                keys.len() - 1
            }
        };
        term_key.push(pos);
    }

    // Each key's body is its parent (last group removed) plus c·A_g. Keys
    // are processed in rounds by number of distinct groups.
    let distinct_groups = |k: &Vec<u8>| k.iter().filter(|&&c| c > 0).count();
    let mut sums: Vec<Option<ConvexBody>> = vec![None; keys.len()];
    let mut volumes = vec![0.0; keys.len()];
    for round in 1..=groups {
        let batch: Vec<usize> = (0..keys.len())
            .filter(|&i| distinct_groups(&keys[i]) == round)
            .collect();
        let computed: Vec<Result<(ConvexBody, f64)>> = batch
            .par_iter()
            .map(|&i| {
                let key = &keys[i];
                let last = key.iter().rposition(|&c| c > 0).expect("nonempty key");
                let part = scale(&distinct[last], key[last] as f64)?;
                let body = if round == 1 {
                    part
                } else {
                    let mut parent_key = key.clone();
                    parent_key[last] = 0;
                    let parent = keys
                        .iter()
                        .position(|k| *k == parent_key)
                        .and_then(|p| sums[p].as_ref())
                        .expect("parent multiset is itself a subset sum");
                    minkowski_sum(parent, &part)?
                };
                let body = if opts.prune { body.reduced()? } else { body };
                let vol = body.volume()?;
                Ok((body, vol))
            })
            .collect();
        for (&i, res) in batch.iter().zip(computed) {
            let (body, vol) = res?;
            sums[i] = Some(body);
            volumes[i] = vol;
        }
    }

    let mut total = 0.0;
    for (&mask, &k) in subsets.iter().zip(&term_key) {
        let size = mask.count_ones() as usize;
        if (n - size) % 2 == 0 {
            total += volumes[k];
        } else {
            total -= volumes[k];
        }
    }
    let value = total / factorial(n);
    let max_term_volume = volumes.iter().cloned().fold(0.0_f64, f64::max);
    let tolerance = NEGATIVE_TOL * max_term_volume.max(1.0);
    if value < -tolerance {
        return Err(Error::NegativeMixedVolume { value, tolerance });
    }
    Ok(MixedVolumeResult {
        value: value.max(0.0),
        n,
        terms_evaluated: subsets.len(),
        max_term_volume,
    })
}

/// Certified interval for `V(A₁,…,A_d, Bⁿ,…,Bⁿ)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuermassBracket {
    pub lower: f64,
    pub upper: f64,
    pub d: usize,
    pub n: usize,
    pub ball_points: usize,
    pub seed: u64,
    pub outer_scale: f64,
}

impl QuermassBracket {
    pub fn contains(&self, x: f64, rel_tol: f64) -> bool {
        let slack = rel_tol * x.abs().max(1e-300);
        self.lower - slack <= x && x <= self.upper + slack
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

fn check_frame_dims(bodies: &[ConvexBody], n_hint: Option<usize>) -> Result<(usize, usize)> {
    let d = bodies.len();
    let n = n_hint
        .or_else(|| bodies.first().map(ConvexBody::ambient_dim))
        .ok_or_else(|| Error::invalid("bodies", "need at least one body"))?;
    if d == 0 || d >= n {
        return Err(Error::invalid(
            "d",
            format!("need 1 ≤ d < n, got d = {d}, n = {n}"),
        ));
    }
    for b in bodies {
        if b.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                context: "bodies in ℝⁿ",
                expected: n,
                found: b.ambient_dim(),
            });
        }
    }
    Ok((d, n))
}

/// `lower = V(A…, K,…,K)` with `K` the inner ball approximant and
/// `upper = outer_scale^{n−d} · lower`; monotonicity in each ball slot puts
/// the true quermassintegral between them.
pub fn quermass_bracket(bodies: &[ConvexBody], m: usize, seed: u64) -> Result<QuermassBracket> {
    let (d, n) = check_frame_dims(bodies, None)?;
    let ball = ball_bracket(n, m, seed)?;
    let mut args: Vec<ConvexBody> = bodies.to_vec();
    args.extend(std::iter::repeat(ball.inner.clone()).take(n - d));
    let lower = mixed_volume(&args)?.value;
    let upper = ball.outer_scale.powi((n - d) as i32) * lower;
    if lower > upper * (1.0 + 1e-9) {
        return Err(Error::BracketInverted { lower, upper });
    }
    Ok(QuermassBracket {
        lower,
        upper,
        d,
        n,
        ball_points: m,
        seed,
        outer_scale: ball.outer_scale,
    })
}

/// `V(C,…,C, B,…,B)` with `j` copies of the unit cube in ℝⁿ, read off the
/// Steiner polynomial `Vol(C + sB) = Σ_j C(n,j) κ_{n−j} s^{n−j}`: it is κ_{n−j}.
pub fn cube_quermass_reference(n: usize, j: usize) -> Result<f64> {
    if n == 0 || j > n {
        return Err(Error::invalid("j", format!("need 0 ≤ j ≤ n, n ≥ 1; got n = {n}, j = {j}")));
    }
    Ok(kappa(n - j))
}

/// Both sides of `d!·V(P A₁,…,P A_d) = n!·V(A₁,…,A_d,[0,q_{d+1}],…,[0,q_n])`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProjectionIdentity {
    pub projected: f64,
    pub segments: f64,
    pub residual: f64,
}

impl ProjectionIdentity {
    pub fn relative_residual(&self) -> f64 {
        self.residual / self.segments.abs().max(1.0)
    }
}

/// `P` uses the first `d` rows of `q`; the segment bodies use the rest.
pub fn projection_identity(bodies: &[ConvexBody], q: &[Vec<f64>]) -> Result<ProjectionIdentity> {
    let (d, n) = check_frame_dims(bodies, Some(q.len()))?;
    if q.iter().any(|row| row.len() != n) {
        return Err(Error::invalid("q", format!("rows must have length {n}")));
    }
    let residual = frame_residual(q);
    if !(residual <= FRAME_TOL) {
        return Err(Error::NonOrthonormalFrame(residual));
    }
    let projected_bodies = bodies
        .iter()
        .map(|b| project(b, &q[..d]))
        .collect::<Result<Vec<_>>>()?;
    let projected = factorial(d) * mixed_volume(&projected_bodies)?.value;
    let mut args = bodies.to_vec();
    for row in &q[d..] {
        let mut coords = vec![0.0; n];
        coords.extend_from_slice(row);
        args.push(ConvexBody::from_flat(n, coords, "segment")?);
    }
    let segments = factorial(n) * mixed_volume(&args)?.value;
    Ok(ProjectionIdentity {
        projected,
        segments,
        residual: (projected - segments).abs(),
    })
}

pub fn projection_identity_residual(bodies: &[ConvexBody], q: &[Vec<f64>]) -> Result<f64> {
    projection_identity(bodies, q).map(|p| p.residual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::{make_body, BodySpec};

    fn cube(n: usize) -> ConvexBody {
        make_body(&BodySpec::cube(n)).unwrap()
    }

    fn seg(v: Vec<f64>) -> ConvexBody {
        make_body(&BodySpec::segment(v)).unwrap()
    }

    #[test]
    fn subset_order_is_size_major_lexicographic() {
        assert_eq!(ordered_subsets(3), vec![0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111]);
        assert_eq!(ordered_subsets(5).len(), 31);
    }

    #[test]
    fn normalization_on_cube() {
        let c = cube(3);
        let r = mixed_volume(&[c.clone(), c.clone(), c]).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
        assert_eq!(r.terms_evaluated, 7);
    }

    #[test]
    fn coordinate_segments() {
        let v = mixed_volume(&[seg(vec![1.0, 0.0]), seg(vec![0.0, 1.0])]).unwrap();
        assert!((v.value - 0.5).abs() < 1e-15);
        let v = mixed_volume(&[
            seg(vec![1.0, 0.0, 0.0]),
            seg(vec![0.0, 1.0, 0.0]),
            seg(vec![0.0, 0.0, 1.0]),
        ])
        .unwrap();
        assert!((v.value - 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn parallel_segments_have_zero_mixed_volume() {
        let v = mixed_volume(&[seg(vec![1.0, 0.0]), seg(vec![2.0, 0.0])]).unwrap();
        assert_eq!(v.value, 0.0);
    }

    #[test]
    fn pruning_does_not_change_value() {
        let c = cube(3);
        let s = make_body(&BodySpec::simplex(3)).unwrap();
        let x = make_body(&BodySpec::cross_polytope(3)).unwrap();
        let a = mixed_volume_with(&[c.clone(), s.clone(), x.clone()], MixedVolumeOptions { prune: true })
            .unwrap();
        let b = mixed_volume_with(&[c, s, x], MixedVolumeOptions { prune: false }).unwrap();
        assert!((a.value - b.value).abs() < 1e-12 * a.value.max(1.0));
    }

    #[test]
    fn arity_and_dimension_errors() {
        assert!(mixed_volume(&[]).is_err());
        assert!(matches!(
            mixed_volume(&[cube(2)]),
            Err(Error::DimensionMismatch { .. })
        ));
        let c9 = cube(9);
        assert!(mixed_volume(&vec![c9; 9]).is_err());
    }

    #[test]
    fn cube_reference_values() {
        assert_eq!(cube_quermass_reference(3, 3).unwrap(), 1.0);
        assert!((cube_quermass_reference(3, 2).unwrap() - 2.0).abs() < 1e-15);
        assert!(
            (cube_quermass_reference(3, 0).unwrap() - 4.0 * std::f64::consts::PI / 3.0).abs() < 1e-14
        );
        assert!(cube_quermass_reference(3, 4).is_err());
    }

    #[test]
    fn projection_identity_axis_aligned() {
        let q = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        let p = projection_identity(&[cube(2)], &q).unwrap();
        assert!((p.projected - 1.0).abs() < 1e-15);
        assert!((p.segments - 1.0).abs() < 1e-15);
        assert!(p.residual < 1e-14);
    }

    #[test]
    fn projection_identity_rotated_square() {
        let t = std::f64::consts::FRAC_PI_4;
        let q = vec![vec![t.cos(), t.sin()], vec![-t.sin(), t.cos()]];
        let p = projection_identity(&[cube(2)], &q).unwrap();
        assert!((p.projected - 2f64.sqrt()).abs() < 1e-14);
        assert!(p.residual < 1e-7);
    }

    #[test]
    fn projection_identity_rejects_bad_frame() {
        let q = vec![vec![1.0, 0.0], vec![1.0, 1.0]];
        assert!(projection_identity(&[cube(2)], &q).is_err());
        let q3 = vec![vec![1.0, 0.0, 0.0]];
        assert!(projection_identity(&[cube(3)], &q3).is_err());
    }

    #[test]
    fn bracket_for_square_is_tight_from_below() {
        // the forced ±e_i vertices make V(C, K) = 2 exact for the square
        let b = quermass_bracket(&[cube(2)], 64, 0).unwrap();
        assert!((b.lower - 2.0).abs() < 1e-12);
        assert!(b.upper >= b.lower && b.upper < 2.03);
        assert!(quermass_bracket(&[cube(2), cube(2)], 64, 0).is_err());
    }
}
