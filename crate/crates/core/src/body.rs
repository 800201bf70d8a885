//! Convex bodies as finite vertex lists, the body catalog, Minkowski
//! algebra, projections, and polytopal brackets of the Euclidean ball.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hull::{convex_hull_flat, inradius_at_origin, Hull};
use crate::linalg::dot;
use crate::random::{frame_residual, uniform_sphere, RandomStream};
use crate::special::sphere_area;

/// Frames passed to [`project`] must have `|F Fᵀ − I| ≤ FRAME_TOL`.
pub const FRAME_TOL: f64 = 1e-10;

/// Substream used for the free points of ball approximants.
const BALL_STREAM: u64 = 0xBA11;

#[derive(Clone, Debug)]
struct HullSummary {
    volume: f64,
    affine_dim: usize,
    extreme: Vec<usize>,
}

/// The convex hull of a nonempty vertex list in ℝ^ambient_dim. Duplicate
/// and non-extreme points are allowed.
#[derive(Clone, Debug)]
pub struct ConvexBody {
    dim: usize,
    coords: Vec<f64>,
    pub label: String,
    summary: OnceLock<HullSummary>,
}

impl PartialEq for ConvexBody {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.coords == other.coords && self.label == other.label
    }
}

impl ConvexBody {
    pub fn new(vertices: Vec<Vec<f64>>, label: impl Into<String>) -> Result<Self> {
        let dim = vertices.first().ok_or(Error::EmptyInput)?.len();
        let mut coords = Vec::with_capacity(vertices.len() * dim);
        for v in &vertices {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    context: "body vertices",
                    expected: dim,
                    found: v.len(),
                });
            }
            coords.extend_from_slice(v);
        }
        Self::from_flat(dim, coords, label)
    }

    /// Vertices stored row-major, `dim` coordinates each.
    pub fn from_flat(dim: usize, coords: Vec<f64>, label: impl Into<String>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("dim", "ambient dimension must be at least 1"));
        }
        if coords.is_empty() {
            return Err(Error::EmptyInput);
        }
        if coords.len() % dim != 0 {
            return Err(Error::invalid("points", "coordinate count is not a multiple of dim"));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::invalid("points", "non-finite coordinate"));
        }
        Ok(ConvexBody {
            dim,
            coords,
            label: label.into(),
            summary: OnceLock::new(),
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn vertex(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn vertices(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.dim)
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn to_points(&self) -> Vec<Vec<f64>> {
        self.vertices().map(<[f64]>::to_vec).collect()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn hull(&self) -> Result<Hull> {
        let hull = convex_hull_flat(self.dim, &self.coords)?;
        let _ = self.summary.set(HullSummary {
            volume: hull.volume,
            affine_dim: hull.affine_dim,
            extreme: hull.hull_vertices.clone(),
        });
        Ok(hull)
    }

    fn summary(&self) -> Result<&HullSummary> {
        if let Some(s) = self.summary.get() {
            return Ok(s);
        }
        self.hull()?;
        Ok(self.summary.get().expect("set by hull()"))
    }

    /// Ambient volume of the hull (0 for lower-dimensional bodies).
    pub fn volume(&self) -> Result<f64> {
        Ok(self.summary()?.volume)
    }

    pub fn affine_dim(&self) -> Result<usize> {
        Ok(self.summary()?.affine_dim)
    }

    /// The same body described by its extreme points only.
    pub fn reduced(&self) -> Result<ConvexBody> {
        let s = self.summary()?;
        if s.extreme.len() == self.vertex_count() {
            return Ok(self.clone());
        }
        let mut coords = Vec::with_capacity(s.extreme.len() * self.dim);
        for &i in &s.extreme {
            coords.extend_from_slice(self.vertex(i));
        }
        let body = ConvexBody {
            dim: self.dim,
            coords,
            label: self.label.clone(),
            summary: OnceLock::new(),
        };
        let _ = body.summary.set(HullSummary {
            volume: s.volume,
            affine_dim: s.affine_dim,
            extreme: (0..s.extreme.len()).collect(),
        });
        Ok(body)
    }

    /// Whether every vertex of `other` lies in this body's hull, up to
    /// `tol`. Only meaningful for full-dimensional bodies.
    pub fn contains_body(&self, other: &ConvexBody, tol: f64) -> Result<bool> {
        let hull = self.hull()?;
        if hull.affine_dim < self.dim {
            return Err(Error::DegenerateHull(
                "containment test needs a full-dimensional body".into(),
            ));
        }
        Ok(other.vertices().all(|p| {
            hull.facets
                .iter()
                .all(|f| dot(&f.normal, p) <= f.offset + tol)
        }))
    }
}

#[derive(Serialize)]
struct BodyRepr<'a> {
    dim: usize,
    label: &'a str,
    vertices: Vec<&'a [f64]>,
}

impl Serialize for ConvexBody {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BodyRepr {
            dim: self.dim,
            label: &self.label,
            vertices: self.vertices().collect(),
        }
        .serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BodyKind {
    Vertices,
    Cube,
    Simplex,
    CrossPolytope,
    Segment,
    Point,
    BallInscribed,
}

/// Declarative description of a catalog body, as read from JSON:
/// `{"kind": "...", "dim": n, "points": [[...]], "m": m, "seed": s, "label": "..."}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BodySpec {
    pub kind: BodyKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl BodySpec {
    fn of(kind: BodyKind) -> Self {
        BodySpec {
            kind,
            dim: None,
            points: None,
            m: None,
            seed: None,
            label: None,
        }
    }

    pub fn cube(dim: usize) -> Self {
        BodySpec { dim: Some(dim), ..Self::of(BodyKind::Cube) }
    }

    pub fn simplex(dim: usize) -> Self {
        BodySpec { dim: Some(dim), ..Self::of(BodyKind::Simplex) }
    }

    pub fn cross_polytope(dim: usize) -> Self {
        BodySpec { dim: Some(dim), ..Self::of(BodyKind::CrossPolytope) }
    }

    pub fn segment(end: Vec<f64>) -> Self {
        BodySpec { points: Some(vec![end]), ..Self::of(BodyKind::Segment) }
    }

    pub fn point(p: Vec<f64>) -> Self {
        BodySpec { points: Some(vec![p]), ..Self::of(BodyKind::Point) }
    }

    pub fn vertices(points: Vec<Vec<f64>>) -> Self {
        BodySpec { points: Some(points), ..Self::of(BodyKind::Vertices) }
    }

    pub fn ball_inscribed(dim: usize, m: usize, seed: u64) -> Self {
        BodySpec {
            dim: Some(dim),
            m: Some(m),
            seed: Some(seed),
            ..Self::of(BodyKind::BallInscribed)
        }
    }

    pub fn labelled(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }
}

/// Cap on `dim` for kinds whose vertex count grows exponentially.
const MAX_CUBE_DIM: usize = 16;

fn spec_dim(spec: &BodySpec) -> Result<usize> {
    let dim = spec
        .dim
        .ok_or_else(|| Error::invalid("dim", format!("required for kind {:?}", spec.kind)))?;
    if dim == 0 {
        return Err(Error::invalid("dim", "must be at least 1"));
    }
    Ok(dim)
}

fn spec_points(spec: &BodySpec, exactly_one: bool) -> Result<&Vec<Vec<f64>>> {
    let pts = spec
        .points
        .as_ref()
        .ok_or_else(|| Error::invalid("points", format!("required for kind {:?}", spec.kind)))?;
    if pts.is_empty() {
        return Err(Error::invalid("points", "empty point list"));
    }
    if exactly_one && pts.len() != 1 {
        return Err(Error::invalid("points", "expected exactly one point"));
    }
    let width = pts[0].len();
    if width == 0 || pts.iter().any(|p| p.len() != width) {
        return Err(Error::invalid("points", "points must share a nonzero dimension"));
    }
    if let Some(d) = spec.dim {
        if d != width {
            return Err(Error::invalid(
                "dim",
                format!("dim {d} disagrees with point dimension {width}"),
            ));
        }
    }
    Ok(pts)
}

pub fn make_body(spec: &BodySpec) -> Result<ConvexBody> {
    use BodyKind::*;
    if spec.points.is_some() && !matches!(spec.kind, Vertices | Segment | Point) {
        return Err(Error::invalid(
            "points",
            format!("not accepted for kind {:?}", spec.kind),
        ));
    }
    if spec.m.is_some() && spec.kind != BallInscribed {
        return Err(Error::invalid("m", "only used by ball_inscribed"));
    }
    let (body, default_label) = match spec.kind {
        Cube => {
            let n = spec_dim(spec)?;
            if n > MAX_CUBE_DIM {
                return Err(Error::invalid("dim", format!("cube dimension above {MAX_CUBE_DIM}")));
            }
            let mut coords = Vec::with_capacity(n << n);
            for mask in 0..1usize << n {
                coords.extend((0..n).map(|j| ((mask >> j) & 1) as f64));
            }
            (ConvexBody::from_flat(n, coords, "")?, format!("cube{n}"))
        }
        Simplex => {
            let n = spec_dim(spec)?;
            let mut coords = vec![0.0; n];
            for i in 0..n {
                coords.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            }
            (ConvexBody::from_flat(n, coords, "")?, format!("simplex{n}"))
        }
        CrossPolytope => {
            let n = spec_dim(spec)?;
            let mut coords = Vec::with_capacity(2 * n * n);
            for i in 0..n {
                for s in [1.0, -1.0] {
                    coords.extend((0..n).map(|j| if i == j { s } else { 0.0 }));
                }
            }
            (ConvexBody::from_flat(n, coords, "")?, format!("cross{n}"))
        }
        Segment => {
            let end = &spec_points(spec, true)?[0];
            let n = end.len();
            let mut coords = vec![0.0; n];
            coords.extend_from_slice(end);
            (ConvexBody::from_flat(n, coords, "")?, "segment".to_string())
        }
        Point => {
            let p = &spec_points(spec, true)?[0];
            (ConvexBody::from_flat(p.len(), p.clone(), "")?, "point".to_string())
        }
        Vertices => {
            let pts = spec_points(spec, false)?;
            (ConvexBody::new(pts.clone(), "")?, "vertices".to_string())
        }
        BallInscribed => {
            let k = spec_dim(spec)?;
            let m = spec
                .m
                .ok_or_else(|| Error::invalid("m", "required for ball_inscribed"))?;
            let seed = spec.seed.unwrap_or(0);
            (ball_points(k, m, seed)?, format!("ball{k}:m={m},seed={seed}"))
        }
    };
    Ok(body.with_label(spec.label.clone().unwrap_or(default_label)))
}

fn check_same_dim(a: &ConvexBody, b: &ConvexBody, context: &'static str) -> Result<()> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch {
            context,
            expected: a.dim,
            found: b.dim,
        });
    }
    Ok(())
}

/// All pairwise vertex sums `{a + b}`.
pub fn minkowski_sum(a: &ConvexBody, b: &ConvexBody) -> Result<ConvexBody> {
    check_same_dim(a, b, "minkowski_sum")?;
    let mut coords = Vec::with_capacity(a.coords.len() * b.vertex_count());
    for p in a.vertices() {
        for q in b.vertices() {
            coords.extend(p.iter().zip(q).map(|(x, y)| x + y));
        }
    }
    ConvexBody::from_flat(a.dim, coords, format!("{}+{}", a.label, b.label))
}

/// Same hull as [`minkowski_sum`], computed from extreme points only and
/// reduced again afterwards.
pub fn minkowski_sum_pruned(a: &ConvexBody, b: &ConvexBody) -> Result<ConvexBody> {
    check_same_dim(a, b, "minkowski_sum")?;
    minkowski_sum(&a.reduced()?, &b.reduced()?)?.reduced()
}

pub fn scale(a: &ConvexBody, t: f64) -> Result<ConvexBody> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::invalid("t", format!("scale factor must be finite and ≥ 0, got {t}")));
    }
    let label = format!("{t}*{}", a.label);
    if t == 0.0 {
        return ConvexBody::from_flat(a.dim, vec![0.0; a.dim], label);
    }
    ConvexBody::from_flat(a.dim, a.coords.iter().map(|x| x * t).collect(), label)
}

/// Image of `a` under `x ↦ F x` for a row-orthonormal `d × n` frame.
pub fn project(a: &ConvexBody, frame: &[Vec<f64>]) -> Result<ConvexBody> {
    let d = frame.len();
    if d == 0 || d > a.dim {
        return Err(Error::invalid(
            "frame",
            format!("need 1 ≤ rows ≤ {}, got {d}", a.dim),
        ));
    }
    for row in frame {
        if row.len() != a.dim {
            return Err(Error::DimensionMismatch {
                context: "projection frame",
                expected: a.dim,
                found: row.len(),
            });
        }
    }
    let residual = frame_residual(frame);
    if !(residual <= FRAME_TOL) {
        return Err(Error::NonOrthonormalFrame(residual));
    }
    let mut coords = Vec::with_capacity(a.vertex_count() * d);
    for p in a.vertices() {
        coords.extend(frame.iter().map(|row| dot(row, p)));
    }
    ConvexBody::from_flat(d, coords, format!("P({})", a.label))
}

/// Inner polytope of B^k with vertices on S^{k−1} and a certified factor
/// with `B^k ⊆ outer_scale · inner`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BallBracket {
    pub k: usize,
    pub m: usize,
    pub seed: u64,
    pub inner: ConvexBody,
    pub outer_scale: f64,
}

impl BallBracket {
    pub fn inradius(&self) -> f64 {
        1.0 / self.outer_scale
    }

    pub fn outer(&self) -> Result<ConvexBody> {
        scale(&self.inner, self.outer_scale)
    }
}

pub fn ball_bracket(k: usize, m: usize, seed: u64) -> Result<BallBracket> {
    let inner = ball_points(k, m, seed)?;
    let hull = inner.hull()?;
    let r = inradius_at_origin(&hull)?;
    Ok(BallBracket {
        k,
        m,
        seed,
        inner,
        outer_scale: 1.0 / r,
    })
}

/// `±e₁ … ±e_k` followed by `m − 2k` seeded sphere points, spread out by a
/// short-range repulsion so the hull's inradius approaches 1 quickly in m.
fn ball_points(k: usize, m: usize, seed: u64) -> Result<ConvexBody> {
    if k == 0 {
        return Err(Error::invalid("k", "ball dimension must be at least 1"));
    }
    if m < 2 * k {
        return Err(Error::invalid(
            "m",
            format!("ball approximant in dimension {k} needs m ≥ {}, got {m}", 2 * k),
        ));
    }
    let mut coords = Vec::with_capacity(m * k);
    for i in 0..k {
        for s in [1.0, -1.0] {
            coords.extend((0..k).map(|j| if i == j { s } else { 0.0 }));
        }
    }
    let mut rng = RandomStream::new(seed, BALL_STREAM).rng();
    for _ in 2 * k..m {
        coords.extend(uniform_sphere(k, &mut rng)?);
    }
    if k >= 2 {
        spread_on_sphere(k, &mut coords, 2 * k)?;
    }
    ConvexBody::from_flat(k, coords, format!("ball{k}:m={m},seed={seed}"))
}

/// Jacobi iterations of an inverse-cube repulsion restricted to the sphere.
/// Points before `fixed` do not move. Deterministic for a given input.
fn spread_on_sphere(k: usize, coords: &mut [f64], fixed: usize) -> Result<()> {
    let m = coords.len() / k;
    if m <= fixed {
        return Ok(());
    }
    let spacing = (sphere_area(k)? / m as f64).powf(1.0 / (k - 1) as f64);
    let iterations = ((4.0e7 / (m * m) as f64) as usize).clamp(30, 200);
    let mut force = vec![0.0; (m - fixed) * k];
    for it in 0..iterations {
        force.iter_mut().for_each(|f| *f = 0.0);
        for i in fixed..m {
            let f = &mut force[(i - fixed) * k..(i - fixed + 1) * k];
            let xi = &coords[i * k..(i + 1) * k];
            for j in 0..m {
                if j == i {
                    continue;
                }
                let xj = &coords[j * k..(j + 1) * k];
                let r2: f64 = xi.iter().zip(xj).map(|(a, b)| (a - b) * (a - b)).sum();
                let w = 1.0 / (r2 * r2).max(1e-24);
                f.iter_mut()
                    .zip(xi.iter().zip(xj))
                    .for_each(|(f, (a, b))| *f += w * (a - b));
            }
            let radial = dot(f, xi);
            f.iter_mut().zip(xi).for_each(|(f, x)| *f -= radial * x);
        }
        let fmax = force
            .chunks_exact(k)
            .map(|f| dot(f, f).sqrt())
            .fold(0.0_f64, f64::max);
        if fmax == 0.0 {
            break;
        }
        let step = 0.25 * spacing * (1.0 - it as f64 / iterations as f64) / fmax;
        for i in fixed..m {
            let x = &mut coords[i * k..(i + 1) * k];
            let f = &force[(i - fixed) * k..(i - fixed + 1) * k];
            x.iter_mut().zip(f).for_each(|(x, f)| *x += step * f);
            let len = dot(x, x).sqrt();
            x.iter_mut().for_each(|v| *v /= len);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, PI};

    fn body(spec: BodySpec) -> ConvexBody {
        make_body(&spec).unwrap()
    }

    #[test]
    fn catalog_expansions() {
        let sq = body(BodySpec::cube(2));
        assert_eq!(
            sq.to_points(),
            vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0]]
        );
        let seg = body(BodySpec::segment(vec![0.0, 0.0, 1.0]));
        assert_eq!(seg.to_points(), vec![vec![0.0, 0.0, 0.0], vec![0.0, 0.0, 1.0]]);
        let s3 = body(BodySpec::simplex(3));
        assert_eq!(s3.vertex_count(), 4);
        assert!((s3.volume().unwrap() - 1.0 / 6.0).abs() < 1e-15);
        let x3 = body(BodySpec::cross_polytope(3));
        assert_eq!(x3.vertex_count(), 6);
        let p = body(BodySpec::point(vec![1.0, 2.0]));
        assert_eq!(p.volume().unwrap(), 0.0);
    }

    #[test]
    fn spec_validation() {
        assert!(make_body(&BodySpec::cube(0)).is_err());
        assert!(make_body(&BodySpec::vertices(vec![])).is_err());
        assert!(make_body(&BodySpec::vertices(vec![vec![1.0], vec![1.0, 2.0]])).is_err());
        assert!(make_body(&BodySpec::ball_inscribed(3, 5, 0)).is_err());
        let mut s = BodySpec::cube(2);
        s.points = Some(vec![vec![0.0, 0.0]]);
        assert!(make_body(&s).is_err());
        let mut s = BodySpec::segment(vec![1.0, 0.0]);
        s.dim = Some(3);
        assert!(make_body(&s).is_err());
        let err = make_body(&BodySpec::ball_inscribed(2, 3, 0)).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter { field: "m", .. }));
    }

    #[test]
    fn spec_json_shape() {
        let spec: BodySpec =
            serde_json::from_str(r#"{"kind":"ball_inscribed","dim":3,"m":64,"seed":2}"#).unwrap();
        assert_eq!(spec, BodySpec::ball_inscribed(3, 64, 2));
        assert!(serde_json::from_str::<BodySpec>(r#"{"kind":"cube","dim":2,"bogus":1}"#).is_err());
        assert!(serde_json::from_str::<BodySpec>(r#"{"kind":"torus"}"#).is_err());
    }

    #[test]
    fn ball_body_is_deterministic() {
        let a = body(BodySpec::ball_inscribed(3, 40, 11));
        let b = body(BodySpec::ball_inscribed(3, 40, 11));
        let c = body(BodySpec::ball_inscribed(3, 40, 12));
        assert_eq!(a, b);
        assert_ne!(a.coords(), c.coords());
    }

    #[test]
    fn minkowski_examples() {
        let e1 = body(BodySpec::segment(vec![1.0, 0.0]));
        let e2 = body(BodySpec::segment(vec![0.0, 1.0]));
        assert!((minkowski_sum(&e1, &e2).unwrap().volume().unwrap() - 1.0).abs() < 1e-15);

        let c = body(BodySpec::cube(2));
        let origin = body(BodySpec::point(vec![0.0, 0.0]));
        let same = minkowski_sum(&c, &origin).unwrap();
        assert!((same.volume().unwrap() - 1.0).abs() < 1e-15);
        assert!((minkowski_sum(&c, &c).unwrap().volume().unwrap() - 4.0).abs() < 1e-14);

        let pruned = minkowski_sum_pruned(&c, &c).unwrap();
        assert_eq!(pruned.vertex_count(), 4);
        assert!(minkowski_sum(&c, &body(BodySpec::cube(3))).is_err());
    }

    #[test]
    fn scale_examples() {
        let c = body(BodySpec::cube(3));
        assert_eq!(scale(&c, 1.0).unwrap().coords(), c.coords());
        assert!((scale(&c, 2.0).unwrap().volume().unwrap() - 8.0).abs() < 1e-13);
        let z = scale(&c, 0.0).unwrap();
        assert_eq!(z.to_points(), vec![vec![0.0; 3]]);
        let s = scale(&body(BodySpec::segment(vec![1.0])), 0.5).unwrap();
        assert_eq!(s.volume().unwrap(), 0.5);
        assert!(scale(&c, -1.0).is_err());
        assert!(scale(&c, f64::NAN).is_err());
    }

    #[test]
    fn projection_examples() {
        let c3 = body(BodySpec::cube(3));
        let axes = vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]];
        assert!((project(&c3, &axes).unwrap().volume().unwrap() - 1.0).abs() < 1e-15);

        let seg = body(BodySpec::segment(vec![0.0, 0.0, 1.0]));
        let p = project(&seg, &axes).unwrap();
        assert_eq!(p.affine_dim().unwrap(), 0);

        // width of the unit square in direction θ is |cos θ| + |sin θ|
        let c2 = body(BodySpec::cube(2));
        let row = vec![vec![FRAC_PI_4.cos(), FRAC_PI_4.sin()]];
        let w = project(&c2, &row).unwrap().volume().unwrap();
        assert!((w - 2f64.sqrt()).abs() < 1e-14);

        assert!(matches!(
            project(&c2, &[vec![1.0, 1.0]]),
            Err(Error::NonOrthonormalFrame(_))
        ));
        assert!(project(&c2, &axes).is_err());
    }

    #[test]
    fn ball_bracket_cross_polytope() {
        let b = ball_bracket(2, 4, 99).unwrap();
        assert_eq!(b.inner.vertex_count(), 4);
        assert!((b.outer_scale - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn ball_bracket_properties() {
        let b = ball_bracket(2, 64, 3).unwrap();
        assert!(b.outer_scale >= 1.0);
        assert!(b.outer_scale <= 1.01, "outer_scale {}", b.outer_scale);
        for v in b.inner.vertices() {
            assert!((dot(v, v).sqrt() - 1.0).abs() <= 1e-12);
        }
        for k in 1..=4 {
            let b = ball_bracket(k, 4 * k + 8, 1).unwrap();
            let kappa = crate::special::ball_volume(k).unwrap();
            let vol = b.inner.volume().unwrap();
            assert!(vol <= kappa + 1e-12);
            assert!(kappa <= b.outer_scale.powi(k as i32) * vol + 1e-12);
        }
        let one = ball_bracket(1, 5, 0).unwrap();
        assert_eq!(one.outer_scale, 1.0);
        assert!((PI - ball_bracket(2, 256, 0).unwrap().inner.volume().unwrap()) < 1e-3);
    }

    #[test]
    fn containment() {
        let big = scale(&body(BodySpec::cube(2)), 2.0).unwrap();
        let small = body(BodySpec::cube(2));
        assert!(big.contains_body(&small, 1e-12).unwrap());
        assert!(!small.contains_body(&big, 1e-12).unwrap());
    }
}
