//! Convex hulls, volumes, facet descriptions and inradii of finite point
//! sets in ℝ^k.
//!
//! Full-dimensional inputs go through an incremental beneath–beyond
//! construction over simplicial facets: each step adds the point furthest
//! beyond some facet, removes the facets it sees and cones the horizon to
//! it. Points within [`EXTREME_TOL`] (relative to the bounding-box extent)
//! of a supporting hyperplane are never added. Coplanar simplices are
//! merged afterwards into the reported facets.
//!
//! Lower-dimensional inputs are detected from the singular values of the
//! centred point matrix; their extreme points are found by a hull in the
//! affine span.

use std::collections::HashMap;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{cofactor_normal, det_in_place, dot, factorial, rank};

/// Relative distance below which a point counts as lying on a hyperplane.
pub const EXTREME_TOL: f64 = 1e-10;
/// Singular values below this fraction of the largest are treated as zero.
pub const RANK_TOL: f64 = 1e-10;
const MERGE_TOL: f64 = 1e-9;
const NO_FACE: usize = usize::MAX;

/// Supporting halfspace `normal · x ≤ offset` with a unit outer normal.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Facet {
    pub normal: Vec<f64>,
    pub offset: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Hull {
    pub dim: usize,
    pub affine_dim: usize,
    /// Empty unless `affine_dim == dim`.
    pub facets: Vec<Facet>,
    /// Indices of the extreme input points, ascending.
    pub hull_vertices: Vec<usize>,
    pub volume: f64,
    /// Boundary triangulation: `dim` input indices per simplex.
    #[serde(skip)]
    pub simplices: Vec<Vec<usize>>,
}

impl Hull {
    /// Volume as a sum of cones from `apex` over the boundary triangulation.
    /// Agrees with [`Hull::volume`] for any apex inside the hull.
    pub fn cone_volume_from(&self, coords: &[f64], apex: &[f64]) -> f64 {
        let k = self.dim;
        if self.affine_dim < k {
            return 0.0;
        }
        cone_volume(k, coords, &self.simplices, apex)
    }

    /// Facet list as pretty JSON, for debugging.
    pub fn facets_json(&self) -> String {
        serde_json::to_string_pretty(&self.facets).unwrap_or_default()
    }
}

/// Hull of a list of points.
pub fn convex_hull(points: &[Vec<f64>]) -> Result<Hull> {
    let dim = points.first().ok_or(Error::EmptyInput)?.len();
    let mut coords = Vec::with_capacity(points.len() * dim);
    for p in points {
        if p.len() != dim {
            return Err(Error::DimensionMismatch {
                context: "convex_hull points",
                expected: dim,
                found: p.len(),
            });
        }
        coords.extend_from_slice(p);
    }
    convex_hull_flat(dim, &coords)
}

/// Hull of `coords.len() / dim` points stored row-major.
pub fn convex_hull_flat(dim: usize, coords: &[f64]) -> Result<Hull> {
    if dim == 0 {
        return Err(Error::invalid("dim", "must be at least 1"));
    }
    if coords.is_empty() {
        return Err(Error::EmptyInput);
    }
    if coords.len() % dim != 0 {
        return Err(Error::DimensionMismatch {
            context: "convex_hull coordinates",
            expected: dim,
            found: coords.len() % dim,
        });
    }
    if coords.iter().any(|c| !c.is_finite()) {
        return Err(Error::invalid("points", "non-finite coordinate"));
    }
    let (affine_dim, basis, mean) = affine_span(dim, coords);
    if affine_dim < dim {
        return lower_dimensional(dim, coords, affine_dim, &basis, &mean);
    }
    if dim == 1 {
        return Ok(interval(coords));
    }
    Quickhull::new(dim, coords).run()
}

pub fn volume(points: &[Vec<f64>]) -> Result<f64> {
    convex_hull(points).map(|h| h.volume)
}

pub fn volume_flat(dim: usize, coords: &[f64]) -> Result<f64> {
    convex_hull_flat(dim, coords).map(|h| h.volume)
}

/// Largest `r` with `r·B^k` inside the hull, for a hull that contains the
/// origin in its interior.
pub fn inradius_at_origin(hull: &Hull) -> Result<f64> {
    if hull.affine_dim < hull.dim || hull.facets.is_empty() {
        return Err(Error::DegenerateHull(format!(
            "affine dimension {} < {}",
            hull.affine_dim, hull.dim
        )));
    }
    let r = hull
        .facets
        .iter()
        .map(|f| f.offset)
        .fold(f64::INFINITY, f64::min);
    if r <= 0.0 {
        return Err(Error::OriginNotInterior(r));
    }
    Ok(r)
}

/// Affine rank, orthonormal basis rows (`rank × dim`) of the span, and mean.
fn affine_span(dim: usize, coords: &[f64]) -> (usize, Vec<f64>, Vec<f64>) {
    let n = coords.len() / dim;
    let mut mean = vec![0.0; dim];
    for p in coords.chunks_exact(dim) {
        mean.iter_mut().zip(p).for_each(|(m, x)| *m += x);
    }
    mean.iter_mut().for_each(|m| *m /= n as f64);
    if n == 1 {
        return (0, Vec::new(), mean);
    }
    let centred = DMatrix::from_fn(n, dim, |i, j| coords[i * dim + j] - mean[j]);
    // thin SVD of a tall matrix through its R factor
    let small = if n > dim {
        centred.qr().r()
    } else {
        centred
    };
    let svd = small.svd(false, true);
    let sigma = &svd.singular_values;
    let vt = svd.v_t.expect("v_t requested");
    let smax = sigma.iter().cloned().fold(0.0_f64, f64::max);
    if smax == 0.0 {
        return (0, Vec::new(), mean);
    }
    let mut order: Vec<usize> = (0..sigma.len()).collect();
    order.sort_by(|&a, &b| sigma[b].total_cmp(&sigma[a]));
    let kept: Vec<usize> = order
        .into_iter()
        .filter(|&i| sigma[i] > RANK_TOL * smax)
        .collect();
    let mut basis = Vec::with_capacity(kept.len() * dim);
    for &i in &kept {
        basis.extend((0..dim).map(|j| vt[(i, j)]));
    }
    (kept.len(), basis, mean)
}

fn lower_dimensional(
    dim: usize,
    coords: &[f64],
    affine_dim: usize,
    basis: &[f64],
    mean: &[f64],
) -> Result<Hull> {
    let hull_vertices = if affine_dim == 0 {
        vec![0]
    } else {
        let n = coords.len() / dim;
        let mut local = Vec::with_capacity(n * affine_dim);
        for p in coords.chunks_exact(dim) {
            for b in basis.chunks_exact(dim) {
                local.push(p.iter().zip(b).zip(mean).map(|((x, b), m)| (x - m) * b).sum());
            }
        }
        convex_hull_flat(affine_dim, &local)?.hull_vertices
    };
    Ok(Hull {
        dim,
        affine_dim,
        facets: Vec::new(),
        hull_vertices,
        volume: 0.0,
        simplices: Vec::new(),
    })
}

fn interval(coords: &[f64]) -> Hull {
    let (mut lo, mut hi) = (0, 0);
    for (i, &x) in coords.iter().enumerate() {
        if x < coords[lo] {
            lo = i;
        }
        if x > coords[hi] {
            hi = i;
        }
    }
    Hull {
        dim: 1,
        affine_dim: 1,
        facets: vec![
            Facet {
                normal: vec![-1.0],
                offset: -coords[lo],
            },
            Facet {
                normal: vec![1.0],
                offset: coords[hi],
            },
        ],
        hull_vertices: if lo < hi { vec![lo, hi] } else { vec![hi, lo] },
        volume: coords[hi] - coords[lo],
        simplices: vec![vec![lo], vec![hi]],
    }
}

fn cone_volume(k: usize, coords: &[f64], simplices: &[Vec<usize>], apex: &[f64]) -> f64 {
    let mut m = vec![0.0; k * k];
    let mut total = 0.0;
    for s in simplices {
        for (r, &v) in s.iter().enumerate() {
            let p = &coords[v * k..(v + 1) * k];
            for j in 0..k {
                m[r * k + j] = p[j] - apex[j];
            }
        }
        total += det_in_place(&mut m, k).abs();
    }
    total / factorial(k)
}

struct Face {
    verts: Vec<usize>,
    normal: Vec<f64>,
    offset: f64,
    /// `neighbors[i]` shares the ridge opposite `verts[i]`.
    neighbors: Vec<usize>,
    outside: Vec<usize>,
    alive: bool,
}

struct Quickhull<'a> {
    k: usize,
    coords: &'a [f64],
    eps: f64,
    interior: Vec<f64>,
    faces: Vec<Face>,
}

impl<'a> Quickhull<'a> {
    fn new(k: usize, coords: &'a [f64]) -> Self {
        let mut extent = 0.0_f64;
        for j in 0..k {
            let (lo, hi) = coords
                .iter()
                .skip(j)
                .step_by(k)
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
                    (lo.min(x), hi.max(x))
                });
            extent = extent.max(hi - lo);
        }
        Quickhull {
            k,
            coords,
            eps: EXTREME_TOL * extent,
            interior: vec![0.0; k],
            faces: Vec::new(),
        }
    }

    #[inline]
    fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.k..(i + 1) * self.k]
    }

    #[inline]
    fn dist(&self, face: usize, p: usize) -> f64 {
        let f = &self.faces[face];
        dot(&f.normal, self.point(p)) - f.offset
    }

    fn make_face(&self, verts: Vec<usize>) -> Face {
        let k = self.k;
        let base = self.point(verts[0]);
        let mut rows = Vec::with_capacity((k - 1) * k);
        for &v in &verts[1..] {
            rows.extend(self.point(v).iter().zip(base).map(|(a, b)| a - b));
        }
        let mut normal = vec![0.0; k];
        cofactor_normal(&rows, k, &mut normal);
        let len = dot(&normal, &normal).sqrt();
        normal.iter_mut().for_each(|x| *x /= len);
        let mut offset = dot(&normal, base);
        if dot(&normal, &self.interior) > offset {
            normal.iter_mut().for_each(|x| *x = -*x);
            offset = -offset;
        }
        Face {
            verts,
            normal,
            offset,
            neighbors: vec![NO_FACE; k],
            outside: Vec::new(),
            alive: true,
        }
    }

    /// Greedy simplex: start at the smallest first coordinate, then keep the
    /// point furthest from the affine span of those chosen so far.
    fn initial_simplex(&self) -> Option<Vec<usize>> {
        let k = self.k;
        let n = self.coords.len() / k;
        let first = (0..n)
            .min_by(|&a, &b| self.point(a)[0].total_cmp(&self.point(b)[0]))
            .unwrap();
        let origin = self.point(first).to_vec();
        let mut chosen = vec![first];
        let mut basis: Vec<Vec<f64>> = Vec::new();
        let mut diff = vec![0.0; k];
        for _ in 0..k {
            let mut best = (0usize, -1.0_f64);
            for i in 0..n {
                let p = self.point(i);
                diff.iter_mut()
                    .zip(p.iter().zip(&origin))
                    .for_each(|(d, (a, b))| *d = a - b);
                let mut r2 = dot(&diff, &diff);
                for b in &basis {
                    let c = dot(&diff, b);
                    r2 -= c * c;
                }
                if r2 > best.1 {
                    best = (i, r2);
                }
            }
            if best.1.max(0.0).sqrt() <= self.eps {
                return None;
            }
            let p = self.point(best.0);
            let mut v: Vec<f64> = p.iter().zip(&origin).map(|(a, b)| a - b).collect();
            for _ in 0..2 {
                for b in &basis {
                    let c = dot(&v, b);
                    v.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
                }
            }
            let len = dot(&v, &v).sqrt();
            v.iter_mut().for_each(|x| *x /= len);
            basis.push(v);
            chosen.push(best.0);
        }
        Some(chosen)
    }

    fn run(mut self) -> Result<Hull> {
        let k = self.k;
        let n = self.coords.len() / k;
        let simplex = self
            .initial_simplex()
            .ok_or_else(|| Error::DegenerateHull("no full-dimensional simplex".into()))?;
        for &s in &simplex {
            for j in 0..k {
                self.interior[j] += self.point(s)[j] / (k + 1) as f64;
            }
        }
        for skip in 0..=k {
            let verts: Vec<usize> = (0..=k).filter(|&j| j != skip).map(|j| simplex[j]).collect();
            let mut face = self.make_face(verts);
            // face `j` is opposite simplex vertex `j`
            face.neighbors = (0..=k).filter(|&j| j != skip).collect();
            self.faces.push(face);
        }

        let mut in_simplex = vec![false; n];
        simplex.iter().for_each(|&s| in_simplex[s] = true);
        for p in 0..n {
            if in_simplex[p] {
                continue;
            }
            if let Some(f) = self.best_face(p, 0..=k) {
                self.faces[f].outside.push(p);
            }
        }

        let mut stack: Vec<usize> = (0..=k).filter(|&f| !self.faces[f].outside.is_empty()).collect();
        let mut visible_mark: Vec<u32> = vec![0; self.faces.len()];
        let mut hidden_mark: Vec<u32> = vec![0; self.faces.len()];
        let mut stamp = 0u32;
        let mut visible = Vec::new();
        let mut horizon: Vec<(usize, usize)> = Vec::new();
        let mut ridges: HashMap<Vec<usize>, (usize, usize)> = HashMap::new();

        while let Some(start) = stack.pop() {
            if !self.faces[start].alive || self.faces[start].outside.is_empty() {
                continue;
            }
            let eye = *self.faces[start]
                .outside
                .iter()
                .max_by(|&&a, &&b| self.dist(start, a).total_cmp(&self.dist(start, b)))
                .unwrap();

            stamp += 1;
            visible.clear();
            horizon.clear();
            visible.push(start);
            visible_mark[start] = stamp;
            let mut q = 0;
            while q < visible.len() {
                let f = visible[q];
                q += 1;
                for pos in 0..k {
                    let nb = self.faces[f].neighbors[pos];
                    if visible_mark[nb] == stamp {
                        continue;
                    }
                    if hidden_mark[nb] != stamp && self.dist(nb, eye) > self.eps {
                        visible_mark[nb] = stamp;
                        visible.push(nb);
                    } else {
                        hidden_mark[nb] = stamp;
                        horizon.push((f, pos));
                    }
                }
            }

            let first_new = self.faces.len();
            ridges.clear();
            for &(f, pos) in &horizon {
                let nb = self.faces[f].neighbors[pos];
                let mut verts: Vec<usize> = self.faces[f]
                    .verts
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != pos)
                    .map(|(_, &v)| v)
                    .collect();
                verts.push(eye);
                let mut face = self.make_face(verts);
                let id = self.faces.len();
                face.neighbors[k - 1] = nb;
                let slot = self.faces[nb]
                    .neighbors
                    .iter()
                    .position(|&x| x == f)
                    .ok_or_else(|| Error::DegenerateHull("broken facet adjacency".into()))?;
                self.faces[nb].neighbors[slot] = id;
                for p in 0..k - 1 {
                    let mut key: Vec<usize> = face
                        .verts
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != p)
                        .map(|(_, &v)| v)
                        .collect();
                    key.sort_unstable();
                    match ridges.remove(&key) {
                        Some((other, other_pos)) => {
                            face.neighbors[p] = other;
                            self.faces[other].neighbors[other_pos] = id;
                        }
                        None => {
                            ridges.insert(key, (id, p));
                        }
                    }
                }
                self.faces.push(face);
                visible_mark.push(0);
                hidden_mark.push(0);
            }
            if !ridges.is_empty() {
                return Err(Error::DegenerateHull(
                    "horizon is not a closed ridge cycle".into(),
                ));
            }

            for &f in &visible {
                self.faces[f].alive = false;
                let pts = std::mem::take(&mut self.faces[f].outside);
                for p in pts {
                    if p == eye {
                        continue;
                    }
                    if let Some(nf) = self.best_face(p, first_new..self.faces.len()) {
                        self.faces[nf].outside.push(p);
                    }
                }
            }
            for f in first_new..self.faces.len() {
                if !self.faces[f].outside.is_empty() {
                    stack.push(f);
                }
            }
        }
        Ok(self.finish())
    }

    fn best_face(&self, p: usize, faces: impl Iterator<Item = usize>) -> Option<usize> {
        let mut best = None;
        let mut best_d = self.eps;
        for f in faces {
            let d = self.dist(f, p);
            if d > best_d {
                best_d = d;
                best = Some(f);
            }
        }
        best
    }

    fn finish(self) -> Hull {
        let k = self.k;
        let alive: Vec<usize> = (0..self.faces.len())
            .filter(|&f| self.faces[f].alive)
            .collect();
        let mut local = vec![NO_FACE; self.faces.len()];
        alive.iter().enumerate().for_each(|(i, &f)| local[f] = i);

        // union coplanar neighbouring simplices
        let mut parent: Vec<usize> = (0..alive.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, &f) in alive.iter().enumerate() {
            for &nb in &self.faces[f].neighbors {
                let j = local[nb];
                if j == NO_FACE || j <= i {
                    continue;
                }
                let (a, b) = (&self.faces[f], &self.faces[nb]);
                let close = a
                    .normal
                    .iter()
                    .zip(&b.normal)
                    .all(|(x, y)| (x - y).abs() <= MERGE_TOL)
                    && (a.offset - b.offset).abs() <= 10.0 * self.eps.max(MERGE_TOL);
                if close {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri.max(rj)] = ri.min(rj);
                    }
                }
            }
        }

        let mut group_of = vec![NO_FACE; alive.len()];
        let mut facets: Vec<Facet> = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for i in 0..alive.len() {
            let root = find(&mut parent, i);
            if group_of[root] == NO_FACE {
                group_of[root] = facets.len();
                facets.push(Facet {
                    normal: self.faces[alive[root]].normal.clone(),
                    offset: f64::NEG_INFINITY,
                });
                members.push(Vec::new());
            }
            group_of[i] = group_of[root];
            members[group_of[i]].push(i);
        }
        let mut incident: HashMap<usize, Vec<usize>> = HashMap::new();
        for (g, facet) in facets.iter_mut().enumerate() {
            for &i in &members[g] {
                for &v in &self.faces[alive[i]].verts {
                    facet.offset = facet.offset.max(dot(&facet.normal, self.point(v)));
                    let list = incident.entry(v).or_default();
                    if !list.contains(&g) {
                        list.push(g);
                    }
                }
            }
        }

        let mut hull_vertices: Vec<usize> = incident
            .iter()
            .filter(|(_, groups)| {
                groups.len() >= k && {
                    let rows: Vec<f64> = groups
                        .iter()
                        .flat_map(|&g| facets[g].normal.iter().copied())
                        .collect();
                    rank(&rows, k, MERGE_TOL) == k
                }
            })
            .map(|(&v, _)| v)
            .collect();
        hull_vertices.sort_unstable();

        let simplices: Vec<Vec<usize>> =
            alive.iter().map(|&f| self.faces[f].verts.clone()).collect();
        let mut centroid = vec![0.0; k];
        let mut used: Vec<usize> = incident.keys().copied().collect();
        used.sort_unstable();
        for &v in &used {
            centroid.iter_mut().zip(self.point(v)).for_each(|(c, x)| *c += x);
        }
        centroid.iter_mut().for_each(|c| *c /= used.len() as f64);
        let volume = cone_volume(k, self.coords, &simplices, &centroid);

        Hull {
            dim: k,
            affine_dim: k,
            facets,
            hull_vertices,
            volume,
            simplices,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube(k: usize) -> Vec<Vec<f64>> {
        (0..1usize << k)
            .map(|m| (0..k).map(|j| ((m >> j) & 1) as f64).collect())
            .collect()
    }

    #[test]
    fn unit_cube_has_six_facets() {
        let h = convex_hull(&cube(3)).unwrap();
        assert_eq!(h.facets.len(), 6);
        assert_eq!(h.hull_vertices.len(), 8);
        assert!((h.volume - 1.0).abs() < 1e-12);
        for f in &h.facets {
            let n: f64 = f.normal.iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!((n - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn coplanar_points_are_lower_dimensional() {
        let pts = vec![
            vec![0.0, 0.0, 1.0],
            vec![1.0, 0.0, 1.0],
            vec![0.0, 1.0, 1.0],
            vec![1.0, 1.0, 1.0],
            vec![0.5, 0.5, 1.0],
        ];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.affine_dim, 2);
        assert_eq!(h.volume, 0.0);
        assert!(h.facets.is_empty());
        assert_eq!(h.hull_vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn corner_simplex_volume() {
        let pts = vec![
            vec![0.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
        ];
        // |det(e1, e2, e3)| / 3!
        assert!((volume(&pts).unwrap() - 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn cross_polytope_volume() {
        let mut pts = Vec::new();
        for i in 0..3 {
            for s in [-1.0, 1.0] {
                let mut p = vec![0.0; 3];
                p[i] = s;
                pts.push(p);
            }
        }
        assert!((volume(&pts).unwrap() - 4.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn single_point_and_duplicates() {
        assert_eq!(volume(&[vec![0.3, 0.2]]).unwrap(), 0.0);
        let mut pts = cube(2);
        pts.extend(cube(2));
        pts.push(vec![0.5, 0.5]);
        let h = convex_hull(&pts).unwrap();
        assert!((h.volume - 1.0).abs() < 1e-14);
        assert_eq!(h.hull_vertices.len(), 4);
    }

    #[test]
    fn segment_in_one_dimension() {
        let h = convex_hull(&[vec![0.5], vec![-1.0], vec![2.0]]).unwrap();
        assert_eq!(h.volume, 3.0);
        assert_eq!(h.hull_vertices, vec![1, 2]);
    }

    #[test]
    fn grid_points_keep_only_corners() {
        let mut pts = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    pts.push(vec![x as f64, y as f64, z as f64]);
                }
            }
        }
        let h = convex_hull(&pts).unwrap();
        assert!((h.volume - 8.0).abs() < 1e-12);
        assert_eq!(h.hull_vertices.len(), 8);
        assert_eq!(h.facets.len(), 6);
    }

    #[test]
    fn inradius_of_centred_cube_and_diamond() {
        let c: Vec<Vec<f64>> = cube(3)
            .into_iter()
            .map(|p| p.into_iter().map(|x| x - 0.5).collect())
            .collect();
        let h = convex_hull(&c).unwrap();
        assert!((inradius_at_origin(&h).unwrap() - 0.5).abs() < 1e-14);

        let d = vec![vec![1.0, 0.0], vec![-1.0, 0.0], vec![0.0, 1.0], vec![0.0, -1.0]];
        let h = convex_hull(&d).unwrap();
        assert!((inradius_at_origin(&h).unwrap() - 0.5f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn inradius_rejects_exterior_origin() {
        let h = convex_hull(&cube(2)).unwrap();
        assert!(matches!(
            inradius_at_origin(&h),
            Err(Error::OriginNotInterior(_))
        ));
        let flat = convex_hull(&[vec![0.0, 0.0], vec![1.0, 1.0]]).unwrap();
        assert!(matches!(
            inradius_at_origin(&flat),
            Err(Error::DegenerateHull(_))
        ));
    }

    #[test]
    fn input_errors() {
        assert_eq!(convex_hull(&[]).unwrap_err(), Error::EmptyInput);
        assert!(matches!(
            convex_hull(&[vec![0.0, 1.0], vec![1.0]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
