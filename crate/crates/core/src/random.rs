//! Seeded sampling of Haar orthogonal matrices, sphere points and
//! Grassmannian frames.
//!
//! Every draw comes from a ChaCha20 keystream fixed by `(seed, stream_id)`.
//! Draw `i` of a stream starts at keystream word `i · 2³²`, so sample `i`
//! sees the same numbers no matter which worker computes it or in what
//! order.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type StreamRng = ChaCha20Rng;

const WORDS_PER_DRAW_SHIFT: u32 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RandomStream {
    pub seed: u64,
    pub stream_id: u64,
}

impl RandomStream {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        RandomStream { seed, stream_id }
    }

    /// Generator positioned at the start of draw `index`.
    pub fn rng_at(&self, index: u64) -> StreamRng {
        let mut rng = ChaCha20Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream_id);
        rng.set_word_pos((index as u128) << WORDS_PER_DRAW_SHIFT);
        rng
    }

    pub fn rng(&self) -> StreamRng {
        self.rng_at(0)
    }

    /// A sibling stream with the same seed.
    pub fn substream(&self, stream_id: u64) -> RandomStream {
        RandomStream {
            seed: self.seed,
            stream_id,
        }
    }
}

/// An orthogonal matrix stored by rows `q₁ … q_n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrthogonalSample {
    pub rows: Vec<Vec<f64>>,
}

impl OrthogonalSample {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// `max |QᵀQ − I|` over all entries.
    pub fn orthogonality_residual(&self) -> f64 {
        frame_residual(&self.rows)
    }

    pub fn determinant(&self) -> f64 {
        let n = self.n();
        DMatrix::from_fn(n, n, |i, j| self.rows[i][j]).determinant()
    }
}

/// `max |F Fᵀ − I|` for a frame given by rows.
pub fn frame_residual(rows: &[Vec<f64>]) -> f64 {
    let mut worst = 0.0_f64;
    for (i, a) in rows.iter().enumerate() {
        for (j, b) in rows.iter().enumerate() {
            let d: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((d - target).abs());
        }
    }
    worst
}

/// Haar-distributed element of O(n): orthonormalize a standard Gaussian
/// matrix by Householder QR, then flip each column of Q by the sign of the
/// matching diagonal entry of R.
pub fn haar_orthogonal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<OrthogonalSample> {
    if n == 0 {
        return Err(Error::invalid("n", "must be at least 1"));
    }
    let g = DMatrix::from_row_iterator(n, n, (0..n * n).map(|_| rng.sample::<f64, _>(StandardNormal)));
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    let rows = (0..n).map(|i| q.row(i).iter().copied().collect()).collect();
    Ok(OrthogonalSample { rows })
}

/// Uniform point on S^{k−1} (normalized Gaussian vector).
pub fn uniform_sphere<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Result<Vec<f64>> {
    if k == 0 {
        return Err(Error::invalid("k", "must be at least 1"));
    }
    loop {
        let v: Vec<f64> = (0..k).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let len = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if len > 0.0 {
            return Ok(v.into_iter().map(|x| x / len).collect());
        }
    }
}

/// First `d` rows of a Haar orthogonal matrix: a frame whose row space is
/// uniform on G(d, n). Consumes the same draws as [`haar_orthogonal`].
pub fn grassmann_frame<R: Rng + ?Sized>(d: usize, n: usize, rng: &mut R) -> Result<Vec<Vec<f64>>> {
    if d == 0 || d > n {
        return Err(Error::invalid("d", format!("need 1 ≤ d ≤ n, got d = {d}, n = {n}")));
    }
    let mut q = haar_orthogonal(n, rng)?;
    q.rows.truncate(d);
    Ok(q.rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_streams_are_bitwise_identical() {
        let s = RandomStream::new(42, 3);
        let a = haar_orthogonal(5, &mut s.rng_at(17)).unwrap();
        let b = haar_orthogonal(5, &mut s.rng_at(17)).unwrap();
        assert_eq!(a, b);
        let c = haar_orthogonal(5, &mut s.rng_at(18)).unwrap();
        assert_ne!(a, c);
        let d = haar_orthogonal(5, &mut s.substream(4).rng_at(17)).unwrap();
        assert_ne!(a, d);
    }

    #[test]
    fn rows_orthonormal_at_n6() {
        let s = RandomStream::new(9, 0);
        for i in 0..100 {
            let q = haar_orthogonal(6, &mut s.rng_at(i)).unwrap();
            assert!(q.orthogonality_residual() <= 1e-12);
            assert!((q.determinant().abs() - 1.0).abs() <= 1e-10);
        }
    }

    #[test]
    fn frame_is_prefix_of_orthogonal_sample() {
        let s = RandomStream::new(1, 1);
        let q = haar_orthogonal(4, &mut s.rng_at(5)).unwrap();
        let f = grassmann_frame(2, 4, &mut s.rng_at(5)).unwrap();
        assert_eq!(&q.rows[..2], &f[..]);
        let full = grassmann_frame(4, 4, &mut s.rng_at(5)).unwrap();
        assert_eq!(q.rows, full);
    }

    #[test]
    fn sphere_points_are_unit() {
        let s = RandomStream::new(5, 0);
        let mut rng = s.rng();
        for k in 1..7 {
            let v = uniform_sphere(k, &mut rng).unwrap();
            let n: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!((n - 1.0).abs() <= 1e-14);
        }
    }

    #[test]
    fn range_errors() {
        let mut rng = RandomStream::new(0, 0).rng();
        assert!(haar_orthogonal(0, &mut rng).is_err());
        assert!(uniform_sphere(0, &mut rng).is_err());
        assert!(grassmann_frame(3, 2, &mut rng).is_err());
        assert!(grassmann_frame(0, 2, &mut rng).is_err());
    }
}
