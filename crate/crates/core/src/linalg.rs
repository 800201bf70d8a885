//! Small dense helpers for the k ≤ 8 matrices that show up in hull and
//! frame code. Matrices are row-major `&[f64]` slices.

#[inline]
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Determinant of a `k × k` row-major matrix by Gaussian elimination with
/// partial pivoting. The input buffer is destroyed.
pub(crate) fn det_in_place(m: &mut [f64], k: usize) -> f64 {
    debug_assert_eq!(m.len(), k * k);
    match k {
        0 => return 1.0,
        1 => return m[0],
        2 => return m[0] * m[3] - m[1] * m[2],
        3 => {
            return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6])
                + m[2] * (m[3] * m[7] - m[4] * m[6])
        }
        _ => {}
    }
    let mut det = 1.0;
    for col in 0..k {
        let mut piv = col;
        let mut best = m[col * k + col].abs();
        for row in col + 1..k {
            let v = m[row * k + col].abs();
            if v > best {
                best = v;
                piv = row;
            }
        }
        if best == 0.0 {
            return 0.0;
        }
        if piv != col {
            for j in 0..k {
                m.swap(col * k + j, piv * k + j);
            }
            det = -det;
        }
        let p = m[col * k + col];
        det *= p;
        for row in col + 1..k {
            let f = m[row * k + col] / p;
            if f != 0.0 {
                for j in col + 1..k {
                    m[row * k + j] -= f * m[col * k + j];
                }
            }
        }
    }
    det
}

/// Vector orthogonal to the `k − 1` rows of `rows` (a `(k−1) × k`
/// row-major matrix), computed from signed cofactors. Not normalized.
pub(crate) fn cofactor_normal(rows: &[f64], k: usize, out: &mut [f64]) {
    debug_assert_eq!(rows.len(), (k - 1) * k);
    match k {
        1 => out[0] = 1.0,
        2 => {
            out[0] = rows[1];
            out[1] = -rows[0];
        }
        3 => {
            let (a, b) = (&rows[0..3], &rows[3..6]);
            out[0] = a[1] * b[2] - a[2] * b[1];
            out[1] = a[2] * b[0] - a[0] * b[2];
            out[2] = a[0] * b[1] - a[1] * b[0];
        }
        _ => {
            let m = k - 1;
            let mut minor = vec![0.0; m * m];
            for skip in 0..k {
                for r in 0..m {
                    let mut c2 = 0;
                    for c in 0..k {
                        if c != skip {
                            minor[r * m + c2] = rows[r * k + c];
                            c2 += 1;
                        }
                    }
                }
                let d = det_in_place(&mut minor, m);
                out[skip] = if skip % 2 == 0 { d } else { -d };
            }
        }
    }
}

/// Numerical rank of a set of row vectors of length `k`, with rows
/// considered dependent once their residual falls below `tol` (relative to
/// the largest row norm).
pub(crate) fn rank(rows: &[f64], k: usize, tol: f64) -> usize {
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(k);
    let scale = rows
        .chunks_exact(k)
        .map(norm)
        .fold(0.0_f64, f64::max)
        .max(f64::MIN_POSITIVE);
    for row in rows.chunks_exact(k) {
        if basis.len() == k {
            break;
        }
        let mut v = row.to_vec();
        for _ in 0..2 {
            for b in &basis {
                let c = dot(&v, b);
                v.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
            }
        }
        let n = norm(&v);
        if n > tol * scale {
            v.iter_mut().for_each(|x| *x /= n);
            basis.push(v);
        }
    }
    basis.len()
}

/// `k!` as a float.
pub(crate) fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_matches_known_values() {
        let mut m = vec![2.0, 0.0, 0.0, 0.0, 0.0, 3.0, 0.0, 0.0, 0.0, 0.0, 4.0, 0.0, 0.0, 0.0, 0.0, 5.0];
        assert_eq!(det_in_place(&mut m, 4), 120.0);
        // a row swap flips the sign
        let mut p = vec![0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0];
        assert_eq!(det_in_place(&mut p, 4), -1.0);
    }

    #[test]
    fn cofactor_normal_is_orthogonal() {
        let rows = [
            1.0, 2.0, 0.5, -1.0, 0.3, 0.0, 1.0, 1.0, 0.0, 2.0, -1.0, 0.7, 0.0, 0.0, 3.0, 0.2, 0.1,
            -0.4, 1.5, 0.0,
        ];
        let mut n = [0.0; 5];
        cofactor_normal(&rows, 5, &mut n);
        for r in rows.chunks_exact(5) {
            assert!(dot(r, &n).abs() < 1e-12);
        }
        assert!(norm(&n) > 0.1);
    }

    #[test]
    fn rank_detects_dependence() {
        let rows = [1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0];
        assert_eq!(rank(&rows, 3, 1e-9), 2);
        assert_eq!(rank(&[0.0, 0.0], 2, 1e-9), 0);
    }
}
