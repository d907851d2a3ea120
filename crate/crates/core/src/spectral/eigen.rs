//! Dense symmetric eigensolver: Householder reduction to tridiagonal form,
//! implicit QL with Wilkinson-style shifts, and a Sturm-count bisection for
//! the least eigenvalue.

use crate::error::SpectralError;

const MAX_QL_ITERATIONS: usize = 60;

/// Eigenvalues in ascending order; `vectors[i][j]` is entry `i` of the
/// eigenvector for `values[j]`.
#[derive(Clone, Debug)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
    /// Tridiagonal form from the reduction: diagonal and sub-diagonal
    /// (`off[i]` couples rows `i - 1` and `i`, `off[0] = 0`).
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl SymmetricEigen {
    pub fn vector(&self, j: usize) -> Vec<f64> {
        self.vectors.iter().map(|row| row[j]).collect()
    }
}

pub fn symmetric_eigen(a: &[Vec<f64>]) -> Result<SymmetricEigen, SpectralError> {
    let n = a.len();
    if n == 0 {
        return Ok(SymmetricEigen {
            values: vec![],
            vectors: vec![],
            diag: vec![],
            off: vec![],
        });
    }
    let mut v: Vec<Vec<f64>> = a.to_vec();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(&mut v, &mut d, &mut e);
    let (diag, off) = (d.clone(), e.clone());
    ql_implicit(&mut v, &mut d, &mut e)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    let values = order.iter().map(|&j| d[j]).collect();
    let vectors = v
        .iter()
        .map(|row| order.iter().map(|&j| row[j]).collect())
        .collect();
    Ok(SymmetricEigen {
        values,
        vectors,
        diag,
        off,
    })
}

fn tridiagonalize(v: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) {
    let n = d.len();
    for j in 0..n {
        d[j] = v[n - 1][j];
    }
    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for k in 0..i {
            scale += d[k].abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
                v[j][i] = 0.0;
            }
        } else {
            for k in 0..i {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for x in e.iter_mut().take(i) {
                *x = 0.0;
            }
            for j in 0..i {
                f = d[j];
                v[j][i] = f;
                g = e[j] + v[j][j] * f;
                for k in j + 1..i {
                    g += v[k][j] * d[k];
                    e[k] += v[k][j] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[k][j] -= f * e[k] + g * d[k];
                }
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
            }
        }
        d[i] = h;
    }
    for i in 0..n - 1 {
        v[n - 1][i] = v[i][i];
        v[i][i] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[k][i + 1] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[k][i + 1] * v[k][j];
                }
                for k in 0..=i {
                    v[k][j] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[k][i + 1] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[n - 1][j];
        v[n - 1][j] = 0.0;
    }
    v[n - 1][n - 1] = 1.0;
    e[0] = 0.0;
}

fn ql_implicit(v: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) -> Result<(), SpectralError> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > MAX_QL_ITERATIONS {
                    return Err(SpectralError::NoConvergence);
                }
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for x in d.iter_mut().skip(l + 2) {
                    *x -= h;
                }
                f += h;
                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for row in v.iter_mut() {
                        h = row[i + 1];
                        row[i + 1] = s * row[i] + c * h;
                        row[i] = c * row[i] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

/// Number of eigenvalues of the tridiagonal matrix strictly below `x`.
pub fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..diag.len() {
        let coupling = if i == 0 { 0.0 } else { off[i] * off[i] };
        q = diag[i] - x - if i == 0 { 0.0 } else { coupling / q };
        if q == 0.0 {
            q = -f64::EPSILON * (diag[i].abs() + x.abs() + 1.0);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Least eigenvalue of the tridiagonal matrix by bisection on Sturm counts.
pub fn least_by_bisection(diag: &[f64], off: &[f64]) -> f64 {
    let n = diag.len();
    let radius = |i: usize| off[i].abs() + if i + 1 < n { off[i + 1].abs() } else { 0.0 };
    let mut lo = (0..n)
        .map(|i| diag[i] - radius(i))
        .fold(f64::INFINITY, f64::min);
    let mut hi = (0..n)
        .map(|i| diag[i] + radius(i))
        .fold(f64::NEG_INFINITY, f64::max);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(diag, off, mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Inverse iteration for an eigenvector of `a` near `lambda`.
pub fn inverse_iteration(a: &[Vec<f64>], lambda: f64) -> Option<Vec<f64>> {
    let n = a.len();
    let shift = lambda - 1e-10 * (1.0 + lambda.abs());
    let mut m: Vec<Vec<f64>> = a.to_vec();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= shift;
    }
    let (lu, piv) = lu_decompose(m)?;
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    for (i, xi) in x.iter_mut().enumerate() {
        *xi += 1e-3 * ((i * 7919 % 97) as f64 / 97.0);
    }
    for _ in 0..8 {
        let mut y = lu_solve(&lu, &piv, &x);
        let norm = y.iter().map(|t| t * t).sum::<f64>().sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return None;
        }
        for t in &mut y {
            *t /= norm;
        }
        x = y;
    }
    Some(x)
}

fn lu_decompose(mut m: Vec<Vec<f64>>) -> Option<(Vec<Vec<f64>>, Vec<usize>)> {
    let n = m.len();
    let mut piv: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let p = (k..n).max_by(|&i, &j| m[i][k].abs().total_cmp(&m[j][k].abs()))?;
        if m[p][k] == 0.0 {
            m[k][k] = f64::EPSILON;
        } else if p != k {
            m.swap(p, k);
            piv.swap(p, k);
        }
        for i in k + 1..n {
            let factor = m[i][k] / m[k][k];
            m[i][k] = factor;
            for j in k + 1..n {
                m[i][j] -= factor * m[k][j];
            }
        }
    }
    Some((m, piv))
}

fn lu_solve(lu: &[Vec<f64>], piv: &[usize], b: &[f64]) -> Vec<f64> {
    let n = lu.len();
    let mut y: Vec<f64> = piv.iter().map(|&p| b[p]).collect();
    for i in 0..n {
        for j in 0..i {
            y[i] -= lu[i][j] * y[j];
        }
    }
    for i in (0..n).rev() {
        for j in i + 1..n {
            y[i] -= lu[i][j] * y[j];
        }
        y[i] /= lu[i][i];
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(a: &[Vec<f64>], x: &[f64], lambda: f64) -> f64 {
        a.iter()
            .zip(x)
            .map(|(row, xi)| {
                (row.iter().zip(x).map(|(r, t)| r * t).sum::<f64>() - lambda * xi).abs()
            })
            .fold(0.0, f64::max)
    }

    #[test]
    fn diagonal_and_two_by_two() {
        let a = vec![vec![3.0, 0.0], vec![0.0, 1.0]];
        let e = symmetric_eigen(&a).unwrap();
        assert_eq!(e.values, vec![1.0, 3.0]);
        let a = vec![vec![2.0, 1.0], vec![1.0, 2.0]];
        let e = symmetric_eigen(&a).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-14 && (e.values[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn random_symmetric_residuals() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 1..30 {
            let mut a = vec![vec![0.0; n]; n];
            for i in 0..n {
                for j in 0..=i {
                    let x: f64 = rng.gen_range(-2.0..2.0);
                    a[i][j] = x;
                    a[j][i] = x;
                }
            }
            let e = symmetric_eigen(&a).unwrap();
            let trace: f64 = (0..n).map(|i| a[i][i]).sum();
            assert!((e.values.iter().sum::<f64>() - trace).abs() < 1e-10);
            for j in 0..n {
                assert!(residual(&a, &e.vector(j), e.values[j]) < 1e-10);
            }
            let least = least_by_bisection(&e.diag, &e.off);
            assert!((least - e.values[0]).abs() < 1e-10);
            let x = inverse_iteration(&a, e.values[0]).unwrap();
            assert!(residual(&a, &x, e.values[0]) < 1e-8);
        }
    }

    #[test]
    fn sturm_counts_eigenvalues_below() {
        // path-like tridiagonal [[2,1],[1,2]] has eigenvalues 1 and 3
        let diag = [2.0, 2.0];
        let off = [0.0, 1.0];
        assert_eq!(sturm_count(&diag, &off, 0.5), 0);
        assert_eq!(sturm_count(&diag, &off, 2.0), 1);
        assert_eq!(sturm_count(&diag, &off, 3.5), 2);
    }
}
