//! Small dense symmetric eigensolver and linear solves.

use crate::error::{Error, Result};
use crate::tensor::Vec3;

/// Relative asymmetry accepted by [`symmetric_eigen`].
pub const SYMMETRY_TOL: f64 = 1e-9;

/// Eigen-decomposition `m = Σ λ_k v_k v_kᵀ`, eigenvalues ascending.
/// `vectors[k]` is the unit eigenvector of `values[k]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricEigen<const N: usize> {
    pub values: [f64; N],
    pub vectors: [[f64; N]; N],
}

fn max_abs<const N: usize>(m: &[[f64; N]; N]) -> f64 {
    m.iter().flatten().fold(0.0_f64, |s, v| s.max(v.abs()))
}

/// Cyclic Jacobi diagonalization of a symmetric matrix.
///
/// Sweeps continue until every off-diagonal entry is below `1e-15 · max|m|`
/// or no rotation changes the matrix.
pub fn symmetric_eigen<const N: usize>(m: &[[f64; N]; N]) -> Result<SymmetricEigen<N>> {
    if m.iter().flatten().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("symmetric eigenproblem"));
    }
    let norm = max_abs(m);
    let mut deviation = 0.0_f64;
    for i in 0..N {
        for j in i + 1..N {
            deviation = deviation.max((m[i][j] - m[j][i]).abs());
        }
    }
    if deviation > SYMMETRY_TOL * norm {
        return Err(Error::Asymmetric {
            deviation,
            tolerance: SYMMETRY_TOL * norm,
        });
    }

    let mut a = [[0.0; N]; N];
    for i in 0..N {
        for j in 0..N {
            a[i][j] = 0.5 * (m[i][j] + m[j][i]);
        }
    }
    // Columns of v are the eigenvectors.
    let mut v = [[0.0; N]; N];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }

    let threshold = 1e-15 * norm;
    for _sweep in 0..64 {
        let mut off = 0.0_f64;
        for i in 0..N {
            for j in i + 1..N {
                off = off.max(a[i][j].abs());
            }
        }
        if off <= threshold {
            break;
        }
        let mut rotated = false;
        for p in 0..N {
            for q in p + 1..N {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                if s == 0.0 {
                    continue;
                }
                rotated = true;
                for k in 0..N {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..N {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: [usize; N] = std::array::from_fn(|i| i);
    order.sort_by(|&i, &j| a[i][i].total_cmp(&a[j][j]));
    let values = order.map(|k| a[k][k]);
    let vectors = order.map(|k| std::array::from_fn(|i| v[i][k]));
    Ok(SymmetricEigen { values, vectors })
}

/// Solves `m z = b` by Gaussian elimination with partial pivoting.
/// Returns `None` when a pivot falls below `1e-300`.
pub fn solve<const N: usize>(m: &[[f64; N]; N], b: &[f64; N]) -> Option<[f64; N]> {
    let mut a = *m;
    let mut z = *b;
    for col in 0..N {
        let piv = (col..N).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        z.swap(col, piv);
        for r in col + 1..N {
            let f = a[r][col] / a[col][col];
            if f == 0.0 {
                continue;
            }
            for c in col..N {
                a[r][c] -= f * a[col][c];
            }
            z[r] -= f * z[col];
        }
    }
    for col in (0..N).rev() {
        let mut s = z[col];
        for c in col + 1..N {
            s -= a[col][c] * z[c];
        }
        z[col] = s / a[col][col];
    }
    z.iter().all(|v| v.is_finite()).then_some(z)
}

pub fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn norm(a: &Vec3) -> f64 {
    dot(a, a).sqrt()
}

/// `a / |a|`, or `None` for a vector too short to normalize.
pub fn normalized(a: &Vec3) -> Option<Vec3> {
    let n = norm(a);
    (n > 1e-300 && n.is_finite()).then(|| a.map(|v| v / n))
}

pub fn mat_vec(m: &[[f64; 3]; 3], x: &Vec3) -> Vec3 {
    std::array::from_fn(|i| dot(&m[i], x))
}
