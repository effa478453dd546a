//! Implicit-shift QL iteration for real symmetric tridiagonal matrices
//! (EISPACK `tql2` lineage). One QL step per iteration with a Wilkinson-style
//! shift; the budget is 64 iterations per eigenvalue.

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

use super::{EigenDecomposition, TridiagonalMatrix};
use crate::error::{QsError, QsResult};
use crate::real;

fn copysign(a: f64, b: f64) -> f64 {
    if b.is_sign_negative() {
        -real::abs(a)
    } else {
        real::abs(a)
    }
}

pub(super) fn eig_ql(t: &TridiagonalMatrix, with_vectors: bool) -> QsResult<EigenDecomposition> {
    let n = t.n();
    let mut d = t.diag.clone();
    // e[i] couples d[i] and d[i+1]; e[n-1] is workspace.
    let mut e = vec![0.0f64; n];
    e[..n - 1].copy_from_slice(&t.offdiag);

    let mut z = if with_vectors {
        let mut z = vec![0.0f64; n * n];
        for i in 0..n {
            z[i * n + i] = 1.0;
        }
        z
    } else {
        Vec::new()
    };

    let eps = f64::EPSILON;
    for l in 0..n {
        let mut iter = 0usize;
        loop {
            // Look for a negligible subdiagonal element to split the matrix.
            let mut m = l;
            while m + 1 < n {
                let dd = real::abs(d[m]) + real::abs(d[m + 1]);
                if real::abs(e[m]) <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 64 {
                return Err(QsError::EigNoConvergence {
                    dim: n,
                    residual: real::abs(e[l]),
                });
            }
            // Shift from the top 2x2; then one implicit QL sweep.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = real::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + copysign(r, g));
            let mut s = 1.0f64;
            let mut c = 1.0f64;
            let mut p = 0.0f64;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = real::hypot(f, g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if with_vectors {
                    for k in 0..n {
                        f = z[k * n + i + 1];
                        z[k * n + i + 1] = s * z[k * n + i] + c * f;
                        z[k * n + i] = c * z[k * n + i] - s * f;
                    }
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    // Ascending sort; deterministic sign convention for the real vectors.
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    let values: Vec<f64> = idx.iter().map(|&i| d[i]).collect();

    let vectors = if with_vectors {
        let mut v = vec![Complex64::new(0.0, 0.0); n * n];
        for (new_j, &old_j) in idx.iter().enumerate() {
            let mut sign = 1.0;
            for i in 0..n {
                let zi = z[i * n + old_j];
                if real::abs(zi) > 1e-10 {
                    sign = if zi < 0.0 { -1.0 } else { 1.0 };
                    break;
                }
            }
            for i in 0..n {
                v[i * n + new_j] = Complex64::new(sign * z[i * n + old_j], 0.0);
            }
        }
        v
    } else {
        Vec::new()
    };

    Ok(EigenDecomposition {
        values,
        vectors,
        dim: n,
    })
}
