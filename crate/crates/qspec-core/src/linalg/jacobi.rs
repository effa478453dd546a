//! Cyclic Jacobi eigensolver for dense complex Hermitian matrices.
//!
//! Each rotation zeroes one off-diagonal pivot with a unitary plane rotation
//! that combines the pivot's phase with a real Jacobi angle. Quadratic
//! convergence sets in after a few sweeps; the rotation budget is
//! `64 * dim^2` and exceeding it is an error, not silent degradation.

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

use super::{EigenDecomposition, HermitianMatrix};
use crate::error::{QsError, QsResult};
use crate::real;

pub(super) fn eig_jacobi(a: &HermitianMatrix) -> QsResult<EigenDecomposition> {
    let n = a.dim();
    let mut m = a.data().to_vec();
    let mut v = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        v[i * n + i] = Complex64::new(1.0, 0.0);
    }

    if n > 1 {
        let scale = {
            let f = a.frob_norm();
            if f > 1.0 {
                f
            } else {
                1.0
            }
        };
        let stop = 1e-14 * scale;
        let skip = 1e-2 * stop / (n as f64 * n as f64);
        let max_rotations = 64 * n * n;
        let mut rotations = 0usize;

        loop {
            let off = off_norm(&m, n);
            if off <= stop {
                break;
            }
            for p in 0..n - 1 {
                for q in p + 1..n {
                    let apq = m[p * n + q];
                    let mag = real::hypot(apq.re, apq.im);
                    if mag <= skip {
                        continue;
                    }
                    rotations += 1;
                    if rotations > max_rotations {
                        return Err(QsError::EigNoConvergence {
                            dim: n,
                            residual: off_norm(&m, n),
                        });
                    }
                    rotate(&mut m, &mut v, n, p, q, apq, mag);
                }
            }
        }
    }

    let mut values: Vec<f64> = (0..n).map(|i| m[i * n + i].re).collect();
    canonical_phases(&mut v, n);
    sort_columns(&mut values, &mut v, n);

    Ok(EigenDecomposition {
        values,
        vectors: v,
        dim: n,
    })
}

fn off_norm(m: &[Complex64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            s += m[i * n + j].norm_sqr();
        }
    }
    real::sqrt(2.0 * s)
}

/// One unitary plane rotation `A <- U* A U`, `V <- V U`, zeroing `a_pq`.
///
/// With `u = a_pq/|a_pq|`, `tau = (a_qq - a_pp)/(2|a_pq|)` and the small-root
/// tangent `t`, the rotation has `U_pp = U_qq = c`, `U_pq = -s u`,
/// `U_qp = s conj(u)`.
fn rotate(
    m: &mut [Complex64],
    v: &mut [Complex64],
    n: usize,
    p: usize,
    q: usize,
    apq: Complex64,
    mag: f64,
) {
    let u = apq / mag;
    let app = m[p * n + p].re;
    let aqq = m[q * n + q].re;
    let tau = (aqq - app) / (2.0 * mag);
    // Smaller root of t^2 - 2 tau t - 1 = 0.
    let t = {
        let s = if tau >= 0.0 { 1.0 } else { -1.0 };
        -s / (real::abs(tau) + real::sqrt(1.0 + tau * tau))
    };
    let c = 1.0 / real::sqrt(1.0 + t * t);
    let s = t * c;

    let su = u * s;
    let suc = u.conj() * s;

    // Columns p and q of A (rows follow by Hermiticity).
    for j in 0..n {
        if j == p || j == q {
            continue;
        }
        let ajp = m[j * n + p];
        let ajq = m[j * n + q];
        let njp = ajp * c + ajq * suc;
        let njq = ajq * c - ajp * su;
        m[j * n + p] = njp;
        m[p * n + j] = njp.conj();
        m[j * n + q] = njq;
        m[q * n + j] = njq.conj();
    }
    m[p * n + p] = Complex64::new(app + t * mag, 0.0);
    m[q * n + q] = Complex64::new(aqq - t * mag, 0.0);
    m[p * n + q] = Complex64::new(0.0, 0.0);
    m[q * n + p] = Complex64::new(0.0, 0.0);

    for j in 0..n {
        let vjp = v[j * n + p];
        let vjq = v[j * n + q];
        v[j * n + p] = vjp * c + vjq * suc;
        v[j * n + q] = vjq * c - vjp * su;
    }
}

/// Multiply each column by a unit phase so that its first component of
/// magnitude above 1e-10 becomes real positive.
fn canonical_phases(v: &mut [Complex64], n: usize) {
    for j in 0..n {
        let mut phase = None;
        for i in 0..n {
            let z = v[i * n + j];
            if real::hypot(z.re, z.im) > 1e-10 {
                phase = Some(z / real::hypot(z.re, z.im));
                break;
            }
        }
        if let Some(ph) = phase {
            let adj = ph.conj();
            for i in 0..n {
                v[i * n + j] *= adj;
            }
            // Pin the pivot component exactly real.
            for i in 0..n {
                let z = v[i * n + j];
                if real::hypot(z.re, z.im) > 1e-10 {
                    v[i * n + j] = Complex64::new(real::hypot(z.re, z.im), 0.0);
                    break;
                }
            }
        }
    }
}

/// Stable ascending sort of (value, column) pairs. Ties keep solver order;
/// after phase normalization tied columns all have argument zero at their
/// pivot component, so any stable order satisfies the tie-break contract.
fn sort_columns(values: &mut [f64], v: &mut [Complex64], n: usize) {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let old_vals = values.to_vec();
    let old_vecs = v.to_vec();
    for (new_j, &old_j) in idx.iter().enumerate() {
        values[new_j] = old_vals[old_j];
        for i in 0..n {
            v[i * n + new_j] = old_vecs[i * n + old_j];
        }
    }
}
