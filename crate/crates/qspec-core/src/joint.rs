//! Joint spectra of commuting Hermitian families and the membership
//! functional.
//!
//! The joint spectrum is extracted by recursive block diagonalization:
//! diagonalize the first operator, cluster its eigenvalues, project the
//! remaining operators onto each cluster's eigenspace, and recurse. Every
//! leaf is re-verified against the original operators; a failed residual is a
//! hard error carrying diagnostics, never a silently perturbed answer.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

use crate::error::{QsError, QsResult};
use crate::linalg::{
    check_commuting_family, eig_hermitian, phi_c_operator, phi_c_operator_unchecked,
    HermitianMatrix,
};
use crate::real;
use crate::rng::SplitMix64;

/// One joint eigenvalue with its multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct CloudPoint {
    pub coords: Vec<f64>,
    pub mult: usize,
}

/// Finite multiset of points in R^d at a fixed semiclassical parameter — the
/// support of the joint spectral measure, with multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct JointSpectrumCloud {
    pub dim_d: usize,
    pub hbar: f64,
    pub points: Vec<CloudPoint>,
}

impl JointSpectrumCloud {
    pub fn new(dim_d: usize, hbar: f64, points: Vec<CloudPoint>) -> Self {
        let mut cloud = Self {
            dim_d,
            hbar,
            points,
        };
        cloud.sort();
        cloud
    }

    pub fn total_multiplicity(&self) -> usize {
        self.points.iter().map(|p| p.mult).sum()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Deterministic lexicographic order.
    pub fn sort(&mut self) {
        self.points.sort_by(|a, b| {
            for (x, y) in a.coords.iter().zip(b.coords.iter()) {
                match x.total_cmp(y) {
                    core::cmp::Ordering::Equal => continue,
                    other => return other,
                }
            }
            core::cmp::Ordering::Equal
        });
    }

    /// Apply a coordinate map to every point.
    pub fn map_coords<F: Fn(usize, f64) -> f64>(&self, f: F) -> Self {
        let points = self
            .points
            .iter()
            .map(|p| CloudPoint {
                coords: p
                    .coords
                    .iter()
                    .enumerate()
                    .map(|(axis, &x)| f(axis, x))
                    .collect(),
                mult: p.mult,
            })
            .collect();
        Self::new(self.dim_d, self.hbar, points)
    }

    /// Brute-force squared Euclidean distance from `c` to the cloud.
    pub fn min_sq_dist(&self, c: &[f64]) -> f64 {
        let mut best = f64::INFINITY;
        for p in &self.points {
            let mut s = 0.0;
            for (x, y) in p.coords.iter().zip(c.iter()) {
                s += (x - y) * (x - y);
            }
            if s < best {
                best = s;
            }
        }
        best
    }

    pub fn max_mult(&self) -> usize {
        self.points.iter().map(|p| p.mult).max().unwrap_or(0)
    }
}

/// Default clustering tolerance given the first operator's norm.
pub fn default_cluster_tol(t1_norm: f64) -> f64 {
    1e-8 * (1.0 + t1_norm)
}

/// Min-eigenvalue field of the membership functional over a probe grid. The
/// sub-level set `{value <= eps^2}` is the `eps`-fattening of the joint
/// spectrum.
#[derive(Clone, Debug)]
pub struct MembershipField {
    pub probes: Vec<Vec<f64>>,
    pub values: Vec<f64>,
}

/// Joint spectrum of a commuting family by recursive block diagonalization.
///
/// Eigenvalues of the first operator are clustered at `cluster_tol`
/// (consecutive-gap rule); the remaining operators are compressed onto each
/// cluster's eigenspace and the recursion continues. Leaves yield points
/// whose multiplicity is the leaf dimension. Every point is then verified:
/// for its representative vector `v`, `‖T_j v − λ_j v‖ <= 10 cluster_tol ‖T_j‖`
/// must hold for all `j`.
pub fn joint_spectrum(
    ops: &[HermitianMatrix],
    cluster_tol: f64,
) -> QsResult<JointSpectrumCloud> {
    assert!(cluster_tol > 0.0, "cluster_tol must be positive");
    let norms = check_commuting_family(ops)?;
    let n = ops[0].dim();

    // Identity basis to start: columns of the n x n identity.
    let mut basis = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        basis[i * n + i] = Complex64::new(1.0, 0.0);
    }

    let mut leaves: Vec<(Vec<f64>, Vec<Complex64>, usize)> = Vec::new();
    recurse(
        ops,
        0,
        &basis,
        n,
        n,
        cluster_tol,
        &mut Vec::new(),
        &mut leaves,
    )?;

    // Verification pass against the original operators.
    let mut points = Vec::with_capacity(leaves.len());
    let mut detail = String::new();
    let mut failed = false;
    for (coords, rep, mult) in &leaves {
        for (j, t) in ops.iter().enumerate() {
            let r = eigen_residual(t, rep, coords[j]);
            let bound = 10.0 * cluster_tol * norms[j];
            if r > bound {
                failed = true;
                detail.push_str(&format!(
                    "op {j}: residual {r:.3e} > {bound:.3e} at point {:?} (leaf dim {mult}); ",
                    coords
                ));
            }
        }
        points.push(CloudPoint {
            coords: coords.clone(),
            mult: *mult,
        });
    }
    if failed {
        detail.push_str(&format!(
            "leaves: {}, cluster_tol: {cluster_tol:.3e}",
            leaves.len()
        ));
        return Err(QsError::VerificationFailed { detail });
    }

    let mut cloud = JointSpectrumCloud::new(ops.len(), ops[0].hbar(), points);
    merge_close_points(&mut cloud, cluster_tol);
    debug_assert_eq!(cloud.total_multiplicity(), n);
    Ok(cloud)
}

#[allow(clippy::too_many_arguments)]
fn recurse(
    ops: &[HermitianMatrix],
    depth: usize,
    basis: &[Complex64],
    n: usize,
    m: usize,
    cluster_tol: f64,
    prefix: &mut Vec<f64>,
    leaves: &mut Vec<(Vec<f64>, Vec<Complex64>, usize)>,
) -> QsResult<()> {
    // Compress T_depth onto the current subspace: B = W* T W (m x m).
    let t = &ops[depth];
    let b = compress(t, basis, n, m);
    let hb = HermitianMatrix::new(m, t.hbar(), b).map_err(|_| QsError::VerificationFailed {
        detail: String::from("projected block lost Hermiticity"),
    })?;
    let eig = eig_hermitian(&hb)?;

    // Cluster by consecutive gaps.
    let mut start = 0usize;
    while start < m {
        let mut end = start + 1;
        while end < m && eig.values[end] - eig.values[end - 1] <= cluster_tol {
            end += 1;
        }
        let csize = end - start;
        let mean: f64 = eig.values[start..end].iter().sum::<f64>() / csize as f64;

        // New basis: W * V[:, start..end]  (n x csize).
        let mut nb = vec![Complex64::new(0.0, 0.0); n * csize];
        for i in 0..n {
            for (cj, j) in (start..end).enumerate() {
                let mut s = Complex64::new(0.0, 0.0);
                for kk in 0..m {
                    s += basis[i * m + kk] * eig.vectors[kk * m + j];
                }
                nb[i * csize + cj] = s;
            }
        }

        prefix.push(mean);
        if depth + 1 == ops.len() {
            let rep: Vec<Complex64> = (0..n).map(|i| nb[i * csize]).collect();
            leaves.push((prefix.clone(), rep, csize));
        } else {
            recurse(ops, depth + 1, &nb, n, csize, cluster_tol, prefix, leaves)?;
        }
        prefix.pop();
        start = end;
    }
    Ok(())
}

/// `W* T W` for an `n x m` basis `W` (row-major `n x m`).
fn compress(t: &HermitianMatrix, w: &[Complex64], n: usize, m: usize) -> Vec<Complex64> {
    // tmp = T W  (n x m)
    let mut tmp = vec![Complex64::new(0.0, 0.0); n * m];
    for i in 0..n {
        for k in 0..n {
            let tik = t.entry(i, k);
            if tik.re == 0.0 && tik.im == 0.0 {
                continue;
            }
            for j in 0..m {
                tmp[i * m + j] += tik * w[k * m + j];
            }
        }
    }
    // B = W* tmp (m x m)
    let mut b = vec![Complex64::new(0.0, 0.0); m * m];
    for i in 0..m {
        for k in 0..n {
            let wki = w[k * m + i].conj();
            if wki.re == 0.0 && wki.im == 0.0 {
                continue;
            }
            for j in 0..m {
                b[i * m + j] += wki * tmp[k * m + j];
            }
        }
    }
    b
}

fn eigen_residual(t: &HermitianMatrix, v: &[Complex64], lambda: f64) -> f64 {
    let n = t.dim();
    let mut sum = 0.0;
    for i in 0..n {
        let mut s = Complex64::new(0.0, 0.0);
        for j in 0..n {
            s += t.entry(i, j) * v[j];
        }
        s -= v[i] * lambda;
        sum += s.norm_sqr();
    }
    real::sqrt(sum)
}

fn merge_close_points(cloud: &mut JointSpectrumCloud, tol: f64) {
    let mut merged: Vec<CloudPoint> = Vec::with_capacity(cloud.points.len());
    'outer: for p in cloud.points.drain(..) {
        for q in merged.iter_mut() {
            let mut d2 = 0.0;
            for (a, b) in p.coords.iter().zip(q.coords.iter()) {
                d2 += (a - b) * (a - b);
            }
            if real::sqrt(d2) < tol {
                // Multiplicity-weighted mean keeps the merged point centred.
                let tot = (p.mult + q.mult) as f64;
                for (a, b) in q.coords.iter_mut().zip(p.coords.iter()) {
                    *a = (*a * q.mult as f64 + b * p.mult as f64) / tot;
                }
                q.mult += p.mult;
                continue 'outer;
            }
        }
        merged.push(p);
    }
    cloud.points = merged;
    cloud.sort();
}

/// Cross-check path: diagonalize a seeded random linear combination
/// `Σ r_i T_i` and read each operator's eigenvalues off the common basis.
/// Genericity can fail near clustered spectra, which the residual
/// verification turns into an error rather than a wrong answer.
pub fn joint_spectrum_rlc(
    ops: &[HermitianMatrix],
    cluster_tol: f64,
    seed: u64,
) -> QsResult<JointSpectrumCloud> {
    let norms = check_commuting_family(ops)?;
    let n = ops[0].dim();
    let mut rng = SplitMix64::new(seed);
    let coeffs: Vec<f64> = ops.iter().map(|_| rng.next_gaussian()).collect();

    let mut data = vec![Complex64::new(0.0, 0.0); n * n];
    for (t, &r) in ops.iter().zip(coeffs.iter()) {
        for (d, &e) in data.iter_mut().zip(t.data().iter()) {
            *d += e * r;
        }
    }
    let mix = HermitianMatrix::new(n, ops[0].hbar(), data)?;
    let eig = eig_hermitian(&mix)?;

    let mut points = Vec::with_capacity(n);
    for col in 0..n {
        let v = eig.vector(col);
        let mut coords = Vec::with_capacity(ops.len());
        for t in ops {
            // Rayleigh quotient <v, T v> (real for Hermitian T).
            let mut s = Complex64::new(0.0, 0.0);
            for i in 0..n {
                let mut tv = Complex64::new(0.0, 0.0);
                for j in 0..n {
                    tv += t.entry(i, j) * v[j];
                }
                s += v[i].conj() * tv;
            }
            coords.push(s.re);
        }
        for (j, t) in ops.iter().enumerate() {
            let r = eigen_residual(t, &v, coords[j]);
            let bound = 10.0 * cluster_tol * norms[j];
            if r > bound {
                return Err(QsError::VerificationFailed {
                    detail: format!(
                        "random-combination path non-generic: op {j} residual {r:.3e} > {bound:.3e}"
                    ),
                });
            }
        }
        points.push(CloudPoint { coords, mult: 1 });
    }

    let mut cloud = JointSpectrumCloud::new(ops.len(), ops[0].hbar(), points);
    merge_close_points(&mut cloud, cluster_tol);
    Ok(cloud)
}

/// Bottom eigenvalue of `φ_c(T_1..T_d) = Σ (T_i − c_i)²` — the squared
/// Euclidean distance from `c` to the joint spectrum, up to roundoff.
pub fn membership_indicator(ops: &[HermitianMatrix], c: &[f64]) -> QsResult<f64> {
    let phi = phi_c_operator(ops, c)?;
    let eig = eig_hermitian(&phi)?;
    Ok(eig.values[0])
}

/// Batch of [`membership_indicator`] over a probe grid (the family is
/// validated once).
pub fn membership_field(ops: &[HermitianMatrix], grid: &[Vec<f64>]) -> QsResult<MembershipField> {
    check_commuting_family(ops)?;
    let mut values = Vec::with_capacity(grid.len());
    for c in grid {
        let phi = phi_c_operator_unchecked(ops, c);
        let eig = eig_hermitian(&phi)?;
        values.push(eig.values[0]);
    }
    Ok(MembershipField {
        probes: grid.to_vec(),
        values,
    })
}
