//! Dense Hermitian and symmetric-tridiagonal linear algebra.
//!
//! Matrices are immutable after construction and safe to share across
//! threads; every operation is a pure function of its inputs. The
//! eigensolvers are contract-driven: whatever the algorithm, the
//! decomposition must reconstruct the input to `1e-10 * max(1, ‖A‖)` and the
//! eigenvector matrix must be orthonormal to `1e-10`.

mod jacobi;
mod tridiagonal;

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

use crate::error::{QsError, QsResult};
use crate::real;

/// Relative asymmetry accepted at construction.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Commutation tolerance for a pair of operators. All backends in this crate
/// commute exactly in exact arithmetic, so only roundoff must be absorbed.
pub fn commutation_tol(norm_a: f64, norm_b: f64) -> f64 {
    1e-10 * (1.0 + norm_a * norm_b)
}

/// Dense complex Hermitian matrix labeled by its semiclassical parameter.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    hbar: f64,
    /// Row-major, `dim * dim` entries, exactly Hermitian after construction.
    data: Vec<Complex64>,
}

impl HermitianMatrix {
    /// Build from raw row-major entries. The input may carry roundoff
    /// asymmetry up to `1e-12 * max|entry|`; it is symmetrized to
    /// `(A + A*)/2` so downstream code can rely on exact Hermiticity.
    pub fn new(dim: usize, hbar: f64, entries: Vec<Complex64>) -> QsResult<Self> {
        assert!(dim >= 1, "dim must be >= 1");
        assert!(hbar > 0.0, "hbar must be positive");
        assert_eq!(entries.len(), dim * dim, "entry count must be dim^2");

        let mut max_entry = 0.0f64;
        for z in &entries {
            let m = real::hypot(z.re, z.im);
            if m > max_entry {
                max_entry = m;
            }
        }
        let bound = HERMITICITY_TOL * max_entry;
        let mut max_asym = 0.0f64;
        let mut data = entries;
        for i in 0..dim {
            let dii = data[i * dim + i];
            let asym = real::abs(2.0 * dii.im);
            if asym > max_asym {
                max_asym = asym;
            }
            data[i * dim + i] = Complex64::new(dii.re, 0.0);
            for j in (i + 1)..dim {
                let a = data[i * dim + j];
                let b = data[j * dim + i];
                let diff = a - b.conj();
                let asym = real::hypot(diff.re, diff.im);
                if asym > max_asym {
                    max_asym = asym;
                }
                let avg = (a + b.conj()) * 0.5;
                data[i * dim + j] = avg;
                data[j * dim + i] = avg.conj();
            }
        }
        if max_asym > bound {
            return Err(QsError::NotHermitian {
                asymmetry: max_asym,
                bound,
            });
        }
        Ok(Self { dim, hbar, data })
    }

    /// Construct directly from data known to be exactly Hermitian.
    pub(crate) fn from_hermitian_parts(dim: usize, hbar: f64, data: Vec<Complex64>) -> Self {
        debug_assert_eq!(data.len(), dim * dim);
        Self { dim, hbar, data }
    }

    pub fn identity(dim: usize, hbar: f64) -> Self {
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        Self { dim, hbar, data }
    }

    pub fn from_real_diag(diag: &[f64], hbar: f64) -> Self {
        let dim = diag.len();
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for (i, &d) in diag.iter().enumerate() {
            data[i * dim + i] = Complex64::new(d, 0.0);
        }
        Self { dim, hbar, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn frob_norm(&self) -> f64 {
        real::sqrt(self.data.iter().map(|z| z.norm_sqr()).sum::<f64>())
    }

    pub fn max_abs_entry(&self) -> f64 {
        let mut m = 0.0f64;
        for z in &self.data {
            let a = real::hypot(z.re, z.im);
            if a > m {
                m = a;
            }
        }
        m
    }

    /// True when every off-diagonal entry is exactly zero.
    pub fn is_diagonal(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j {
                    let z = self.data[i * self.dim + j];
                    if z.re != 0.0 || z.im != 0.0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn real_diag(&self) -> Vec<f64> {
        (0..self.dim).map(|i| self.data[i * self.dim + i].re).collect()
    }
}

/// Eigendecomposition of a Hermitian matrix: ascending eigenvalues and
/// orthonormal eigenvectors (column `j` of `vectors` pairs with `values[j]`).
///
/// Determinism: each eigenvector is phase-normalized so its first component
/// of magnitude above `1e-10` is real positive; equal eigenvalues keep the
/// (deterministic) solver order, which sorts tied columns by the argument of
/// that first component (zero for all of them after normalization).
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    /// Row-major `dim * dim`; column `j` is the eigenvector for `values[j]`.
    pub vectors: Vec<Complex64>,
    pub dim: usize,
}

impl EigenDecomposition {
    pub fn vector(&self, j: usize) -> Vec<Complex64> {
        (0..self.dim).map(|i| self.vectors[i * self.dim + j]).collect()
    }

    /// `‖V diag(λ) V* − A‖_F`.
    pub fn reconstruction_residual(&self, a: &HermitianMatrix) -> f64 {
        let n = self.dim;
        let mut sum = 0.0;
        for i in 0..n {
            for j in 0..n {
                let mut s = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    s += self.vectors[i * n + k] * self.values[k] * self.vectors[j * n + k].conj();
                }
                sum += (s - a.entry(i, j)).norm_sqr();
            }
        }
        real::sqrt(sum)
    }

    /// `‖V*V − Id‖_F`.
    pub fn orthonormality_defect(&self) -> f64 {
        let n = self.dim;
        let mut sum = 0.0;
        for i in 0..n {
            for j in 0..n {
                let mut s = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    s += self.vectors[k * n + i].conj() * self.vectors[k * n + j];
                }
                if i == j {
                    s -= 1.0;
                }
                sum += s.norm_sqr();
            }
        }
        real::sqrt(sum)
    }
}

/// Real symmetric tridiagonal matrix (the pendulum sector blocks).
#[derive(Clone, Debug, PartialEq)]
pub struct TridiagonalMatrix {
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
}

impl TridiagonalMatrix {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Self {
        assert!(!diag.is_empty(), "need n >= 1");
        assert_eq!(offdiag.len() + 1, diag.len(), "offdiag must have n-1 entries");
        Self { diag, offdiag }
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    /// Dense Hermitian embedding (for cross-checks against the dense solver).
    pub fn to_dense(&self, hbar: f64) -> HermitianMatrix {
        let n = self.n();
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            data[i * n + i] = Complex64::new(self.diag[i], 0.0);
        }
        for i in 0..n - 1 {
            data[i * n + i + 1] = Complex64::new(self.offdiag[i], 0.0);
            data[(i + 1) * n + i] = Complex64::new(self.offdiag[i], 0.0);
        }
        HermitianMatrix::from_hermitian_parts(n, hbar, data)
    }
}

/// Full eigendecomposition of a dense Hermitian matrix (cyclic Jacobi).
pub fn eig_hermitian(a: &HermitianMatrix) -> QsResult<EigenDecomposition> {
    jacobi::eig_jacobi(a)
}

/// Full eigendecomposition of a symmetric tridiagonal matrix (implicit QL).
pub fn eig_tridiagonal(t: &TridiagonalMatrix) -> QsResult<EigenDecomposition> {
    tridiagonal::eig_ql(t, true)
}

/// Eigenvalues only, ascending. Much faster than the full decomposition for
/// the large pendulum sectors.
pub fn tridiagonal_eigenvalues(t: &TridiagonalMatrix) -> QsResult<Vec<f64>> {
    Ok(tridiagonal::eig_ql(t, false)?.values)
}

/// Operator (spectral) norm: `max |λ|`. Exact for Hermitian input.
pub fn op_norm(a: &HermitianMatrix) -> QsResult<f64> {
    // Cheap exact path for diagonal matrices; the general path goes through
    // the eigensolver so the two stay trivially consistent.
    if a.is_diagonal() {
        let mut m = 0.0f64;
        for i in 0..a.dim() {
            let v = real::abs(a.entry(i, i).re);
            if v > m {
                m = v;
            }
        }
        return Ok(m);
    }
    let eig = eig_hermitian(a)?;
    Ok(eig
        .values
        .iter()
        .fold(0.0f64, |m, &v| if real::abs(v) > m { real::abs(v) } else { m }))
}

fn check_pair(a: &HermitianMatrix, b: &HermitianMatrix) -> QsResult<()> {
    if a.dim() != b.dim() {
        return Err(QsError::DimMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    if a.hbar() != b.hbar() {
        return Err(QsError::HbarMismatch {
            expected: a.hbar(),
            got: b.hbar(),
        });
    }
    Ok(())
}

/// Raw row-major complex matrix product.
pub(crate) fn matmul(a: &[Complex64], b: &[Complex64], n: usize) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik.re == 0.0 && aik.im == 0.0 {
                continue;
            }
            let row = &b[k * n..(k + 1) * n];
            let out = &mut c[i * n..(i + 1) * n];
            for (cij, bkj) in out.iter_mut().zip(row.iter()) {
                *cij += aik * bkj;
            }
        }
    }
    c
}

/// `‖AB − BA‖` (spectral norm of the commutator, computed as the largest
/// absolute eigenvalue of the Hermitian matrix `-i(AB − BA)`).
pub fn commutator_norm(a: &HermitianMatrix, b: &HermitianMatrix) -> QsResult<f64> {
    check_pair(a, b)?;
    let n = a.dim();
    let ab = matmul(a.data(), b.data(), n);
    let ba = matmul(b.data(), a.data(), n);
    // -i(AB-BA) is Hermitian when A, B are.
    let mi = Complex64::new(0.0, -1.0);
    let data: Vec<Complex64> = ab.iter().zip(ba.iter()).map(|(x, y)| mi * (x - y)).collect();
    let m = HermitianMatrix::from_hermitian_parts(n, a.hbar(), symmetrize(data, n));
    op_norm(&m)
}

fn symmetrize(mut data: Vec<Complex64>, n: usize) -> Vec<Complex64> {
    for i in 0..n {
        data[i * n + i] = Complex64::new(data[i * n + i].re, 0.0);
        for j in (i + 1)..n {
            let avg = (data[i * n + j] + data[j * n + i].conj()) * 0.5;
            data[i * n + j] = avg;
            data[j * n + i] = avg.conj();
        }
    }
    data
}

/// Verify that all operators share dimension and `ħ` and that they commute
/// within `commutation_tol`. Returns the operator norms as a byproduct.
pub fn check_commuting_family(ops: &[HermitianMatrix]) -> QsResult<Vec<f64>> {
    assert!(!ops.is_empty(), "need at least one operator");
    for t in ops.iter().skip(1) {
        check_pair(&ops[0], t)?;
    }
    let norms: Vec<f64> = ops.iter().map(op_norm).collect::<QsResult<_>>()?;
    for i in 0..ops.len() {
        for j in (i + 1)..ops.len() {
            let c = commutator_norm(&ops[i], &ops[j])?;
            let tol = commutation_tol(norms[i], norms[j]);
            if c > tol {
                return Err(QsError::CommutatorTooLarge { norm: c, tol });
            }
        }
    }
    Ok(norms)
}

/// The membership functional at the operator level:
/// `Σ_i (T_i − c_i·Id)^2`, a Hermitian positive-semidefinite matrix whose
/// bottom eigenvalue measures squared distance from `c` to the joint
/// spectrum.
pub fn phi_c_operator(ops: &[HermitianMatrix], c: &[f64]) -> QsResult<HermitianMatrix> {
    assert_eq!(ops.len(), c.len(), "one coordinate per operator");
    check_commuting_family(ops)?;
    Ok(phi_c_operator_unchecked(ops, c))
}

/// Same as [`phi_c_operator`] without the commutation audit (for callers that
/// already validated the family once and probe many points `c`).
pub fn phi_c_operator_unchecked(ops: &[HermitianMatrix], c: &[f64]) -> HermitianMatrix {
    let n = ops[0].dim();
    let mut acc = vec![Complex64::new(0.0, 0.0); n * n];
    for (t, &ci) in ops.iter().zip(c.iter()) {
        let mut shifted = t.data().to_vec();
        for i in 0..n {
            shifted[i * n + i] -= ci;
        }
        let sq = matmul(&shifted, &shifted, n);
        for (a, s) in acc.iter_mut().zip(sq.iter()) {
            *a += s;
        }
    }
    HermitianMatrix::from_hermitian_parts(n, ops[0].hbar(), symmetrize(acc, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_hermitian(n: usize, rng: &mut SplitMix64) -> HermitianMatrix {
        let mut data = vec![c(0.0, 0.0); n * n];
        for i in 0..n {
            data[i * n + i] = c(rng.next_gaussian(), 0.0);
            for j in (i + 1)..n {
                let z = c(rng.next_gaussian(), rng.next_gaussian());
                data[i * n + j] = z;
                data[j * n + i] = z.conj();
            }
        }
        HermitianMatrix::new(n, 1.0, data).unwrap()
    }

    #[test]
    fn constructor_rejects_asymmetry() {
        let data = vec![c(1.0, 0.0), c(1.0, 0.0), c(0.5, 0.0), c(2.0, 0.0)];
        let err = HermitianMatrix::new(2, 1.0, data).unwrap_err();
        assert!(matches!(err, QsError::NotHermitian { .. }));
    }

    #[test]
    fn eig_identity_dim3() {
        let a = HermitianMatrix::identity(3, 1.0);
        let e = eig_hermitian(&a).unwrap();
        for v in &e.values {
            assert!((v - 1.0).abs() < 1e-14);
        }
        assert!(e.orthonormality_defect() < 1e-12);
    }

    #[test]
    fn eig_already_diagonal() {
        let a = HermitianMatrix::from_real_diag(&[-1.0, 0.0, 2.0], 1.0);
        let e = eig_hermitian(&a).unwrap();
        assert_eq!(e.values, vec![-1.0, 0.0, 2.0]);
    }

    #[test]
    fn eig_pauli_x() {
        // [[0,1],[1,0]]: characteristic polynomial λ² − 1 = 0.
        let a = HermitianMatrix::new(2, 1.0, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)])
            .unwrap();
        let e = eig_hermitian(&a).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-14);
        assert!((e.values[1] - 1.0).abs() < 1e-14);
        assert!(e.reconstruction_residual(&a) < 1e-12);
    }

    #[test]
    fn eig_random_dense_contract() {
        let mut rng = SplitMix64::new(3);
        for &n in &[2usize, 5, 9, 17] {
            let a = random_hermitian(n, &mut rng);
            let e = eig_hermitian(&a).unwrap();
            let scale = if a.frob_norm() > 1.0 { a.frob_norm() } else { 1.0 };
            assert!(
                e.reconstruction_residual(&a) <= 1e-10 * scale,
                "reconstruction failed at n={n}"
            );
            assert!(e.orthonormality_defect() <= 1e-10);
            for w in e.values.windows(2) {
                assert!(w[0] <= w[1]);
            }
        }
    }

    #[test]
    fn eig_deterministic_repeat() {
        let mut rng = SplitMix64::new(11);
        let a = random_hermitian(8, &mut rng);
        let e1 = eig_hermitian(&a).unwrap();
        let e2 = eig_hermitian(&a).unwrap();
        assert_eq!(e1.values, e2.values);
        assert_eq!(e1.vectors, e2.vectors);
    }

    #[test]
    fn tridiagonal_trivial_and_2x2() {
        let t = TridiagonalMatrix::new(vec![2.0, 2.0, 2.0], vec![0.0, 0.0]);
        let e = eig_tridiagonal(&t).unwrap();
        assert_eq!(e.values, vec![2.0, 2.0, 2.0]);

        let t = TridiagonalMatrix::new(vec![0.0, 0.0], vec![1.0]);
        let e = eig_tridiagonal(&t).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-14);
        assert!((e.values[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn tridiagonal_laplacian_closed_form() {
        // diag 2, offdiag -1, n = 50: eigenvalues 2 - 2 cos(pi j / 51).
        let n = 50;
        let t = TridiagonalMatrix::new(vec![2.0; n], vec![-1.0; n - 1]);
        let e = eig_tridiagonal(&t).unwrap();
        for j in 1..=n {
            let expect = 2.0 - 2.0 * ((core::f64::consts::PI * j as f64) / 51.0).cos();
            assert!(
                (e.values[j - 1] - expect).abs() < 1e-11,
                "j={j}: {} vs {}",
                e.values[j - 1],
                expect
            );
        }
        // Dense cross-check.
        let dense = eig_hermitian(&t.to_dense(1.0)).unwrap();
        for (a, b) in e.values.iter().zip(dense.values.iter()) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn tridiagonal_eigenvalue_only_path_agrees() {
        let mut rng = SplitMix64::new(5);
        let n = 40;
        let diag: Vec<f64> = (0..n).map(|_| rng.next_gaussian()).collect();
        let off: Vec<f64> = (0..n - 1).map(|_| rng.next_gaussian()).collect();
        let t = TridiagonalMatrix::new(diag, off);
        let full = eig_tridiagonal(&t).unwrap();
        let vals = tridiagonal_eigenvalues(&t).unwrap();
        for (a, b) in full.values.iter().zip(vals.iter()) {
            assert!((a - b).abs() < 1e-12);
        }
        let scale = 1.0f64.max(t.to_dense(1.0).frob_norm());
        assert!(full.reconstruction_residual(&t.to_dense(1.0)) <= 1e-10 * scale);
    }

    #[test]
    fn op_norm_examples() {
        let z = HermitianMatrix::from_real_diag(&[0.0, 0.0], 1.0);
        assert_eq!(op_norm(&z).unwrap(), 0.0);
        let d = HermitianMatrix::from_real_diag(&[-3.0, 2.0], 1.0);
        assert_eq!(op_norm(&d).unwrap(), 3.0);
        let x = HermitianMatrix::new(2, 1.0, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)])
            .unwrap();
        assert!((op_norm(&x).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn op_norm_matches_eig_values() {
        let mut rng = SplitMix64::new(19);
        let a = random_hermitian(7, &mut rng);
        let e = eig_hermitian(&a).unwrap();
        let m = e.values.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
        assert_eq!(op_norm(&a).unwrap(), m);
    }

    #[test]
    fn commutator_examples() {
        let mut rng = SplitMix64::new(23);
        let a = random_hermitian(6, &mut rng);
        assert!(commutator_norm(&a, &a).unwrap() < 1e-12);

        let d1 = HermitianMatrix::from_real_diag(&[1.0, 2.0, 3.0], 1.0);
        let d2 = HermitianMatrix::from_real_diag(&[-1.0, 5.0, 0.0], 1.0);
        assert_eq!(commutator_norm(&d1, &d2).unwrap(), 0.0);

        // A = [[0,1],[1,0]], B = diag(1,-1): [A,B] = [[0,-2],[2,0]], norm 2.
        let x = HermitianMatrix::new(2, 1.0, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)])
            .unwrap();
        let zs = HermitianMatrix::from_real_diag(&[1.0, -1.0], 1.0);
        assert!((commutator_norm(&x, &zs).unwrap() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn commutator_dim_mismatch() {
        let a = HermitianMatrix::identity(2, 1.0);
        let b = HermitianMatrix::identity(3, 1.0);
        assert!(matches!(
            commutator_norm(&a, &b),
            Err(QsError::DimMismatch { .. })
        ));
    }

    #[test]
    fn phi_c_examples() {
        // d = 1, T = diag(0,1), c = 0.
        let t = HermitianMatrix::from_real_diag(&[0.0, 1.0], 1.0);
        let p = phi_c_operator(core::slice::from_ref(&t), &[0.0]).unwrap();
        assert_eq!(p.real_diag(), vec![0.0, 1.0]);

        // d = 2 diagonal example.
        let t1 = HermitianMatrix::from_real_diag(&[1.0, 2.0], 1.0);
        let t2 = HermitianMatrix::from_real_diag(&[3.0, 4.0], 1.0);
        let p = phi_c_operator(&[t1, t2], &[1.0, 3.0]).unwrap();
        assert_eq!(p.real_diag(), vec![0.0, 2.0]);
    }

    #[test]
    fn phi_c_diagonal_brute_force_exact() {
        // For commuting diagonal inputs the bottom eigenvalue equals the
        // brute-force minimum over diagonal entries, exactly.
        let mut rng = SplitMix64::new(31);
        for _ in 0..50 {
            let n = 5;
            let d1: Vec<f64> = (0..n).map(|_| rng.next_gaussian()).collect();
            let d2: Vec<f64> = (0..n).map(|_| rng.next_gaussian()).collect();
            let c0 = rng.next_gaussian();
            let c1 = rng.next_gaussian();
            let t1 = HermitianMatrix::from_real_diag(&d1, 1.0);
            let t2 = HermitianMatrix::from_real_diag(&d2, 1.0);
            let p = phi_c_operator(&[t1, t2], &[c0, c1]).unwrap();
            let eig = eig_hermitian(&p).unwrap();
            let brute = (0..n)
                .map(|v| (d1[v] - c0) * (d1[v] - c0) + (d2[v] - c1) * (d2[v] - c1))
                .fold(f64::INFINITY, f64::min);
            assert_eq!(eig.values[0], brute);
        }
    }

    #[test]
    fn phi_c_positive_semidefinite() {
        let mut rng = SplitMix64::new(37);
        let n = 6;
        // Commuting pair built by conjugating diagonals with one unitary.
        let base = random_hermitian(n, &mut rng);
        let u = eig_hermitian(&base).unwrap();
        let d1: Vec<f64> = (0..n).map(|_| rng.next_gaussian()).collect();
        let d2: Vec<f64> = (0..n).map(|_| rng.next_gaussian()).collect();
        let build = |d: &[f64]| {
            let mut m = vec![c(0.0, 0.0); n * n];
            for i in 0..n {
                for j in 0..n {
                    let mut s = c(0.0, 0.0);
                    for k in 0..n {
                        s += u.vectors[i * n + k] * d[k] * u.vectors[j * n + k].conj();
                    }
                    m[i * n + j] = s;
                }
            }
            HermitianMatrix::new(n, 1.0, m).unwrap()
        };
        let t1 = build(&d1);
        let t2 = build(&d2);
        let p = phi_c_operator(&[t1, t2], &[0.3, -0.7]).unwrap();
        let e = eig_hermitian(&p).unwrap();
        let norm = op_norm(&p).unwrap();
        assert!(e.values[0] >= -1e-10 * (1.0 + norm));
    }

    #[test]
    fn phi_c_rejects_noncommuting() {
        let x = HermitianMatrix::new(2, 1.0, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)])
            .unwrap();
        let zq = HermitianMatrix::from_real_diag(&[1.0, -1.0], 1.0);
        assert!(matches!(
            phi_c_operator(&[x, zq], &[0.0, 0.0]),
            Err(QsError::CommutatorTooLarge { .. })
        ));
    }
}
