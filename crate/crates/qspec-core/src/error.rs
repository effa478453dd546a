//! Crate error type.
//!
//! Errors double as diagnostics: tolerance failures carry the measured value
//! and the bound that was violated, so a caller can report *why* an input was
//! rejected rather than silently perturbing it.

use alloc::string::String;
use core::fmt;

pub type QsResult<T> = Result<T, QsError>;

#[derive(Clone, Debug, PartialEq)]
pub enum QsError {
    /// Matrix construction rejected: input not Hermitian within tolerance.
    NotHermitian { asymmetry: f64, bound: f64 },
    /// Dimension mismatch between operators.
    DimMismatch { expected: usize, got: usize },
    /// Mixed semiclassical labels in one family.
    HbarMismatch { expected: f64, got: f64 },
    /// Eigensolver hit its rotation/iteration cap.
    EigNoConvergence { dim: usize, residual: f64 },
    /// Pairwise commutator norm exceeds the commutation tolerance.
    CommutatorTooLarge { norm: f64, tol: f64 },
    /// Joint-spectrum residual verification failed; message carries cluster
    /// sizes and residuals.
    VerificationFailed { detail: String },
    /// Adaptive quadrature did not stabilize within the doubling cap.
    QuadratureNotConverged { last_change: f64, target: f64 },
    /// Requested tensor dimension exceeds a guard.
    MemoryGuard { dim: usize, cap: usize },
    /// Weyl truncation too small for the symbol's cutoff window.
    WindowViolation { hbar_m_max: f64, required: f64 },
    /// Empty point set where a nonempty one is required.
    EmptyInput,
    /// Fewer clouds than a limit-set estimate needs.
    InsufficientClouds { got: usize, need: usize },
    /// Lattice fit residual too large: the cloud is not lattice-structured.
    LatticeResidual { residual: f64, spacing: f64 },
    /// A toric-lattice operation requires all multiplicities equal to one.
    MultiplicityNotOne { mult: usize },
    /// Polygon degenerate where a genuine 2D polytope is required.
    DegeneratePolygon,
    /// Symbol rejected (zero symbol, sign violation, unsupported structure).
    BadSymbol { detail: String },
    /// Rate-fit slope left its acceptance band.
    SlopeOutOfBand { slope: f64, lo: f64, hi: f64 },
    /// A gap that must shrink along the semiclassical tail failed to.
    NotConverging { detail: String },
    /// Iterative extreme-eigenvalue solver failed to stabilize.
    LanczosNoConvergence { dim: usize, residual: f64 },
}

impl fmt::Display for QsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QsError::NotHermitian { asymmetry, bound } => write!(
                f,
                "matrix is not Hermitian: asymmetry {asymmetry:.3e} exceeds {bound:.3e}"
            ),
            QsError::DimMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            QsError::HbarMismatch { expected, got } => {
                write!(f, "hbar mismatch: expected {expected}, got {got}")
            }
            QsError::EigNoConvergence { dim, residual } => write!(
                f,
                "eigensolver did not converge (dim {dim}, off-diagonal residual {residual:.3e})"
            ),
            QsError::CommutatorTooLarge { norm, tol } => write!(
                f,
                "operators do not commute at this precision: ‖[A,B]‖ = {norm:.3e} > {tol:.3e}"
            ),
            QsError::VerificationFailed { detail } => {
                write!(f, "joint-spectrum verification failed: {detail}")
            }
            QsError::QuadratureNotConverged {
                last_change,
                target,
            } => write!(
                f,
                "quadrature not converged: entry change {last_change:.3e} > {target:.3e} at doubling cap"
            ),
            QsError::MemoryGuard { dim, cap } => {
                write!(f, "refusing dimension {dim}: guard is {cap}")
            }
            QsError::WindowViolation {
                hbar_m_max,
                required,
            } => write!(
                f,
                "truncation too small: hbar*m_max = {hbar_m_max:.3} < required {required:.3}"
            ),
            QsError::EmptyInput => write!(f, "empty point set"),
            QsError::InsufficientClouds { got, need } => {
                write!(f, "need at least {need} clouds, got {got}")
            }
            QsError::LatticeResidual { residual, spacing } => write!(
                f,
                "cloud is not lattice-structured: residual {residual:.3e} > 0.2 × spacing {spacing:.3e}"
            ),
            QsError::MultiplicityNotOne { mult } => {
                write!(f, "joint eigenvalue with multiplicity {mult}; expected 1")
            }
            QsError::DegeneratePolygon => write!(f, "degenerate polygon"),
            QsError::BadSymbol { detail } => write!(f, "bad symbol: {detail}"),
            QsError::SlopeOutOfBand { slope, lo, hi } => {
                write!(f, "fitted slope {slope:.3} outside [{lo}, {hi}]")
            }
            QsError::NotConverging { detail } => write!(f, "not converging: {detail}"),
            QsError::LanczosNoConvergence { dim, residual } => write!(
                f,
                "extreme-eigenvalue iteration did not stabilize (dim {dim}, residual {residual:.3e})"
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for QsError {}
