//! Numerical laboratory for semiclassical quantization.
//!
//! The crate builds families of commuting Hermitian matrices out of two
//! explicit quantization backends — Berezin–Toeplitz operators on the sphere
//! (and products of spheres) and Fourier-side Weyl operators on the circle —
//! plus the quantum spherical pendulum, extracts their joint spectra, and
//! measures how those spectra converge to the joint image of the classical
//! observables as the semiclassical parameter goes to zero.
//!
//! Everything here is pure computation over `alloc`: the crate is `no_std`
//! compatible (disable the default `std` feature). IO, file formats, and the
//! command line live in the companion `qspec-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod audit;
pub mod error;
pub mod geometry;
pub mod joint;
pub mod linalg;
pub mod pendulum;
pub mod rng;
pub mod symbol;
pub mod toeplitz;
pub mod weyl;

mod real;

pub use error::{QsError, QsResult};
pub use linalg::{EigenDecomposition, HermitianMatrix, TridiagonalMatrix};
