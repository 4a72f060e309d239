//! Matrix-free exact diagonalization and real-time dynamics for the
//! spin-1/2 Heisenberg model with Dzyaloshinskii-Moriya interaction on
//! periodic triangular clusters.
//!
//! The crate is organized bottom-up:
//!
//! - [`lattice`]: periodic triangular clusters (bonds, DMI vectors,
//!   chirality plaquettes, reciprocal-space data)
//! - [`hilbert`]: state vectors in the computational z-basis and the
//!   matrix-free Hamiltonian kernel
//! - [`solver`]: Lanczos eigensolvers with full reorthogonalization and
//!   thick restarts
//! - [`propagator`]: Chebyshev-polynomial expansion of `exp(-itH)`
//! - [`measurement`]: single-site projective measurements and weighted
//!   branch ensembles
//! - [`observables`]: scalar chirality, magnetization, overlaps,
//!   correlations and the longitudinal spin structure factor
//! - [`dense`]: dense reference constructions for small clusters, used by
//!   self-tests and oracle checks
//!
//! All floating-point reductions run through [`reduce`], which fixes the
//! summation order so results are reproducible bit-for-bit regardless of
//! the worker-pool size.

pub mod dense;
pub mod hilbert;
pub mod lattice;
pub mod measurement;
pub mod observables;
pub mod propagator;
pub mod reduce;
pub mod solver;

pub use num_complex::Complex64;
