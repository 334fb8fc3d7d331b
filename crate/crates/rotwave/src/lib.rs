//! Numerical toolkit for the mixed-type operator `L = -Δ + α²∂²_θ` on the
//! unit disk.
//!
//! The Dirichlet eigenvalues of `L` are `j_{ℓ,k}² - α²ℓ²`, where `j_{ℓ,k}`
//! is the k-th positive zero of the Bessel function `J_ℓ`. For rotation
//! speeds `α > 1` the operator is of mixed elliptic/hyperbolic type and its
//! spectrum is unbounded in both directions; for the admissible sequence
//! `α_n` constructed here the spectrum stays uniformly gapped away from
//! zero, which makes a variational treatment of the reduced rotating-wave
//! equation `-Δu + α²∂²_θ u + mu = |u|^{p-2}u` possible.
//!
//! The crate is organized along that pipeline:
//!
//! * [`specfun`] — Bessel `J_ν` of real order, its positive zeros with
//!   rigorous enclosures, Airy-function negative zeros, modified Bessel
//!   `K₀`/`K₁`, and the order-derivative of a Bessel zero.
//! * [`asymptotics`] — the limit function `ι(x) = lim_k j_{xk,k}/k`, its
//!   inverse relation, the limiting ODE, and the two-sided sandwich bound
//!   for `j_{xk,k}/k - ι(x)`.
//! * [`spectrum`] — the admissible velocity sequence `α_n`, eigenvalue
//!   enumeration and classification, and empirical spectral-gap constants.
//! * [`groundstate`] — spectral-Galerkin discretization on the disk
//!   eigenbasis, generalized-Nehari ground states, the radial reference
//!   solver, and the nonradiality crossover scan.
//!
//! Data-parallel inner loops (row enumeration, k-scans, multi-starts) run
//! on rayon when the default `parallel` feature is enabled and fall back to
//! sequential iteration without it.

pub mod asymptotics;
pub mod error;
pub mod groundstate;
pub mod ode;
pub(crate) mod par;
pub mod quadrature;
pub mod specfun;
pub mod spectrum;

pub use error::{Error, Result};
