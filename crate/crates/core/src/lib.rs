//! Numerical toolkit for the softened Coulomb potential family
//! V(r) = Z·e^{−C/r}/r and its relatives (Coulomb, Yukawa).
//!
//! The crate is organized around five subsystems:
//!
//! - [`potentials`] — closed-form evaluation of the potential family, its
//!   derivatives, moving-nucleus and multi-center time-dependent values.
//! - [`specfun`] — complex-argument modified Bessel functions I_ν and K₁
//!   and the Laplace-type integral identity behind the closed-form
//!   Fourier transform.
//! - [`fourier`] — radial Fourier transforms: oscillatory quadrature, the
//!   Bessel closed form of the regularized transform, and the Coulomb
//!   (C → 0) limit.
//! - [`spectral`] — radial bound-state eigensolver, the dilatation
//!   (complex-scaling) transform with spectrum classification, and the
//!   dilatation-analyticity condition checks.
//! - [`propagator`] — split-operator reference propagation of
//!   H(t) = −Δ − 1/|x| + V(x − r(t)) on a 3D grid, a truncated
//!   time-ordered (Dyson) series in the interaction picture, and domain
//!   diagnostics (norm, ⟨x²⟩, Y-norm).
//!
//! All quantities are in atomic units (Bohr, Hartree with kinetic
//! operator −Δ, so hydrogenic levels sit at −1/(4n²)).

pub mod fourier;
pub mod potentials;
pub mod propagator;
pub mod quadrature;
pub mod selftest;
pub mod specfun;
pub mod spectral;

pub use num_complex::Complex64;

pub use potentials::{NucleusTrajectory, PotentialSpec};
