//! Leading-order Floquet-Bloch spectrum of a stiff Laplacian on the plane
//! perforated by touching disks of radius 1/2.
//!
//! The hard phase lives in the disks, the soft phase (stiffness `ε⁻¹`,
//! density `ε⁻²ᵐ`) in the cuspidal region between them. As `ε → 0` each band
//! of the periodic operator shrinks onto a Dirichlet eigenvalue `4 j²ₙ,ₖ` of
//! the disk, and its width is governed by a closed-form first-order
//! correction `ε²ᵐ Λ¹(η)`.
//!
//! Modules, bottom up:
//!
//! - [`bessel`]: `Jₙ`, `Jₙ'` and positive zeros `jₙ,ₖ`.
//! - [`spectrum`]: disk eigenpairs and their multiplicity-aware ordering.
//! - [`correction`]: quadrant phases, the cell map, `c⁰(η)`, the correction
//!   matrix and `Λ¹(η)`.
//! - [`bands`]: padded band intervals, band lengths and gap detection.
//! - [`oracle`]: brute-force checks (radial finite differences, boundary
//!   quadrature) used to validate the closed forms.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bands;
pub mod bessel;
pub mod correction;
mod error;
mod math;
pub mod oracle;
pub mod quadrature;
pub mod spectrum;
pub mod tridiag;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Measure of the soft region `Υ` in the unit cell: `1 − π/4`.
pub const SOFT_AREA: f64 = 1.0 - core::f64::consts::FRAC_PI_4;

/// Radius of the inclusions.
pub const DISK_RADIUS: f64 = 0.5;
