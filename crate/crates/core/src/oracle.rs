//! Brute-force references for the closed forms: a radial finite-volume
//! solve of the Dirichlet disk and direct boundary quadrature of `c⁰`.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::bessel::BesselOrder;
use crate::correction::{boundary_integral, FloquetPoint};
use crate::error::{Error, Result};
use crate::quadrature::GaussLegendre;
use crate::spectrum::{limit_eigenvalue, DiskEigenfunction, ModeIndex};
use crate::tridiag::SymTridiagonal;
use crate::{math, DISK_RADIUS, SOFT_AREA};

/// Uniform radial mesh of `(0, 1/2)` with `points` interior nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RadialMesh {
    points: usize,
}

impl RadialMesh {
    pub const MIN_POINTS: usize = 16;

    pub fn new(points: usize) -> Result<Self> {
        if points < Self::MIN_POINTS {
            return Err(Error::InvalidArgument("radial mesh needs at least 16 interior nodes"));
        }
        Ok(RadialMesh { points })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn h(&self) -> f64 {
        DISK_RADIUS / (self.points + 1) as f64
    }

    /// The mesh with exactly half the step (`2·points + 1` nodes).
    pub fn refined(&self) -> RadialMesh {
        RadialMesh { points: 2 * self.points + 1 }
    }
}

/// Eigenvalues of the finite-volume discretisation of
/// `−(r u')' + (n²/r) u = λ r u`, `u(1/2) = 0`, without any accuracy check.
///
/// For `n = 0` an extra node sits at the origin with control volume
/// `[0, h/2]`; for `n ≥ 1` the origin is a Dirichlet node.
pub fn fd_eigenvalues(order: BesselOrder, count: usize, mesh: RadialMesh) -> Result<Vec<f64>> {
    let n = f64::from(order.0);
    let h = mesh.h();
    let inv_h2 = 1.0 / (h * h);
    let mut diag = Vec::with_capacity(mesh.points + 1);
    let mut off = Vec::with_capacity(mesh.points);
    let mut weight = Vec::with_capacity(mesh.points + 1);
    if order.0 == 0 {
        diag.push(0.5 * h * inv_h2);
        weight.push(h / 8.0);
        off.push(-0.5 * h * inv_h2);
    }
    for i in 1..=mesh.points {
        let r = i as f64 * h;
        let left = r - 0.5 * h;
        let right = r + 0.5 * h;
        diag.push((left + right) * inv_h2 + n * n / r);
        weight.push(r);
        if i < mesh.points {
            off.push(-right * inv_h2);
        }
    }
    for (i, d) in diag.iter_mut().enumerate() {
        *d /= weight[i];
    }
    for (i, o) in off.iter_mut().enumerate() {
        *o /= math::sqrt(weight[i] * weight[i + 1]);
    }
    SymTridiagonal::new(diag, off)?.smallest_eigenvalues(count)
}

/// Relative change between a mesh and its refinement above which
/// [`disk_dirichlet_eigenvalues`] reports the mesh as unresolved.
pub const RICHARDSON_TOLERANCE: f64 = 1e-2;

/// The `count` smallest Dirichlet eigenvalues of order `n` on the disk of
/// radius `1/2`, checked against the refined mesh.
pub fn disk_dirichlet_eigenvalues(order: BesselOrder, count: usize, mesh: RadialMesh) -> Result<Vec<f64>> {
    if count == 0 || count > mesh.points / 4 {
        return Err(Error::InvalidArgument("count must lie in 1..=points/4"));
    }
    let coarse = fd_eigenvalues(order, count, mesh)?;
    let fine = fd_eigenvalues(order, count, mesh.refined())?;
    for (index, (c, f)) in coarse.iter().zip(&fine).enumerate() {
        let change = (c - f).abs() / f.abs();
        if change.is_nan() || change > RICHARDSON_TOLERANCE {
            return Err(Error::MeshNotResolved { n: order.0, index, change });
        }
    }
    Ok(coarse)
}

/// Discretisation errors against `4 j²ₙ,ₖ` on a mesh and its refinement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceSample {
    pub k: u32,
    pub exact: f64,
    pub coarse: f64,
    pub fine: f64,
}

impl ConvergenceSample {
    pub fn coarse_error(&self) -> f64 {
        (self.coarse - self.exact).abs()
    }

    pub fn fine_error(&self) -> f64 {
        (self.fine - self.exact).abs()
    }

    pub fn relative_error(&self) -> f64 {
        self.coarse_error() / self.exact
    }

    /// Close to 4 for a second-order scheme.
    pub fn ratio(&self) -> f64 {
        self.coarse_error() / self.fine_error()
    }
}

pub fn fd_convergence(order: BesselOrder, count: usize, mesh: RadialMesh) -> Result<Vec<ConvergenceSample>> {
    let coarse = disk_dirichlet_eigenvalues(order, count, mesh)?;
    let fine = fd_eigenvalues(order, count, mesh.refined())?;
    let mut out = Vec::with_capacity(count);
    for (i, (c, f)) in coarse.into_iter().zip(fine).enumerate() {
        let k = i as u32 + 1;
        let mode = if order.0 == 0 { ModeIndex::simple(k)? } else { ModeIndex::cosine(order.0, k)? };
        out.push(ConvergenceSample { k, exact: limit_eigenvalue(mode)?.lambda0, coarse: c, fine: f });
    }
    Ok(out)
}

const ORACLE_NODES: usize = 16;
const PANEL_TOLERANCE: f64 = 1e-10;

/// `c⁰(η) = −1/(Λ⁰ (1 − π/4)) · ∮ g_x(η) ∂_r 𝔙⁰(1/2, θ) dθ`, integrated
/// directly over the four quarter arcs with `panels` Gauss-Legendre panels
/// per arc and checked against `2·panels`.
pub fn c0_quadrature(
    mode: ModeIndex,
    eta: FloquetPoint,
    coeff_c: Complex64,
    coeff_s: Complex64,
    panels: usize,
) -> Result<Complex64> {
    if panels < 8 {
        return Err(Error::InvalidArgument("c0 quadrature needs at least 8 panels per quarter arc"));
    }
    let f = DiskEigenfunction::new(mode, coeff_c, coeff_s)?;
    let rule = GaussLegendre::new(ORACLE_NODES);
    let scale = -1.0 / (f.lambda0() * SOFT_AREA);
    let run = |p: usize| -> Result<Complex64> {
        let mut failure = None;
        let v = boundary_integral(eta, &rule, p, |theta| match f.radial_derivative(DISK_RADIUS, theta) {
            Ok(d) => d,
            Err(e) => {
                failure = Some(e);
                Complex64::new(0.0, 0.0)
            }
        })?;
        match failure {
            Some(e) => Err(e),
            None => Ok(v * scale),
        }
    };
    let coarse = run(panels)?;
    let fine = run(2 * panels)?;
    let change = (fine - coarse).norm();
    if change > PANEL_TOLERANCE {
        return Err(Error::QuadratureNotConverged { change });
    }
    Ok(fine)
}

/// Length of `Γ` by quadrature of `ds = r dθ` over the four quarter arcs.
pub fn arc_length(panels: usize) -> f64 {
    let rule = GaussLegendre::new(ORACLE_NODES);
    (0..4)
        .map(|q| {
            let a = FRAC_PI_2 * q as f64;
            rule.integrate(a, a + FRAC_PI_2, panels.max(1), |_| DISK_RADIUS)
        })
        .sum()
}

/// Circumference of `Γ`.
pub const ARC_LENGTH: f64 = 2.0 * PI * DISK_RADIUS;
