//! Oracle suite behind `stiffgap verify`.

use stiffgap_core::bands::eta_grid;
use stiffgap_core::bessel::{bessel_j, bessel_zero, BesselOrder};
use stiffgap_core::correction::{c0_multiple, c0_simple, correction_matrix, lambda1_multiple, FloquetPoint};
use stiffgap_core::oracle::{arc_length, c0_quadrature, fd_convergence, RadialMesh, ARC_LENGTH};
use stiffgap_core::spectrum::ModeIndex;
use stiffgap_core::{Complex64, Result};

use crate::table::fmt_num;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn line(&self) -> String {
        format!("{} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

fn grid_points(resolution: usize) -> Vec<FloquetPoint> {
    let g = eta_grid(resolution).expect("resolution is at least 2");
    g.iter().flat_map(|&a| g.iter().map(move |&b| FloquetPoint::new(a, b))).collect()
}

fn zeros() -> Result<Check> {
    let mut worst: f64 = 0.0;
    let mut interlaced = true;
    for n in 0..=12 {
        for k in 1..=8 {
            let z = bessel_zero(BesselOrder(n), k)?.value;
            worst = worst.max(bessel_j(BesselOrder(n), z)?.abs());
            let next = bessel_zero(BesselOrder(n + 1), k)?.value;
            let after = bessel_zero(BesselOrder(n), k + 1)?.value;
            interlaced &= z < next && next < after;
        }
    }
    Ok(Check {
        name: "bessel-zeros",
        passed: worst <= 1e-12 && interlaced,
        detail: format!(
            "n<=12 k<=8 max |J_n(j)| = {}, interlacing {}",
            fmt_num(worst),
            if interlaced { "holds" } else { "fails" }
        ),
    })
}

fn finite_differences() -> Result<Check> {
    let mesh = RadialMesh::new(2048)?;
    let mut worst_rel: f64 = 0.0;
    let (mut rmin, mut rmax) = (f64::INFINITY, f64::NEG_INFINITY);
    for n in 0..=2 {
        for s in fd_convergence(BesselOrder(n), 2, mesh)? {
            worst_rel = worst_rel.max(s.relative_error());
            rmin = rmin.min(s.ratio());
            rmax = rmax.max(s.ratio());
        }
    }
    Ok(Check {
        name: "disk-finite-differences",
        passed: worst_rel <= 1e-3 && rmin >= 3.5 && rmax <= 4.5,
        detail: format!(
            "2048 nodes, max relative error {}, convergence ratio in [{}, {}]",
            fmt_num(worst_rel),
            fmt_num(rmin),
            fmt_num(rmax)
        ),
    })
}

fn c0() -> Result<Check> {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let mut worst: f64 = 0.0;
    for eta in grid_points(9) {
        for k in 1..=2 {
            let q = c0_quadrature(ModeIndex::simple(k)?, eta, one, zero, 8)?;
            worst = worst.max((q - c0_simple(k, eta)?).norm());
            for n in 1..=6 {
                for (cc, cs) in [(one, zero), (zero, one)] {
                    let q = c0_quadrature(ModeIndex::cosine(n, k)?, eta, cc, cs, 8)?;
                    worst = worst.max((q - c0_multiple(n, k, eta, cc, cs)?).norm());
                }
            }
        }
    }
    Ok(Check {
        name: "c0-quadrature",
        passed: worst <= 1e-8,
        detail: format!("9x9 grid, n<=6 k<=2, max |closed form - quadrature| = {}", fmt_num(worst)),
    })
}

fn trace() -> Result<Check> {
    let (mut det, mut zero_eig, mut tr) = (0.0f64, 0.0f64, 0.0f64);
    for eta in grid_points(9) {
        for n in 1..=6 {
            for k in 1..=2 {
                let m = correction_matrix(n, k, eta)?;
                let t = m.matrix.trace();
                let [small, large] = m.matrix.eigenvalues();
                det = det.max(m.matrix.det().norm());
                zero_eig = zero_eig.max(small.norm()).max((large - t).norm());
                tr = tr.max((t - Complex64::new(lambda1_multiple(n, k, eta)?.sine, 0.0)).norm());
            }
        }
    }
    Ok(Check {
        name: "correction-matrix",
        passed: det <= 1e-10 && zero_eig <= 1e-10 && tr <= 1e-8,
        detail: format!(
            "max |det M| = {}, eigenvalue defect = {}, max |tr M - closed form| = {}",
            fmt_num(det),
            fmt_num(zero_eig),
            fmt_num(tr)
        ),
    })
}

fn arc_measure() -> Check {
    let err = (arc_length(8) - ARC_LENGTH).abs();
    Check { name: "arc-measure", passed: err <= 1e-12, detail: format!("|length - pi| = {}", fmt_num(err)) }
}

/// Runs every check, stopping at the first numerical error.
pub fn run_all() -> Result<Vec<Check>> {
    Ok(vec![zeros()?, finite_differences()?, c0()?, trace()?, arc_measure()])
}
