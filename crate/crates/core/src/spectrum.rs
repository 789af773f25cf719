//! Dirichlet eigenpairs of the disk of radius 1/2 and their ordering.
//!
//! `Λ⁰ₙ,ₖ = 4 j²ₙ,ₖ` with eigenfunctions `Jₙ(2 jₙ,ₖ r)(C_c cos nθ + C_s sin nθ)`.
//! Every `n ≥ 1` eigenvalue is double, and the enumeration lists its cosine
//! copy before its sine copy.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};
use core::fmt;

use num_complex::Complex64;

use crate::bessel::{self, BesselOrder, BesselZero};
use crate::error::{Error, Result};
use crate::{math, DISK_RADIUS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Simple,
    Cosine,
    Sine,
}

impl Parity {
    pub fn label(self) -> &'static str {
        match self {
            Parity::Simple => "simple",
            Parity::Cosine => "c",
            Parity::Sine => "s",
        }
    }
}

/// `(n, k, parity)`; parity is `Simple` exactly when `n = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModeIndex {
    n: u32,
    k: u32,
    parity: Parity,
}

impl ModeIndex {
    pub fn new(n: u32, k: u32, parity: Parity) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("radial index k must be at least 1"));
        }
        if (n == 0) != (parity == Parity::Simple) {
            return Err(Error::InvalidArgument("parity must be Simple exactly when n = 0"));
        }
        Ok(ModeIndex { n, k, parity })
    }

    pub fn simple(k: u32) -> Result<Self> {
        Self::new(0, k, Parity::Simple)
    }

    pub fn cosine(n: u32, k: u32) -> Result<Self> {
        Self::new(n, k, Parity::Cosine)
    }

    pub fn sine(n: u32, k: u32) -> Result<Self> {
        Self::new(n, k, Parity::Sine)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn multiplicity(&self) -> u32 {
        if self.n == 0 {
            1
        } else {
            2
        }
    }

    /// Same `(n, k)`, i.e. the same leading eigenvalue.
    pub fn same_level(&self, other: &ModeIndex) -> bool {
        self.n == other.n && self.k == other.k
    }

    /// `n ≡ 0 (mod 4)` with `n ≥ 4`: the first-order correction is silent.
    pub fn is_undetermined(&self) -> bool {
        self.n > 0 && self.n.is_multiple_of(4)
    }
}

impl fmt::Display for ModeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.n, self.k, self.parity.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitEigenpair {
    pub mode: ModeIndex,
    pub lambda0: f64,
    pub zero: BesselZero,
}

impl LimitEigenpair {
    fn from_zero(mode: ModeIndex, zero: BesselZero) -> Self {
        LimitEigenpair { mode, lambda0: 4.0 * zero.value * zero.value, zero }
    }

    pub fn multiplicity(&self) -> u32 {
        self.mode.multiplicity()
    }
}

/// `Λ⁰ = 4 j²ₙ,ₖ` for the given mode.
pub fn limit_eigenvalue(mode: ModeIndex) -> Result<LimitEigenpair> {
    let zero = bessel::bessel_zero(BesselOrder(mode.n), mode.k)?;
    Ok(LimitEigenpair::from_zero(mode, zero))
}

/// A disk eigenfunction with caller-chosen (unnormalised) coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskEigenfunction {
    mode: ModeIndex,
    zero: BesselZero,
    coeff_c: Complex64,
    coeff_s: Complex64,
}

impl DiskEigenfunction {
    pub fn new(mode: ModeIndex, coeff_c: Complex64, coeff_s: Complex64) -> Result<Self> {
        let coeff_s = if mode.parity == Parity::Simple {
            if coeff_s != Complex64::new(0.0, 0.0) {
                return Err(Error::InvalidArgument("simple modes carry no sine coefficient"));
            }
            Complex64::new(0.0, 0.0)
        } else {
            coeff_s
        };
        let zero = bessel::bessel_zero(BesselOrder(mode.n), mode.k)?;
        Ok(DiskEigenfunction { mode, zero, coeff_c, coeff_s })
    }

    pub fn mode(&self) -> ModeIndex {
        self.mode
    }

    pub fn zero(&self) -> BesselZero {
        self.zero
    }

    pub fn coeff_c(&self) -> Complex64 {
        self.coeff_c
    }

    pub fn coeff_s(&self) -> Complex64 {
        self.coeff_s
    }

    pub fn lambda0(&self) -> f64 {
        4.0 * self.zero.value * self.zero.value
    }

    /// Angular factor `C_c cos nθ + C_s sin nθ`.
    pub fn angular(&self, theta: f64) -> Complex64 {
        let nt = f64::from(self.mode.n) * theta;
        self.coeff_c * math::cos(nt) + self.coeff_s * math::sin(nt)
    }

    /// `∂_r` of the eigenfunction at `(r, θ)`.
    pub fn radial_derivative(&self, r: f64, theta: f64) -> Result<Complex64> {
        check_radius(r)?;
        let j = self.zero.value;
        let d = 2.0 * j * bessel::j_prime_unchecked(self.mode.n, 2.0 * j * r);
        Ok(self.angular(theta) * d)
    }
}

fn check_radius(r: f64) -> Result<()> {
    if !(0.0..=DISK_RADIUS).contains(&r) {
        return Err(Error::domain("radius must lie in [0, 1/2]", r));
    }
    Ok(())
}

/// `Jₙ(2 jₙ,ₖ r)(C_c cos nθ + C_s sin nθ)` at polar point `(r, θ)`.
pub fn eigenfunction_eval(f: &DiskEigenfunction, r: f64, theta: f64) -> Result<Complex64> {
    check_radius(r)?;
    let radial = bessel::j_unchecked(f.mode.n, 2.0 * f.zero.value * r);
    Ok(f.angular(theta) * radial)
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Candidate(BesselZero);

impl Eq for Candidate {}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.value.total_cmp(&other.0.value)
    }
}

/// The first `count` limit eigenpairs in ascending order of `Λ⁰`, double
/// eigenvalues expanded into adjacent cosine/sine entries.
///
/// Zeros are merged through a min-heap: popping `jₙ,ₖ` pushes `jₙ,ₖ₊₁`,
/// and popping `jₙ,₁` also pushes `jₙ₊₁,₁`. Since `jₙ,₁` increases with
/// `n`, every zero below the current pop is already in the heap.
pub fn enumerate_spectrum(count: usize) -> Result<Vec<LimitEigenpair>> {
    if count == 0 {
        return Err(Error::InvalidArgument("count must be at least 1"));
    }
    let mut heap = BinaryHeap::new();
    heap.push(Reverse(Candidate(bessel::bessel_zero(BesselOrder(0), 1)?)));
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let Reverse(Candidate(zero)) = heap.pop().ok_or(Error::Inconsistent("zero heap ran dry"))?;
        heap.push(Reverse(Candidate(bessel::bessel_zero(BesselOrder(zero.n), zero.k + 1)?)));
        if zero.k == 1 {
            heap.push(Reverse(Candidate(bessel::bessel_zero(BesselOrder(zero.n + 1), 1)?)));
        }
        if zero.n == 0 {
            out.push(LimitEigenpair::from_zero(ModeIndex::simple(zero.k)?, zero));
        } else {
            out.push(LimitEigenpair::from_zero(ModeIndex::cosine(zero.n, zero.k)?, zero));
            if out.len() < count {
                out.push(LimitEigenpair::from_zero(ModeIndex::sine(zero.n, zero.k)?, zero));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn mode_index_parity_rules() {
        assert!(ModeIndex::new(0, 1, Parity::Cosine).is_err());
        assert!(ModeIndex::new(2, 1, Parity::Simple).is_err());
        assert!(ModeIndex::new(2, 0, Parity::Sine).is_err());
        assert_eq!(ModeIndex::sine(3, 1).unwrap().multiplicity(), 2);
        assert_eq!(ModeIndex::simple(1).unwrap().multiplicity(), 1);
        assert!(ModeIndex::cosine(8, 1).unwrap().is_undetermined());
        assert!(!ModeIndex::cosine(6, 1).unwrap().is_undetermined());
    }

    #[test]
    fn first_eigenvalues() {
        let p = limit_eigenvalue(ModeIndex::simple(1).unwrap()).unwrap();
        assert!((p.lambda0 - 4.0 * 2.404825557695773f64.powi(2)).abs() < 1e-8);
        assert_eq!(p.lambda0, 4.0 * p.zero.value * p.zero.value);
        let a = limit_eigenvalue(ModeIndex::cosine(1, 1).unwrap()).unwrap();
        let b = limit_eigenvalue(ModeIndex::sine(1, 1).unwrap()).unwrap();
        assert_eq!(a.lambda0, b.lambda0);
        assert!(p.lambda0 < a.lambda0);
    }

    #[test]
    fn enumeration_order() {
        let want = [
            (0, 1, Parity::Simple),
            (1, 1, Parity::Cosine),
            (1, 1, Parity::Sine),
            (2, 1, Parity::Cosine),
            (2, 1, Parity::Sine),
            (0, 2, Parity::Simple),
            (3, 1, Parity::Cosine),
            (3, 1, Parity::Sine),
            (1, 2, Parity::Cosine),
            (1, 2, Parity::Sine),
        ];
        let got = enumerate_spectrum(10).unwrap();
        for (p, &(n, k, parity)) in got.iter().zip(&want) {
            assert_eq!((p.mode.n(), p.mode.k(), p.mode.parity()), (n, k, parity));
        }
        assert_eq!(got.len(), 10);
        let one = enumerate_spectrum(1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].mode, ModeIndex::simple(1).unwrap());
        assert_eq!(enumerate_spectrum(2).unwrap()[1].mode, ModeIndex::cosine(1, 1).unwrap());
        assert!(enumerate_spectrum(0).is_err());
    }

    #[test]
    fn enumeration_is_complete() {
        // Brute force: every zero with n, k < 40 below the last returned value.
        let got = enumerate_spectrum(60).unwrap();
        let top = got.last().unwrap().lambda0;
        let mut expected = 0;
        for n in 0..40u32 {
            for k in 1..40u32 {
                let z = bessel::bessel_zero(BesselOrder(n), k).unwrap().value;
                if 4.0 * z * z > top {
                    break;
                }
                expected += if n == 0 { 1 } else { 2 };
            }
        }
        // The last entry may be a cosine copy whose sine twin was cut.
        assert!(expected == got.len() || expected == got.len() + 1);
        assert!(got.windows(2).all(|w| w[0].lambda0 <= w[1].lambda0));
    }

    #[test]
    fn eigenfunction_boundary_and_origin() {
        let modes = [
            ModeIndex::simple(1).unwrap(),
            ModeIndex::simple(3).unwrap(),
            ModeIndex::cosine(1, 1).unwrap(),
            ModeIndex::sine(2, 2).unwrap(),
            ModeIndex::cosine(5, 1).unwrap(),
        ];
        for mode in modes {
            let cs = if mode.parity() == Parity::Simple { c(0.0) } else { Complex64::new(0.3, -1.2) };
            let f = DiskEigenfunction::new(mode, c(1.0), cs).unwrap();
            for i in 0..64 {
                let theta = 2.0 * PI * f64::from(i) / 64.0;
                assert!(eigenfunction_eval(&f, 0.5, theta).unwrap().norm() <= 1e-10);
            }
        }
        let f = DiskEigenfunction::new(ModeIndex::simple(1).unwrap(), c(1.0), c(0.0)).unwrap();
        assert_eq!(eigenfunction_eval(&f, 0.0, 1.3).unwrap(), c(1.0));
        assert!(eigenfunction_eval(&f, 0.51, 0.0).is_err());
        assert!(eigenfunction_eval(&f, -0.1, 0.0).is_err());
        assert!(DiskEigenfunction::new(ModeIndex::simple(1).unwrap(), c(1.0), c(1.0)).is_err());
    }

    #[test]
    fn cosine_mode_composes_bessel() {
        let mode = ModeIndex::cosine(1, 1).unwrap();
        let f = DiskEigenfunction::new(mode, c(1.0), c(0.0)).unwrap();
        let j = f.zero().value;
        let want = bessel::bessel_j(BesselOrder(1), 2.0 * j * 0.25).unwrap();
        assert_eq!(eigenfunction_eval(&f, 0.25, 0.0).unwrap(), c(want));
    }

    #[test]
    fn helmholtz_residual_by_finite_differences() {
        let h = 1e-3;
        let modes = [
            ModeIndex::simple(1).unwrap(),
            ModeIndex::cosine(1, 1).unwrap(),
            ModeIndex::sine(2, 1).unwrap(),
            ModeIndex::cosine(3, 2).unwrap(),
        ];
        for mode in modes {
            let cs = if mode.parity() == Parity::Simple { c(0.0) } else { c(0.7) };
            let f = DiskEigenfunction::new(mode, c(1.0), cs).unwrap();
            let u = |r: f64, t: f64| eigenfunction_eval(&f, r, t).unwrap();
            for &(r, t) in &[(0.1, 0.3), (0.2, 1.9), (0.33, 4.0), (0.41, 5.5)] {
                let urr = (u(r + h, t) - u(r, t) * 2.0 + u(r - h, t)) / (h * h);
                let ur = (u(r + h, t) - u(r - h, t)) / (2.0 * h);
                let utt = (u(r, t + h) - u(r, t) * 2.0 + u(r, t - h)) / (h * h);
                let lap = urr + ur / r + utt / (r * r);
                let rhs = u(r, t) * f.lambda0();
                let scale = rhs.norm().max(f.lambda0() * 1e-2);
                assert!((lap + rhs).norm() / scale < 1e-2, "{mode} at ({r},{t})");
            }
        }
    }
}
