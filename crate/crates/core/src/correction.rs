//! First-order Floquet corrections of the disk eigenvalues.
//!
//! Everything here is a closed form in the half angles `η₁/2`, `η₂/2`
//! except [`correction_matrix`], which integrates the quadrant phase against
//! `cos nθ` and `sin nθ` along the disk boundary.

use alloc::collections::BTreeMap;
use core::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;

use crate::bessel::{self, BesselOrder};
use crate::error::{Error, Result};
use crate::quadrature::GaussLegendre;
use crate::spectrum::{ModeIndex, Parity};
use crate::{math, DISK_RADIUS, SOFT_AREA};

/// Floquet parameter, stored reduced into `[−π, π)²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloquetPoint {
    eta1: f64,
    eta2: f64,
}

fn reduce(x: f64) -> f64 {
    let mut r = (x + PI) % TAU;
    if r < 0.0 {
        r += TAU;
    }
    if r >= TAU {
        r = 0.0;
    }
    r - PI
}

impl FloquetPoint {
    pub fn new(eta1: f64, eta2: f64) -> Self {
        FloquetPoint { eta1: reduce(eta1), eta2: reduce(eta2) }
    }

    pub const ORIGIN: FloquetPoint = FloquetPoint { eta1: 0.0, eta2: 0.0 };

    pub fn eta1(&self) -> f64 {
        self.eta1
    }

    pub fn eta2(&self) -> f64 {
        self.eta2
    }

    fn half_angles(&self) -> HalfAngles {
        let a = 0.5 * self.eta1;
        let b = 0.5 * self.eta2;
        HalfAngles { sa: math::sin(a), ca: math::cos(a), sb: math::sin(b), cb: math::cos(b) }
    }
}

struct HalfAngles {
    sa: f64,
    ca: f64,
    sb: f64,
    cb: f64,
}

/// Open quadrants of the cell centred on a disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quadrant {
    Q1,
    Q2,
    Q3,
    Q4,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::Q1, Quadrant::Q2, Quadrant::Q3, Quadrant::Q4];

    /// Classifies a point of the cell `[−1/2, 1/2]²`; points on either axis
    /// belong to no open quadrant.
    pub fn of_point(x: [f64; 2]) -> Result<Quadrant> {
        let [x1, x2] = x;
        if !(x1.is_finite() && x2.is_finite()) || x1.abs() > 0.5 || x2.abs() > 0.5 {
            return Err(Error::domain("point lies outside the periodicity cell", x1.abs().max(x2.abs())));
        }
        match (x1.partial_cmp(&0.0), x2.partial_cmp(&0.0)) {
            (Some(core::cmp::Ordering::Greater), Some(core::cmp::Ordering::Greater)) => Ok(Quadrant::Q1),
            (Some(core::cmp::Ordering::Less), Some(core::cmp::Ordering::Greater)) => Ok(Quadrant::Q2),
            (Some(core::cmp::Ordering::Less), Some(core::cmp::Ordering::Less)) => Ok(Quadrant::Q3),
            (Some(core::cmp::Ordering::Greater), Some(core::cmp::Ordering::Less)) => Ok(Quadrant::Q4),
            _ => Err(Error::domain("point lies on a coordinate axis of the cell", if x1 == 0.0 { x2 } else { x1 })),
        }
    }

    /// `(s₁, s₂)` such that the phase is `exp(i(s₁η₁ + s₂η₂)/2)`.
    fn signs(self) -> (f64, f64) {
        match self {
            Quadrant::Q1 => (1.0, 1.0),
            Quadrant::Q2 => (-1.0, 1.0),
            Quadrant::Q3 => (-1.0, -1.0),
            Quadrant::Q4 => (1.0, -1.0),
        }
    }

    /// Shift applied by the cell map on this quadrant.
    fn shift(self) -> [f64; 2] {
        match self {
            Quadrant::Q1 => [-0.5, -0.5],
            Quadrant::Q2 => [0.5, -0.5],
            Quadrant::Q3 => [0.5, 0.5],
            Quadrant::Q4 => [-0.5, 0.5],
        }
    }
}

/// `g_x(η)` on quadrant `q`: `exp(i(±η₁/2 ± η₂/2))` with the sign pattern
/// `(+,+)`, `(−,+)`, `(−,−)`, `(+,−)` for Q1..Q4.
pub fn quadrant_phase(q: Quadrant, eta: FloquetPoint) -> Complex64 {
    let (s1, s2) = q.signs();
    let phi = 0.5 * (s1 * eta.eta1 + s2 * eta.eta2);
    Complex64::new(math::cos(phi), math::sin(phi))
}

/// `g_x(η)` for a point `x` of the cell.
pub fn point_phase(x: [f64; 2], eta: FloquetPoint) -> Result<Complex64> {
    Ok(quadrant_phase(Quadrant::of_point(x)?, eta))
}

/// Half-period shift carrying the cell centred on a disk to the cell centred
/// on a cusp point (and back: the map is an involution).
pub fn cell_map(x: [f64; 2]) -> Result<[f64; 2]> {
    let q = Quadrant::of_point(x)?;
    let s = q.shift();
    Ok([x[0] + s[0], x[1] + s[1]])
}

/// Per-level constants shared by the closed forms.
#[derive(Debug, Clone, Copy)]
struct Level {
    n: u32,
    j: f64,
    /// `J₁(j₀,ₖ)` for `n = 0`, `Jₙ₋₁(jₙ,ₖ) − Jₙ₊₁(jₙ,ₖ)` otherwise.
    bessel_factor: f64,
}

impl Level {
    fn new(n: u32, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("radial index k must be at least 1"));
        }
        let j = bessel::bessel_zero(BesselOrder(n), k)?.value;
        let bessel_factor = if n == 0 {
            bessel::j_unchecked(1, j)
        } else {
            bessel::j_unchecked(n - 1, j) - bessel::j_unchecked(n + 1, j)
        };
        Ok(Level { n, j, bessel_factor })
    }

    /// `(Jₙ₋₁ − Jₙ₊₁)(jₙ,ₖ) / (jₙ,ₖ (1 − π/4))`.
    fn trace_prefactor(&self) -> f64 {
        self.bessel_factor / (self.j * SOFT_AREA)
    }

    fn c0_simple(&self, eta: FloquetPoint) -> f64 {
        let h = eta.half_angles();
        PI / (self.j * SOFT_AREA) * self.bessel_factor * h.ca * h.cb
    }

    fn c0_multiple(&self, eta: FloquetPoint, cc: Complex64, cs: Complex64) -> Complex64 {
        let h = eta.half_angles();
        let nf = f64::from(self.n);
        let scale = self.bessel_factor / (nf * self.j * SOFT_AREA);
        let i = Complex64::new(0.0, 1.0);
        match self.n % 4 {
            0 => Complex64::new(0.0, 0.0),
            2 => cs * (2.0 * scale * h.sa * h.sb),
            1 => -i * scale * (cc * (h.sa * h.cb) + cs * (h.ca * h.sb)),
            _ => i * scale * (cc * (h.sa * h.cb) - cs * (h.ca * h.sb)),
        }
    }

    fn lambda1_simple(&self, eta: FloquetPoint) -> f64 {
        let h = eta.half_angles();
        let t = self.bessel_factor * h.ca * h.cb;
        2.0 * PI / SOFT_AREA * t * t
    }

    fn lambda1_sine(&self, eta: FloquetPoint) -> f64 {
        let h = eta.half_angles();
        let nf = f64::from(self.n);
        let shape = match self.n % 4 {
            0 => 0.0,
            2 => 64.0 / (nf * nf) * (h.sa * h.sa) * (h.sb * h.sb),
            _ => -16.0 / (nf * nf) * ((h.sa * h.sa) * (h.cb * h.cb) + (h.ca * h.ca) * (h.sb * h.sb)),
        };
        self.trace_prefactor() * shape
    }
}

fn require_positive_order(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("order n must be at least 1 for a double eigenvalue"));
    }
    Ok(())
}

/// `c⁰₀,ₖ(η) = π J₁(j₀,ₖ) cos(η₁/2) cos(η₂/2) / (j₀,ₖ (1 − π/4))`.
pub fn c0_simple(k: u32, eta: FloquetPoint) -> Result<f64> {
    Ok(Level::new(0, k)?.c0_simple(eta))
}

/// `c⁰ₙ,ₖ(η)` for a double eigenvalue with eigenfunction coefficients
/// `C_c`, `C_s`. Zero for `n ≡ 0 (mod 4)`; the other residues pick up
/// `sin(η₁/2) sin(η₂/2)` (`n ≡ 2`) or the mixed sine-cosine products (odd
/// `n`).
pub fn c0_multiple(n: u32, k: u32, eta: FloquetPoint, coeff_c: Complex64, coeff_s: Complex64) -> Result<Complex64> {
    require_positive_order(n)?;
    Ok(Level::new(n, k)?.c0_multiple(eta, coeff_c, coeff_s))
}

/// `Λ¹₀,ₖ(η) = 2π/(1 − π/4) · (J₁(j₀,ₖ) cos(η₁/2) cos(η₂/2))²`.
pub fn lambda1_simple(k: u32, eta: FloquetPoint) -> Result<f64> {
    Ok(Level::new(0, k)?.lambda1_simple(eta))
}

/// Cosine and sine first-order corrections of a double eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultipleCorrection {
    pub cosine: f64,
    pub sine: f64,
    /// `n ≡ 0 (mod 4)`: both values are 0 only because the first-order
    /// theory says nothing.
    pub undetermined: bool,
}

/// `(Λ¹ₙ,ₖc, Λ¹ₙ,ₖs) = (0, tr M)` with the trace in closed form.
pub fn lambda1_multiple(n: u32, k: u32, eta: FloquetPoint) -> Result<MultipleCorrection> {
    require_positive_order(n)?;
    let level = Level::new(n, k)?;
    Ok(MultipleCorrection { cosine: 0.0, sine: level.lambda1_sine(eta), undetermined: n.is_multiple_of(4) })
}

/// A 2×2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2(pub [[Complex64; 2]; 2]);

impl Matrix2 {
    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn det(&self) -> Complex64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    /// Both eigenvalues, the one of smaller modulus first.
    pub fn eigenvalues(&self) -> [Complex64; 2] {
        let t = self.trace();
        let disc = (t * t - self.det() * 4.0).sqrt();
        let a = (t + disc) * 0.5;
        let b = (t - disc) * 0.5;
        if a.norm() <= b.norm() {
            [a, b]
        } else {
            [b, a]
        }
    }
}

/// The correction matrix of a double eigenvalue together with the boundary
/// integrals it is built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrectionMatrix {
    pub matrix: Matrix2,
    /// `∮ g_x(η) cos nθ dθ`.
    pub cos_integral: Complex64,
    /// `∮ g_x(η) sin nθ dθ`.
    pub sin_integral: Complex64,
    pub prefactor: f64,
}

pub(crate) const ARC_NODES: usize = 32;
const ARC_TOLERANCE: f64 = 1e-10;
const MAX_ARC_PANELS: usize = 1 << 10;

/// `∫₀^{2π} g_x(η) f(θ) dθ` with `x = (cos θ, sin θ)/2`, integrated as four
/// quarter arcs with `panels` Gauss-Legendre panels each. Nodes are interior
/// to each arc, so the phase is always taken on an open quadrant.
pub fn boundary_integral<F>(eta: FloquetPoint, rule: &GaussLegendre, panels: usize, mut f: F) -> Result<Complex64>
where
    F: FnMut(f64) -> Complex64,
{
    let mut total = Complex64::new(0.0, 0.0);
    for q in 0..4 {
        let a = FRAC_PI_2 * q as f64;
        let b = a + FRAC_PI_2;
        let mut failure = None;
        let arc = rule.integrate(a, b, panels, |theta| {
            let x = [DISK_RADIUS * math::cos(theta), DISK_RADIUS * math::sin(theta)];
            match point_phase(x, eta) {
                Ok(g) => g * f(theta),
                Err(e) => {
                    failure = Some(e);
                    Complex64::new(0.0, 0.0)
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        total += arc;
    }
    Ok(total)
}

/// Runs [`boundary_integral`] with 1, 2, 4, … panels per arc until two
/// successive values differ by less than `1e-10`.
pub fn boundary_integral_converged<F>(eta: FloquetPoint, rule: &GaussLegendre, mut f: F) -> Result<Complex64>
where
    F: FnMut(f64) -> Complex64,
{
    let mut panels = 1;
    let mut previous = boundary_integral(eta, rule, panels, &mut f)?;
    loop {
        panels *= 2;
        let current = boundary_integral(eta, rule, panels, &mut f)?;
        let change = (current - previous).norm();
        if change < ARC_TOLERANCE {
            return Ok(current);
        }
        if panels >= MAX_ARC_PANELS {
            return Err(Error::QuadratureNotConverged { change });
        }
        previous = current;
    }
}

/// `M = prefactor · [[I_c², I_c I_s], [I_c I_s, I_s²]]`, rank one by
/// construction, so its eigenvalues are `0` and `tr M`.
pub fn correction_matrix(n: u32, k: u32, eta: FloquetPoint) -> Result<CorrectionMatrix> {
    require_positive_order(n)?;
    let level = Level::new(n, k)?;
    let rule = GaussLegendre::new(ARC_NODES);
    let nf = f64::from(n);
    let ic = boundary_integral_converged(eta, &rule, |t| Complex64::new(math::cos(nf * t), 0.0))?;
    let is = boundary_integral_converged(eta, &rule, |t| Complex64::new(math::sin(nf * t), 0.0))?;
    let p = level.trace_prefactor();
    let matrix = Matrix2([[ic * ic * p, ic * is * p], [ic * is * p, is * is * p]]);
    Ok(CorrectionMatrix { matrix, cos_integral: ic, sin_integral: is, prefactor: p })
}

/// Which first-order formula a mode follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Simple,
    /// `Λ¹ = 0`.
    Cosine,
    /// `Λ¹ = tr M`.
    Sine,
    /// `n ≡ 0 (mod 4)`.
    Undetermined,
}

impl Branch {
    pub fn of(mode: ModeIndex) -> Branch {
        if mode.is_undetermined() {
            return Branch::Undetermined;
        }
        match mode.parity() {
            Parity::Simple => Branch::Simple,
            Parity::Cosine => Branch::Cosine,
            Parity::Sine => Branch::Sine,
        }
    }
}

/// `η ↦ Λ¹(η)` for one mode, with the Bessel data resolved once.
#[derive(Debug, Clone, Copy)]
pub struct CorrectionValue {
    mode: ModeIndex,
    branch: Branch,
    level: Level,
}

impl CorrectionValue {
    pub fn new(mode: ModeIndex) -> Result<Self> {
        Ok(CorrectionValue { mode, branch: Branch::of(mode), level: Level::new(mode.n(), mode.k())? })
    }

    pub fn mode(&self) -> ModeIndex {
        self.mode
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn zero(&self) -> f64 {
        self.level.j
    }

    pub fn lambda0(&self) -> f64 {
        4.0 * self.level.j * self.level.j
    }

    /// `(Jₙ₋₁ − Jₙ₊₁)(jₙ,ₖ) / (jₙ,ₖ (1 − π/4))`, or `None` for `n = 0`.
    pub fn trace_prefactor(&self) -> Option<f64> {
        (self.mode.n() > 0).then(|| self.level.trace_prefactor())
    }

    /// `J₁(j₀,ₖ)` for `n = 0`, `(Jₙ₋₁ − Jₙ₊₁)(jₙ,ₖ)` otherwise.
    pub fn bessel_factor(&self) -> f64 {
        self.level.bessel_factor
    }

    pub fn at(&self, eta: FloquetPoint) -> Result<f64> {
        match self.branch {
            Branch::Simple => Ok(self.level.lambda1_simple(eta)),
            Branch::Cosine => Ok(0.0),
            Branch::Sine => Ok(self.level.lambda1_sine(eta)),
            Branch::Undetermined => Err(Error::Undetermined { n: self.mode.n(), k: self.mode.k() }),
        }
    }

    /// Like [`at`](Self::at) but returns 0 for undetermined modes.
    pub fn at_or_zero(&self, eta: FloquetPoint) -> f64 {
        self.at(eta).unwrap_or(0.0)
    }
}

/// `ε`, `m` and the error constants `C_{n,k}` of the two-term expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionParams {
    epsilon: f64,
    m: f64,
    default_constant: f64,
    constants: BTreeMap<(u32, u32), f64>,
}

impl ExpansionParams {
    /// `ε > 0`, `0 < m < 1/2`, with every `C_{n,k}` set to `error_constant`.
    pub fn new(epsilon: f64, m: f64, error_constant: f64) -> Result<Self> {
        if !(epsilon.is_finite() && epsilon > 0.0) {
            return Err(Error::domain("epsilon must be positive", epsilon));
        }
        if !(m > 0.0 && m < 0.5) {
            return Err(Error::domain("m must lie strictly inside (0, 1/2)", m));
        }
        check_constant(error_constant)?;
        Ok(ExpansionParams { epsilon, m, default_constant: error_constant, constants: BTreeMap::new() })
    }

    /// Overrides `C_{n,k}` for one level.
    pub fn with_constant(mut self, n: u32, k: u32, c: f64) -> Result<Self> {
        check_constant(c)?;
        self.constants.insert((n, k), c);
        Ok(self)
    }

    pub fn with_epsilon(&self, epsilon: f64) -> Result<Self> {
        let mut p = ExpansionParams::new(epsilon, self.m, self.default_constant)?;
        p.constants = self.constants.clone();
        Ok(p)
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    /// `γ = min(3m, 1)`.
    pub fn gamma(&self) -> f64 {
        (3.0 * self.m).min(1.0)
    }

    /// `ε²ᵐ`.
    pub fn first_order_scale(&self) -> f64 {
        math::powf(self.epsilon, 2.0 * self.m)
    }

    pub fn constant_for(&self, n: u32, k: u32) -> f64 {
        self.constants.get(&(n, k)).copied().unwrap_or(self.default_constant)
    }

    /// `C_{n,k} ε^γ`.
    pub fn pad_for(&self, n: u32, k: u32) -> f64 {
        self.constant_for(n, k) * math::powf(self.epsilon, self.gamma())
    }

    /// A zero constant means the pad is a placeholder, not a bound.
    pub fn pad_is_certified(&self, n: u32, k: u32) -> bool {
        self.constant_for(n, k) > 0.0
    }
}

fn check_constant(c: f64) -> Result<()> {
    if !(c.is_finite() && c >= 0.0) {
        return Err(Error::domain("error constant must be finite and non-negative", c));
    }
    Ok(())
}

/// `Λ⁰ + ε²ᵐ Λ¹(η)` with its `C ε^γ` pad.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Expansion {
    pub value: f64,
    pub pad: f64,
    pub lambda1: f64,
    /// `n ≡ 0 (mod 4)`: `value` is only `Λ⁰` and an unknown `O(ε²ᵐ)` term is
    /// missing on top of `pad`.
    pub undetermined: bool,
    pub pad_certified: bool,
}

impl CorrectionValue {
    pub fn expansion(&self, eta: FloquetPoint, params: &ExpansionParams) -> Expansion {
        let (n, k) = (self.mode.n(), self.mode.k());
        let lambda1 = self.at_or_zero(eta);
        Expansion {
            value: self.lambda0() + params.first_order_scale() * lambda1,
            pad: params.pad_for(n, k),
            lambda1,
            undetermined: self.branch == Branch::Undetermined,
            pad_certified: params.pad_is_certified(n, k),
        }
    }
}

pub fn lambda_expansion(mode: ModeIndex, eta: FloquetPoint, params: &ExpansionParams) -> Result<Expansion> {
    Ok(CorrectionValue::new(mode)?.expansion(eta, params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn near(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn reduction_range() {
        let p = FloquetPoint::new(PI, -PI);
        assert_eq!(p.eta1(), -PI);
        assert_eq!(p.eta2(), -PI);
        let p = FloquetPoint::new(7.0, -9.5);
        assert!((p.eta1() - (7.0 - TAU)).abs() < 1e-15);
        assert!((p.eta2() - (-9.5 + 2.0 * TAU)).abs() < 1e-14);
    }

    #[test]
    fn phase_examples() {
        assert!(near(quadrant_phase(Quadrant::Q1, FloquetPoint::ORIGIN), c(1.0), 0.0));
        let p = quadrant_phase(Quadrant::Q2, FloquetPoint::new(PI, 0.0));
        // (π, 0) reduces to (−π, 0), and exp(iπ/2) = i; the pattern in Q2 is
        // exp(i(−η₁ + η₂)/2).
        assert!(near(p, Complex64::new(0.0, 1.0), 1e-15));
        let p = quadrant_phase(Quadrant::Q2, FloquetPoint { eta1: PI, eta2: 0.0 });
        assert!(near(p, Complex64::new(0.0, -1.0), 1e-15));
        for &(e1, e2) in &[(0.3, -2.0), (3.0, 1.0), (-1.0, -1.5)] {
            let eta = FloquetPoint::new(e1, e2);
            let prod = quadrant_phase(Quadrant::Q1, eta) * quadrant_phase(Quadrant::Q3, eta);
            assert!(near(prod, c(1.0), 1e-15));
            let prod = quadrant_phase(Quadrant::Q2, eta) * quadrant_phase(Quadrant::Q4, eta);
            assert!(near(prod, c(1.0), 1e-15));
        }
    }

    #[test]
    fn quadrant_classification() {
        assert_eq!(Quadrant::of_point([0.1, 0.2]).unwrap(), Quadrant::Q1);
        assert_eq!(Quadrant::of_point([-0.1, 0.2]).unwrap(), Quadrant::Q2);
        assert_eq!(Quadrant::of_point([-0.1, -0.2]).unwrap(), Quadrant::Q3);
        assert_eq!(Quadrant::of_point([0.1, -0.2]).unwrap(), Quadrant::Q4);
        assert!(Quadrant::of_point([0.0, 0.2]).is_err());
        assert!(Quadrant::of_point([0.3, 0.0]).is_err());
        assert!(Quadrant::of_point([0.6, 0.1]).is_err());
        assert!(point_phase([0.0, 0.0], FloquetPoint::ORIGIN).is_err());
    }

    #[test]
    fn cell_map_examples() {
        let y = cell_map([0.3, 0.3]).unwrap();
        assert!((y[0] + 0.2).abs() < 1e-15 && (y[1] + 0.2).abs() < 1e-15);
        for &x in &[[0.3, 0.3], [-0.1, 0.45], [-0.2, -0.35], [0.4, -0.05]] {
            let back = cell_map(cell_map(x).unwrap()).unwrap();
            assert!((back[0] - x[0]).abs() < 1e-15 && (back[1] - x[1]).abs() < 1e-15);
        }
        assert!(cell_map([0.0, 0.1]).is_err());
    }

    #[test]
    fn cell_map_sends_boundary_arcs_to_cusp_circles() {
        for i in 0..200 {
            let theta = TAU * (f64::from(i) + 0.5) / 200.0;
            let x = [0.5 * math::cos(theta), 0.5 * math::sin(theta)];
            let q = Quadrant::of_point(x).unwrap();
            let y = cell_map(x).unwrap();
            let vertex = q.shift();
            let r = math::hypot(y[0] - vertex[0], y[1] - vertex[1]);
            assert!((r - 0.5).abs() < 1e-15);
            // The image lies in the cusp cell.
            assert!(y[0].abs() <= 0.5 && y[1].abs() <= 0.5);
        }
    }

    #[test]
    fn c0_simple_examples() {
        assert!(c0_simple(1, FloquetPoint::new(PI, PI)).unwrap().abs() < 1e-16);
        let j = bessel::bessel_zero(BesselOrder(0), 1).unwrap().value;
        let want = PI * bessel::bessel_j(BesselOrder(1), j).unwrap() / (j * SOFT_AREA);
        assert_eq!(c0_simple(1, FloquetPoint::ORIGIN).unwrap(), want);
        let a = c0_simple(2, FloquetPoint::new(0.7, -1.3)).unwrap();
        let b = c0_simple(2, FloquetPoint::new(-0.7, -1.3)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn c0_multiple_vanishing_cases() {
        let eta = FloquetPoint::new(1.1, -0.4);
        assert_eq!(c0_multiple(4, 1, eta, c(1.0), c(1.0)).unwrap(), c(0.0));
        assert_eq!(c0_multiple(8, 2, eta, c(0.3), c(-2.0)).unwrap(), c(0.0));
        assert_eq!(c0_multiple(2, 1, FloquetPoint::new(0.0, 2.0), c(1.0), c(1.0)).unwrap(), c(0.0));
        assert!(c0_multiple(0, 1, eta, c(1.0), c(0.0)).is_err());
    }

    #[test]
    fn lambda1_simple_examples() {
        assert!(lambda1_simple(1, FloquetPoint::new(PI, PI)).unwrap() < 1e-30);
        let j = bessel::bessel_zero(BesselOrder(0), 1).unwrap().value;
        let j1 = bessel::bessel_j(BesselOrder(1), j).unwrap();
        let want = 2.0 * PI / SOFT_AREA * j1 * j1;
        assert!((lambda1_simple(1, FloquetPoint::ORIGIN).unwrap() - want).abs() < 1e-13);
        let top = lambda1_simple(1, FloquetPoint::ORIGIN).unwrap();
        for i in 0..33 {
            for l in 0..33 {
                let eta = FloquetPoint::new(-PI + TAU * f64::from(i) / 32.0, -PI + TAU * f64::from(l) / 32.0);
                let v = lambda1_simple(1, eta).unwrap();
                assert!(v >= 0.0 && v <= top);
            }
        }
    }

    #[test]
    fn lambda1_multiple_examples() {
        let v = lambda1_multiple(2, 1, FloquetPoint::ORIGIN).unwrap();
        assert_eq!((v.cosine, v.sine), (0.0, 0.0));
        let v = lambda1_multiple(4, 1, FloquetPoint::new(1.0, 2.0)).unwrap();
        assert!(v.undetermined && v.sine == 0.0);
        // Odd n: the sine correction has the sign of −prefactor.
        for k in 1..=2 {
            let level = Level::new(1, k).unwrap();
            for &(e1, e2) in &[(0.5, 0.2), (-2.0, 3.0), (PI, 0.0)] {
                let s = lambda1_multiple(1, k, FloquetPoint::new(e1, e2)).unwrap().sine;
                assert!(s * level.trace_prefactor() <= 0.0);
            }
        }
        let m = correction_matrix(2, 1, FloquetPoint::new(PI, PI)).unwrap();
        let s = lambda1_multiple(2, 1, FloquetPoint::new(PI, PI)).unwrap().sine;
        assert!((s - m.prefactor * 16.0).abs() < 1e-12);
        assert!((m.matrix.trace().re - s).abs() < 1e-8);
    }

    #[test]
    fn correction_matrix_structure() {
        for n in [1u32, 2, 3, 4, 5, 6] {
            for &(e1, e2) in &[(0.0, 0.0), (0.9, -2.2), (PI, PI), (-PI, 1.7)] {
                let eta = FloquetPoint::new(e1, e2);
                let cm = correction_matrix(n, 1, eta).unwrap();
                let t = cm.matrix.trace();
                let [a, b] = cm.matrix.eigenvalues();
                assert!(cm.matrix.det().norm() <= 1e-10);
                assert!(a.norm() <= 1e-10 && (b - t).norm() <= 1e-10);
                if n == 4 {
                    assert!(cm.cos_integral.norm() < 1e-12 && cm.sin_integral.norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn expansion_branches() {
        let params = ExpansionParams::new(1e-3, 0.25, 1.0).unwrap();
        let eta = FloquetPoint::new(0.4, 2.5);
        let cos_mode = ModeIndex::cosine(3, 1).unwrap();
        let e = lambda_expansion(cos_mode, eta, &params).unwrap();
        assert_eq!(e.value, crate::spectrum::limit_eigenvalue(cos_mode).unwrap().lambda0);
        let und = lambda_expansion(ModeIndex::sine(4, 1).unwrap(), eta, &params).unwrap();
        assert!(und.undetermined);
        assert!(CorrectionValue::new(ModeIndex::sine(4, 1).unwrap()).unwrap().at(eta).is_err());
        // pad / ε^{2m} = C ε^{γ − 2m} = ε^{1/4}
        let s = lambda_expansion(ModeIndex::simple(1).unwrap(), eta, &params).unwrap();
        let ratio = s.pad / params.first_order_scale();
        assert!((ratio - libm::pow(1e-3, 0.25)).abs() < 1e-15);
        assert!((params.gamma() - 0.75).abs() < 1e-15);
    }

    #[test]
    fn expansion_vanishing_epsilon() {
        let mode = ModeIndex::sine(1, 1).unwrap();
        let cv = CorrectionValue::new(mode).unwrap();
        let eta = FloquetPoint::new(1.0, 0.3);
        for eps in [1e-2, 1e-6, 1e-12] {
            let params = ExpansionParams::new(eps, 0.3, 2.0).unwrap();
            let e = cv.expansion(eta, &params);
            assert!((e.value - cv.lambda0()).abs() <= 20.0 * params.first_order_scale());
            assert!(e.pad <= 2.0 * libm::pow(eps, 0.9) * 1.0000001);
        }
    }

    #[test]
    fn params_validation() {
        assert!(ExpansionParams::new(0.0, 0.25, 0.0).is_err());
        assert!(ExpansionParams::new(1e-3, 0.5, 0.0).is_err());
        assert!(ExpansionParams::new(1e-3, 0.0, 0.0).is_err());
        assert!(ExpansionParams::new(1e-3, 0.25, -1.0).is_err());
        let p = ExpansionParams::new(1e-3, 0.4, 0.0).unwrap().with_constant(1, 1, 3.0).unwrap();
        assert_eq!(p.gamma(), 1.0);
        assert_eq!(p.constant_for(1, 1), 3.0);
        assert!(!p.pad_is_certified(0, 1));
    }

    fn any_eta() -> impl Strategy<Value = (f64, f64)> {
        (-PI..PI, -PI..PI)
    }

    proptest! {
        #[test]
        fn reduced_points_stay_in_range(e1 in -100.0f64..100.0, e2 in -100.0f64..100.0) {
            let p = FloquetPoint::new(e1, e2);
            prop_assert!(p.eta1() >= -PI && p.eta1() < PI);
            prop_assert!(p.eta2() >= -PI && p.eta2() < PI);
        }

        #[test]
        fn phases_have_unit_modulus((e1, e2) in any_eta()) {
            for q in Quadrant::ALL {
                prop_assert!((quadrant_phase(q, FloquetPoint::new(e1, e2)).norm() - 1.0).abs() < 1e-15);
            }
        }

        #[test]
        fn corrections_are_periodic_and_even((e1, e2) in any_eta(), shift in -3i32..=3) {
            let eta = FloquetPoint::new(e1, e2);
            let moved = FloquetPoint::new(e1 + TAU * f64::from(shift), e2 - TAU * f64::from(shift));
            let flipped = FloquetPoint::new(-e1, -e2);
            for n in 0..=6u32 {
                let mode = if n == 0 { ModeIndex::simple(1).unwrap() } else { ModeIndex::sine(n, 2).unwrap() };
                let cv = CorrectionValue::new(mode).unwrap();
                let v = cv.at_or_zero(eta);
                prop_assert!((cv.at_or_zero(moved) - v).abs() <= 1e-12 * (1.0 + v.abs()));
                prop_assert!((cv.at_or_zero(flipped) - v).abs() <= 1e-12 * (1.0 + v.abs()));
                let swapped = cv.at_or_zero(FloquetPoint::new(e2, e1));
                prop_assert!((swapped - v).abs() <= 1e-12 * (1.0 + v.abs()));
            }
        }
    }
}
