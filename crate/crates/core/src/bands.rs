//! Band intervals, band lengths and gap detection for the two-term model
//! `Λ⁰ + ε²ᵐ Λ¹(η) ± C ε^γ`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::correction::{Branch, CorrectionValue, ExpansionParams, FloquetPoint};
use crate::error::{Error, Result};
use crate::spectrum::{enumerate_spectrum, ModeIndex};
use crate::SOFT_AREA;

/// The closed grid `−π + 2πi/(R − 1)`, `i = 0..R`. For odd `R` it contains
/// `0` and both `±π`, so every extremiser of the first-order model is
/// sampled.
pub fn eta_grid(resolution: usize) -> Result<Vec<f64>> {
    if resolution < 2 {
        return Err(Error::InvalidArgument("grid resolution must be at least 2"));
    }
    let step = 2.0 * PI / (resolution - 1) as f64;
    Ok((0..resolution).map(|i| if i + 1 == resolution { PI } else { -PI + step * i as f64 }).collect())
}

/// Points whose components lie in `{0, −π}`; the first-order factors are
/// bilinear in `sin²(η₁/2)`, `sin²(η₂/2)`, so their extrema sit here.
pub const EXTREMAL_CANDIDATES: [(f64, f64); 4] = [(0.0, 0.0), (-PI, 0.0), (0.0, -PI), (-PI, -PI)];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandInterval {
    pub mode: ModeIndex,
    pub lambda0: f64,
    pub lower: f64,
    pub upper: f64,
    pub pad: f64,
    pub pad_certified: bool,
    pub undetermined: bool,
    /// Where the first-order model attains its minimum and maximum.
    pub argmin: FloquetPoint,
    pub argmax: FloquetPoint,
    /// Range of `Λ¹` over the grid.
    pub lambda1_min: f64,
    pub lambda1_max: f64,
}

impl BandInterval {
    /// `upper − lower`, pads included.
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    /// Width of the first-order model alone.
    pub fn first_order_width(&self) -> f64 {
        self.width() - 2.0 * self.pad
    }
}

struct Extremes {
    min: f64,
    max: f64,
    argmin: FloquetPoint,
    argmax: FloquetPoint,
}

fn scan<I: IntoIterator<Item = (f64, f64)>>(cv: &CorrectionValue, points: I) -> Extremes {
    let mut ex = Extremes {
        min: f64::INFINITY,
        max: f64::NEG_INFINITY,
        argmin: FloquetPoint::ORIGIN,
        argmax: FloquetPoint::ORIGIN,
    };
    for (e1, e2) in points {
        let eta = FloquetPoint::new(e1, e2);
        let v = cv.at_or_zero(eta);
        if v < ex.min {
            ex.min = v;
            ex.argmin = eta;
        }
        if v > ex.max {
            ex.max = v;
            ex.argmax = eta;
        }
    }
    ex
}

/// Padded band of `mode` from a grid scan of the first-order model,
/// cross-checked against the analytic extremisers.
pub fn band_interval(mode: ModeIndex, params: &ExpansionParams, grid_resolution: usize) -> Result<BandInterval> {
    if grid_resolution < 3 {
        return Err(Error::InvalidArgument("grid resolution must be at least 3"));
    }
    let cv = CorrectionValue::new(mode)?;
    let grid = eta_grid(grid_resolution)?;
    let scanned = scan(&cv, grid.iter().flat_map(|&a| grid.iter().map(move |&b| (a, b))));
    let analytic = scan(&cv, EXTREMAL_CANDIDATES);

    let spread = analytic.max.abs().max(analytic.min.abs());
    let tolerance = if grid_resolution % 2 == 1 {
        1e-12 * (1.0 + spread)
    } else {
        let d = PI / (grid_resolution - 1) as f64;
        2.0 * spread * d * d + 1e-12 * (1.0 + spread)
    };
    if (scanned.max - analytic.max).abs() > tolerance || (scanned.min - analytic.min).abs() > tolerance {
        return Err(Error::Inconsistent("grid and analytic band extrema disagree"));
    }

    let scale = params.first_order_scale();
    let pad = params.pad_for(mode.n(), mode.k());
    let lambda0 = cv.lambda0();
    Ok(BandInterval {
        mode,
        lambda0,
        lower: lambda0 + scale * scanned.min - pad,
        upper: lambda0 + scale * scanned.max + pad,
        pad,
        pad_certified: params.pad_is_certified(mode.n(), mode.k()),
        undetermined: cv.branch() == Branch::Undetermined,
        argmin: scanned.argmin,
        argmax: scanned.argmax,
        lambda1_min: scanned.min,
        lambda1_max: scanned.max,
    })
}

/// Leading-order band length.
#[derive(Debug, Clone, PartialEq)]
pub struct BandLength {
    /// `None` when the first-order theory leaves the length at `O(ε²ᵐ)`.
    pub leading: Option<f64>,
    pub order_note: String,
}

/// Closed-form length `ε²ᵐ (max Λ¹ − min Λ¹)` of the first-order band.
///
/// Reported as a magnitude: `(J_{n−1} − J_{n+1})(jₙ,ₖ)` alternates in sign
/// with `k`, which flips the direction of the band but not its length.
pub fn band_length(mode: ModeIndex, params: &ExpansionParams) -> Result<BandLength> {
    let cv = CorrectionValue::new(mode)?;
    let scale = params.first_order_scale();
    let gamma = params.gamma();
    let remainder = format!("remainder O(eps^{gamma})");
    let n = f64::from(mode.n());
    let leading = match cv.branch() {
        Branch::Undetermined => {
            return Ok(BandLength {
                leading: None,
                order_note: String::from("O(eps^(2m)); first order undetermined for n = 0 mod 4"),
            });
        }
        Branch::Cosine => 0.0,
        Branch::Simple => {
            let j1 = cv.bessel_factor();
            2.0 * PI / SOFT_AREA * j1 * j1 * scale
        }
        Branch::Sine => {
            let coefficient = if mode.n() % 4 == 2 { 64.0 } else { 16.0 };
            coefficient / (cv.zero() * n * n * SOFT_AREA) * cv.bessel_factor().abs() * scale
        }
    };
    Ok(BandLength { leading: Some(leading), order_note: remainder })
}

/// Why an adjacent pair of bands is not a certified gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GapReason {
    /// Both bands come from the same double eigenvalue.
    SharedLeadingTerm,
    /// One of the bands has `n ≡ 0 (mod 4)`.
    UndeterminedBand,
    /// The padded intervals intersect.
    PadsOverlap,
    /// Both facing edges have zero first-order correction, so the gap width
    /// is not resolved at this order.
    FirstOrderFlat,
}

impl GapReason {
    pub fn code(self) -> &'static str {
        match self {
            GapReason::SharedLeadingTerm => "shared-leading-term",
            GapReason::UndeterminedBand => "undetermined-band",
            GapReason::PadsOverlap => "pads-overlap",
            GapReason::FirstOrderFlat => "first-order-flat",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapReport {
    pub below: ModeIndex,
    pub above: ModeIndex,
    /// Top of the lower band, pad included.
    pub gap_lower: f64,
    /// Bottom of the upper band, pad included.
    pub gap_upper: f64,
    pub certified: bool,
    pub reason: Option<GapReason>,
    /// The pads are placeholders (`C = 0`), so even a certified gap is only
    /// a first-order statement.
    pub pads_uncertified: bool,
    /// `ε^γ` is not small against the first-order widths of the two bands.
    pub epsilon_warning: bool,
}

impl GapReport {
    pub fn width(&self) -> f64 {
        self.gap_upper - self.gap_lower
    }
}

fn negligible(v: f64, band: &BandInterval) -> bool {
    v.abs() <= 1e-12 * (1.0 + band.lambda1_max.abs().max(band.lambda1_min.abs()))
}

fn classify(below: &BandInterval, above: &BandInterval) -> Option<GapReason> {
    if below.mode.same_level(&above.mode) {
        Some(GapReason::SharedLeadingTerm)
    } else if below.undetermined || above.undetermined {
        Some(GapReason::UndeterminedBand)
    } else if below.upper >= above.lower {
        Some(GapReason::PadsOverlap)
    } else if negligible(below.lambda1_max, below) && negligible(above.lambda1_min, above) {
        Some(GapReason::FirstOrderFlat)
    } else {
        None
    }
}

fn epsilon_guard(params: &ExpansionParams, bands: [&BandInterval; 2]) -> bool {
    let smallest =
        bands.iter().map(|b| b.lambda1_max - b.lambda1_min).filter(|&r| r > 0.0).fold(f64::INFINITY, f64::min);
    if !smallest.is_finite() {
        return false;
    }
    let eps_gamma = libm::pow(params.epsilon(), params.gamma());
    eps_gamma >= params.first_order_scale() * smallest
}

/// Bands of the first `spectrum_prefix` limit eigenpairs, in spectral order.
pub fn band_table(
    spectrum_prefix: usize,
    params: &ExpansionParams,
    grid_resolution: usize,
) -> Result<Vec<BandInterval>> {
    enumerate_spectrum(spectrum_prefix)?.into_iter().map(|p| band_interval(p.mode, params, grid_resolution)).collect()
}

/// One report per adjacent pair among the first `spectrum_prefix` bands.
pub fn detect_gaps(spectrum_prefix: usize, params: &ExpansionParams, grid_resolution: usize) -> Result<Vec<GapReport>> {
    if spectrum_prefix < 2 {
        return Err(Error::InvalidArgument("gap detection needs at least two bands"));
    }
    let bands = band_table(spectrum_prefix, params, grid_resolution)?;
    Ok(gaps_between(&bands, params))
}

/// Gap reports for an already computed band table.
pub fn gaps_between(bands: &[BandInterval], params: &ExpansionParams) -> Vec<GapReport> {
    bands
        .windows(2)
        .map(|w| {
            let (below, above) = (&w[0], &w[1]);
            let reason = classify(below, above);
            GapReport {
                below: below.mode,
                above: above.mode,
                gap_lower: below.upper,
                gap_upper: above.lower,
                certified: reason.is_none(),
                reason,
                pads_uncertified: !(below.pad_certified && above.pad_certified),
                epsilon_warning: epsilon_guard(params, [below, above]),
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSample {
    pub eta: FloquetPoint,
    pub value: f64,
}

/// `Λ⁰ + ε²ᵐ Λ¹(η)` on the `resolution × resolution` closed grid, row-major
/// in `η₁` then `η₂`.
pub fn brillouin_sweep(mode: ModeIndex, params: &ExpansionParams, resolution: usize) -> Result<Vec<SweepSample>> {
    let cv = CorrectionValue::new(mode)?;
    let grid = eta_grid(resolution)?;
    let mut out = Vec::with_capacity(resolution * resolution);
    for &e1 in &grid {
        for &e2 in &grid {
            let eta = FloquetPoint::new(e1, e2);
            out.push(SweepSample { eta, value: cv.expansion(eta, params).value });
        }
    }
    Ok(out)
}
