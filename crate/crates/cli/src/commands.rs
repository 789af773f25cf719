use std::fs;
use std::io::Write;

use stiffgap_core::bands::{band_length, band_table, brillouin_sweep, gaps_between, BandInterval};
use stiffgap_core::bessel::{bessel_zero, BesselOrder};
use stiffgap_core::spectrum::{enumerate_spectrum, ModeIndex};

use crate::config::{OutputFormat, OutputPath, RunConfig};
use crate::error::{CliError, CliResult};
use crate::table::{Cell, Table};
use crate::{svg, verify};

/// Relative tolerance between swept band widths and closed-form lengths.
pub const LENGTH_TOLERANCE: f64 = 1e-8;

pub fn write_output(cfg: &RunConfig, text: &str) -> CliResult<()> {
    match &cfg.output_path {
        OutputPath::Stdout => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
        OutputPath::File(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source }),
    }
}

fn render(table: &Table, cfg: &RunConfig, command: &str) -> CliResult<String> {
    match cfg.output_format {
        OutputFormat::Csv => Ok(table.to_csv()),
        OutputFormat::Json => Ok(table.to_json(cfg)),
        OutputFormat::Svg => Err(CliError::usage(format!("{command} does not support --format svg; use csv or json"))),
    }
}

fn require(cond: bool, msg: &str) -> CliResult<()> {
    if cond {
        Ok(())
    } else {
        Err(CliError::usage(msg))
    }
}

fn mode_cells(m: ModeIndex) -> [Cell; 3] {
    [m.n().into(), m.k().into(), m.parity().label().into()]
}

pub fn zeros_table(n_max: u32, k_max: u32) -> CliResult<Table> {
    require(k_max >= 1, "k-max must be at least 1")?;
    let mut t = Table::new(&["n", "k", "j"]);
    for n in 0..=n_max {
        for k in 1..=k_max {
            let z = bessel_zero(BesselOrder(n), k)?;
            t.push(vec![n.into(), k.into(), z.value.into()]);
        }
    }
    Ok(t)
}

pub fn cmd_zeros(n_max: u32, k_max: u32, cfg: &RunConfig) -> CliResult<()> {
    write_output(cfg, &render(&zeros_table(n_max, k_max)?, cfg, "zeros")?)
}

pub fn spectrum_table(count: usize) -> CliResult<Table> {
    require(count >= 1, "count must be at least 1")?;
    let mut t = Table::new(&["n", "k", "parity", "lambda0"]);
    for p in enumerate_spectrum(count)? {
        let [n, k, parity] = mode_cells(p.mode);
        t.push(vec![n, k, parity, p.lambda0.into()]);
    }
    Ok(t)
}

pub fn cmd_spectrum(count: usize, cfg: &RunConfig) -> CliResult<()> {
    write_output(cfg, &render(&spectrum_table(count)?, cfg, "spectrum")?)
}

/// Band intervals, each width checked against its closed-form length.
pub fn checked_bands(count: usize, cfg: &RunConfig) -> CliResult<Vec<(BandInterval, Option<f64>)>> {
    let params = cfg.params()?;
    let bands = band_table(count, &params, cfg.grid_resolution)?;
    let mut out = Vec::with_capacity(bands.len());
    for b in bands {
        let leading = band_length(b.mode, &params)?.leading;
        if let Some(len) = leading {
            let swept = b.first_order_width();
            let scale = len.abs().max(f64::MIN_POSITIVE);
            if (swept - len).abs() > LENGTH_TOLERANCE * scale && !(len == 0.0 && swept.abs() <= 1e-12) {
                return Err(CliError::Inconsistent(format!(
                    "band {} swept width {swept:e} disagrees with closed-form length {len:e}",
                    b.mode
                )));
            }
        }
        out.push((b, leading));
    }
    Ok(out)
}

pub fn bands_table(count: usize, cfg: &RunConfig) -> CliResult<Table> {
    require(count >= 1, "count must be at least 1")?;
    let mut t = Table::new(&[
        "n",
        "k",
        "parity",
        "lambda0",
        "lower",
        "upper",
        "length",
        "pad",
        "pad_certified",
        "undetermined",
        "argmin_eta1",
        "argmin_eta2",
        "argmax_eta1",
        "argmax_eta2",
    ]);
    for (b, leading) in checked_bands(count, cfg)? {
        let [n, k, parity] = mode_cells(b.mode);
        t.push(vec![
            n,
            k,
            parity,
            b.lambda0.into(),
            b.lower.into(),
            b.upper.into(),
            leading.map_or(Cell::Undetermined, Cell::Num),
            b.pad.into(),
            b.pad_certified.into(),
            b.undetermined.into(),
            b.argmin.eta1().into(),
            b.argmin.eta2().into(),
            b.argmax.eta1().into(),
            b.argmax.eta2().into(),
        ]);
    }
    Ok(t)
}

pub fn cmd_bands(count: usize, cfg: &RunConfig) -> CliResult<()> {
    write_output(cfg, &render(&bands_table(count, cfg)?, cfg, "bands")?)
}

pub fn gaps_table(count: usize, cfg: &RunConfig) -> CliResult<(Table, Vec<String>)> {
    require(count >= 2, "count must be at least 2 for gap detection")?;
    let params = cfg.params()?;
    let bands: Vec<BandInterval> = checked_bands(count, cfg)?.into_iter().map(|(b, _)| b).collect();
    let mut t = Table::new(&[
        "below_n",
        "below_k",
        "below_parity",
        "above_n",
        "above_k",
        "above_parity",
        "gap_lower",
        "gap_upper",
        "width",
        "certified",
        "reason",
        "pads_certified",
        "epsilon_warning",
    ]);
    let mut warnings = Vec::new();
    for g in gaps_between(&bands, &params) {
        if g.epsilon_warning {
            warnings.push(format!(
                "eps^gamma is not small against the first-order widths of {} and {}; the gap report may be unreliable",
                g.below, g.above
            ));
        }
        let [bn, bk, bp] = mode_cells(g.below);
        let [an, ak, ap] = mode_cells(g.above);
        t.push(vec![
            bn,
            bk,
            bp,
            an,
            ak,
            ap,
            g.gap_lower.into(),
            g.gap_upper.into(),
            g.width().into(),
            g.certified.into(),
            g.reason.map_or("none", |r| r.code()).into(),
            (!g.pads_uncertified).into(),
            g.epsilon_warning.into(),
        ]);
    }
    Ok((t, warnings))
}

pub fn cmd_gaps(count: usize, cfg: &RunConfig) -> CliResult<()> {
    let (t, warnings) = gaps_table(count, cfg)?;
    for w in warnings {
        eprintln!("warning: {w}");
    }
    write_output(cfg, &render(&t, cfg, "gaps")?)
}

pub fn diagram(count: usize, cfg: &RunConfig) -> CliResult<String> {
    require(count >= 1, "count must be at least 1")?;
    let params = cfg.params()?;
    let bands: Vec<BandInterval> = checked_bands(count, cfg)?.into_iter().map(|(b, _)| b).collect();
    if cfg.output_format == OutputFormat::Svg {
        return Ok(svg::render(&bands, &gaps_between(&bands, &params)));
    }
    let mut t = Table::new(&["n", "k", "parity", "eta1", "eta2", "value"]);
    for b in &bands {
        for s in brillouin_sweep(b.mode, &params, cfg.grid_resolution)? {
            let [n, k, parity] = mode_cells(b.mode);
            t.push(vec![n, k, parity, s.eta.eta1().into(), s.eta.eta2().into(), s.value.into()]);
        }
    }
    render(&t, cfg, "diagram")
}

pub fn cmd_diagram(count: usize, cfg: &RunConfig) -> CliResult<()> {
    write_output(cfg, &diagram(count, cfg)?)
}

pub fn cmd_verify(cfg: &RunConfig) -> CliResult<()> {
    let checks = verify::run_all()?;
    let mut report = String::new();
    for c in &checks {
        report.push_str(&c.line());
        report.push('\n');
    }
    write_output(cfg, &report)?;
    match checks.iter().find(|c| !c.passed) {
        Some(c) => Err(CliError::Inconsistent(format!("check {} failed", c.name))),
        None => Ok(()),
    }
}
