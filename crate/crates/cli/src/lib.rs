//! Command-line front end for `stiffgap-core`.

pub mod commands;
pub mod config;
pub mod error;
pub mod svg;
pub mod table;
pub mod verify;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::config::{OutputFormat, Overrides, RunConfig};
use crate::error::CliResult;

#[derive(Debug, Parser)]
#[command(
    name = "stiffgap",
    version,
    about = "Leading-order band-gap structure of a stiff Laplacian perforated by touching disks"
)]
pub struct Cli {
    /// Contrast parameter ε > 0 [default: 1e-3]
    #[arg(long, global = true)]
    pub epsilon: Option<f64>,

    /// Density exponent m in (0, 1/2) [default: 0.25]
    #[arg(long, global = true)]
    pub m: Option<f64>,

    /// Points per Floquet axis, at least 3 [default: 33]
    #[arg(long, global = true)]
    pub grid: Option<usize>,

    /// Output format [default: csv]
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// Output file, `-` for standard output [default: -]
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// TOML file with the same keys; flags take precedence
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Error constant C used for every level without its own entry [default: 0]
    #[arg(long, global = true)]
    pub error_constant: Option<f64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive zeros j(n,k) of the Bessel functions
    Zeros {
        #[arg(long, default_value_t = 5)]
        n_max: u32,
        #[arg(long, default_value_t = 5)]
        k_max: u32,
    },
    /// Limit eigenvalues 4 j(n,k)^2 in ascending order
    Spectrum {
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Band intervals and lengths of the two-term expansion
    Bands {
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Gaps between adjacent bands
    Gaps {
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Band diagram (svg) or Floquet sweep samples (csv, json)
    Diagram {
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Cross-check the closed forms against brute-force oracles
    Verify,
}

impl Cli {
    pub fn run_config(&self) -> CliResult<RunConfig> {
        let file = self.config.as_deref().map(RunConfig::load_file).transpose()?;
        let flags = Overrides {
            epsilon: self.epsilon,
            m: self.m,
            grid: self.grid,
            format: self.format,
            out: self.out.clone(),
            error_constant: self.error_constant,
            error_constants: Default::default(),
        };
        RunConfig::resolve(file, flags)
    }

    pub fn run(&self) -> CliResult<()> {
        let cfg = self.run_config()?;
        match self.command {
            Command::Zeros { n_max, k_max } => commands::cmd_zeros(n_max, k_max, &cfg),
            Command::Spectrum { count } => commands::cmd_spectrum(count, &cfg),
            Command::Bands { count } => commands::cmd_bands(count, &cfg),
            Command::Gaps { count } => commands::cmd_gaps(count, &cfg),
            Command::Diagram { count } => commands::cmd_diagram(count, &cfg),
            Command::Verify => commands::cmd_verify(&cfg),
        }
    }
}
