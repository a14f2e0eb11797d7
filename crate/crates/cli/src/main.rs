//! Command-line front end for the surface-wave solver: permittivity tables,
//! lossless dispersion scans, loss continuation traces, two-sided field
//! profiles, and an invariant-suite validator.
//!
//! Exit codes: 0 success, 1 generic/validation failure, 2 configuration
//! error, 3 mode misuse, 4 continuation failure, 5 inadmissible point.

mod commands;
mod config;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use error::CliError;

#[derive(Parser)]
#[command(
    name = "stratwave",
    version,
    about = "Surface waves on a stratified dielectric half-space over a Lorentz medium"
)]
pub struct Cli {
    /// Path to the JSON configuration file.
    #[arg(long, global = true, default_value = "stratwave.json")]
    config: PathBuf,

    /// Output file path (defaults depend on the subcommand).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Dotted-path configuration override, e.g. `--set lorentz.loss_ratio=1e-3`
    /// or `--set polarization=TM` (repeatable).
    #[arg(long = "set", value_name = "KEY=VALUE", global = true)]
    set: Vec<String>,

    /// Omit the timestamp line from output headers (byte-reproducible runs).
    #[arg(long, global = true)]
    no_timestamp: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Tabulate the Lorentz permittivity eps_L(omega_hat) over a frequency range.
    Permittivity {
        /// Lowest omega_hat.
        #[arg(long, default_value_t = 0.1)]
        omega_min: f64,
        /// Highest omega_hat.
        #[arg(long, default_value_t = 3.0)]
        omega_max: f64,
        /// Number of grid points.
        #[arg(long, default_value_t = 256)]
        n: usize,
    },
    /// Scan the lossless (k_hat, omega_hat) plane and emit linked dispersion
    /// branches of admissible surface waves. Requires loss_ratio = 0.
    Scan {
        #[arg(long, default_value_t = 0.05)]
        k_min: f64,
        #[arg(long, default_value_t = 6.0)]
        k_max: f64,
        #[arg(long, default_value_t = 300)]
        n_k: usize,
        #[arg(long, default_value_t = 0.1)]
        omega_min: f64,
        #[arg(long, default_value_t = 3.0)]
        omega_max: f64,
        #[arg(long, default_value_t = 200)]
        n_omega: usize,
    },
    /// Continue a lossy root pair (k_hat, omega_hat) over a range of
    /// log10(gamma/omega_0), starting from a seed point.
    Trace {
        /// log10(gamma/omega_0) at the start of the range.
        #[arg(long, default_value_t = -15.0)]
        log10_gamma_start: f64,
        /// log10(gamma/omega_0) at the end of the range.
        #[arg(long, default_value_t = 15.0)]
        log10_gamma_stop: f64,
        /// Number of points along the range (1 solves at the start only).
        #[arg(long, default_value_t = 300)]
        steps: usize,
        /// Seed k_hat.
        #[arg(long)]
        seed_k: f64,
        /// Seed omega_hat.
        #[arg(long)]
        seed_omega: f64,
    },
    /// Emit the two-sided field profile of an admissible surface wave.
    Profile {
        /// k_hat of the point.
        #[arg(long)]
        k: f64,
        /// omega_hat of the point.
        #[arg(long)]
        omega: f64,
        /// Periods of the stratified side to sample (x3/d in [0, periods]).
        #[arg(long, default_value_t = 6)]
        periods: usize,
        /// Samples per layer on the stratified side.
        #[arg(long, default_value_t = 32)]
        samples_per_layer: usize,
        /// Depth of the Lorentz side to sample (x3/d in [-depth, 0]).
        #[arg(long, default_value_t = 6.0)]
        depth: f64,
        /// Samples on the Lorentz side.
        #[arg(long, default_value_t = 200)]
        depth_samples: usize,
    },
    /// Run the invariant suite against the configuration and report
    /// pass/fail per check; exit 0 only when everything passes.
    Validate,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let loaded = config::load(&cli.config, &cli.set)?;
    let ctx = commands::Ctx {
        loaded,
        config_path: cli.config,
        overrides: cli.set,
        out: cli.out,
        no_timestamp: cli.no_timestamp,
    };
    match cli.command {
        Command::Permittivity { omega_min, omega_max, n } => {
            commands::permittivity::run(&ctx, omega_min, omega_max, n)
        }
        Command::Scan { k_min, k_max, n_k, omega_min, omega_max, n_omega } => {
            commands::scan::run(&ctx, k_min, k_max, n_k, omega_min, omega_max, n_omega)
        }
        Command::Trace { log10_gamma_start, log10_gamma_stop, steps, seed_k, seed_omega } => {
            commands::trace::run(&ctx, log10_gamma_start, log10_gamma_stop, steps, seed_k, seed_omega)
        }
        Command::Profile { k, omega, periods, samples_per_layer, depth, depth_samples } => {
            commands::profile::run(&ctx, k, omega, periods, samples_per_layer, depth, depth_samples)
        }
        Command::Validate => commands::validate::run(&ctx),
    }
}
