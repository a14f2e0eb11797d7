//! `trace`: loss continuation of a real (k_hat, omega_hat) root pair over a
//! log10(gamma/omega_0) range.

use stratwave_core::solver::{continue_in_gamma, solve_lossy_point, GammaRange, LossyCurvePoint};
use stratwave_core::WaveCoordinates;

use super::Ctx;
use crate::error::CliError;
use crate::output::{fmt_f64, write_csv};

const COLUMNS: [&str; 4] = ["log10_gamma", "omega_hat", "k_hat", "residual_norm"];

pub fn run(
    ctx: &Ctx,
    log10_gamma_start: f64,
    log10_gamma_stop: f64,
    steps: usize,
    seed_k: f64,
    seed_omega: f64,
) -> Result<(), CliError> {
    let cfg = ctx.validated()?;
    if steps == 0 {
        return Err(CliError::Config("steps must be at least 1".into()));
    }
    let out = ctx.out_path("trace.csv");
    let manifest = ctx.manifest(&out);
    let seed = WaveCoordinates::new(seed_k, seed_omega);

    let points: Vec<LossyCurvePoint> = if steps == 1 {
        // A single point: solve at the start of the range only.
        let lossy = cfg.with_loss(10f64.powf(log10_gamma_start));
        match solve_lossy_point(&lossy, seed) {
            Ok(p) => vec![LossyCurvePoint { log10_gamma: log10_gamma_start, ..p }],
            Err(e) => {
                write_csv(&manifest, &COLUMNS, &[])?;
                return Err(CliError::Continuation(format!("seed did not converge: {e}")));
            }
        }
    } else {
        let range = GammaRange {
            log10_start: log10_gamma_start,
            log10_stop: log10_gamma_stop,
            steps: steps - 1,
        };
        match continue_in_gamma(cfg, seed, &range) {
            Ok(run) => {
                let rows = to_rows(&run.points);
                write_csv(&manifest, &COLUMNS, &rows)?;
                if let Some(last) = run.terminated {
                    let covered = (last - log10_gamma_start)
                        / (log10_gamma_stop - log10_gamma_start);
                    if covered < 0.1 {
                        return Err(CliError::Continuation(format!(
                            "curve terminated at log10_gamma = {last} \
                             ({:.1}% of the range); partial output written",
                            covered * 100.0
                        )));
                    }
                    eprintln!(
                        "warning: curve terminated at log10_gamma = {last}; partial output written"
                    );
                }
                return Ok(());
            }
            Err(e) => {
                write_csv(&manifest, &COLUMNS, &[])?;
                return Err(CliError::Continuation(format!("seed did not converge: {e}")));
            }
        }
    };

    write_csv(&manifest, &COLUMNS, &to_rows(&points))
}

fn to_rows(points: &[LossyCurvePoint]) -> Vec<Vec<String>> {
    points
        .iter()
        .map(|p| {
            vec![
                fmt_f64(p.log10_gamma),
                fmt_f64(p.wave.omega_hat),
                fmt_f64(p.wave.k_hat),
                fmt_f64(p.residual_norm),
            ]
        })
        .collect()
}
