//! `scan`: lossless dispersion scan, columns solved in parallel, output
//! assembled in deterministic order.

use rayon::prelude::*;
use stratwave_core::solver::{link_branches, scan_column, WavePoint};
use stratwave_core::Polarization;

use super::{linspace, Ctx};
use crate::error::CliError;
use crate::output::{fmt_f64, write_csv};

#[allow(clippy::too_many_arguments)]
pub fn run(
    ctx: &Ctx,
    k_min: f64,
    k_max: f64,
    n_k: usize,
    omega_min: f64,
    omega_max: f64,
    n_omega: usize,
) -> Result<(), CliError> {
    let cfg = ctx.validated()?;
    if cfg.lorentz.loss_ratio != 0.0 {
        return Err(CliError::Mode(
            "scan requires loss_ratio = 0; use `trace` for lossy media".into(),
        ));
    }
    if !(k_min < k_max) || n_k < 2 || !(omega_min < omega_max) || n_omega < 2 {
        return Err(CliError::Config("scan grid must have at least 2x2 points".into()));
    }
    let ks = linspace(k_min, k_max, n_k);
    let oms = linspace(omega_min, omega_max, n_omega);
    // Columns in parallel; collect preserves column order, so branch linking
    // and the emitted file are deterministic.
    let columns: Vec<Vec<WavePoint>> = oms
        .par_iter()
        .map(|&om| {
            scan_column(cfg, om, &ks)
                .into_iter()
                .filter(|p| p.admissible)
                .collect()
        })
        .collect();
    let k_step = (k_max - k_min) / (n_k - 1) as f64;
    let branches = link_branches(&columns, k_step);

    let mut rows = Vec::new();
    for (id, branch) in branches.iter().enumerate() {
        for p in &branch.points {
            rows.push(vec![
                id.to_string(),
                fmt_f64(p.wave.k_hat),
                fmt_f64(p.wave.omega_hat),
            ]);
        }
    }
    let default_name = match cfg.polarization {
        Polarization::TE => "scan_te.csv",
        Polarization::TM => "scan_tm.csv",
    };
    let out = ctx.out_path(default_name);
    write_csv(&ctx.manifest(&out), &["branch_id", "k_hat", "omega_hat"], &rows)
}
