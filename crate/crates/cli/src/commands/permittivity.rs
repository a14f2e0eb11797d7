//! `permittivity`: tabulate eps_L over a frequency grid.

use stratwave_core::lorentz::permittivity;

use super::{linspace, Ctx};
use crate::error::CliError;
use crate::output::{fmt_f64, write_csv};

pub fn run(ctx: &Ctx, omega_min: f64, omega_max: f64, n: usize) -> Result<(), CliError> {
    let cfg = ctx.validated()?;
    if !(omega_min <= omega_max) || n == 0 {
        return Err(CliError::Config("empty frequency range".into()));
    }
    let mut rows = Vec::with_capacity(n);
    for om in linspace(omega_min, omega_max, n) {
        // The lossless resonance pole (gamma = 0, omega_hat = 1) has no
        // finite value; such grid points are skipped.
        if let Ok(eps) = permittivity(&cfg.lorentz, om) {
            rows.push(vec![
                fmt_f64(om),
                fmt_f64(eps.value.re),
                fmt_f64(eps.value.im),
            ]);
        }
    }
    let out = ctx.out_path("permittivity.csv");
    write_csv(&ctx.manifest(&out), &["omega_hat", "re_eps", "im_eps"], &rows)
}
