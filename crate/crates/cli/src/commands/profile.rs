//! `profile`: two-sided field profile of an admissible surface wave,
//! Lorentz half-space first (x3/d < 0), then the stratified stack.

use stratwave_core::dispersion::admissibility;
use stratwave_core::transfer::{lorentz_profile, stratified_profile, FieldProfile};
use stratwave_core::{Error, Side, WaveCoordinates};

use super::Ctx;
use crate::error::CliError;
use crate::output::{fmt_f64, write_csv};

pub fn run(
    ctx: &Ctx,
    k: f64,
    omega: f64,
    periods: usize,
    samples_per_layer: usize,
    depth: f64,
    depth_samples: usize,
) -> Result<(), CliError> {
    let cfg = ctx.validated()?;
    if !(k > 0.0 && omega > 0.0) {
        return Err(CliError::Config("k and omega must be positive".into()));
    }
    let w = WaveCoordinates::new(k, omega);
    let adm = admissibility(cfg, &w).map_err(not_decaying)?;
    if !adm.admissible {
        let side = if !adm.decay_lorentz {
            "the Lorentz half-space (Re alpha_L <= 0)"
        } else {
            "the stratified half-space (|multiplier| >= 1)"
        };
        return Err(CliError::Inadmissible(format!(
            "point (k_hat = {k}, omega_hat = {omega}) does not decay into {side}"
        )));
    }

    let below = lorentz_profile(cfg, &w, depth, depth_samples).map_err(not_decaying)?;
    let above =
        stratified_profile(cfg, &w, periods, samples_per_layer).map_err(not_decaying)?;

    let mut rows = Vec::new();
    push_rows(&mut rows, "lorentz", &below);
    push_rows(&mut rows, "stratified", &above);
    let out = ctx.out_path("profile.csv");
    write_csv(
        &ctx.manifest(&out),
        &["side", "x_over_d", "re_u1", "im_u1", "re_u2", "im_u2"],
        &rows,
    )
}

fn push_rows(rows: &mut Vec<Vec<String>>, side: &str, profile: &FieldProfile) {
    for s in &profile.samples {
        rows.push(vec![
            side.to_string(),
            fmt_f64(s.x_over_d),
            fmt_f64(s.e1.re),
            fmt_f64(s.e1.im),
            fmt_f64(s.h2.re),
            fmt_f64(s.h2.im),
        ]);
    }
}

fn not_decaying(e: Error) -> CliError {
    match e {
        Error::NotDecaying(Side::Lorentz) => {
            CliError::Inadmissible("no decay into the Lorentz half-space".into())
        }
        Error::NotDecaying(Side::Stratified) => {
            CliError::Inadmissible("no decay into the stratified half-space".into())
        }
        other => CliError::Inadmissible(other.to_string()),
    }
}
