//! `validate`: run the invariant suite against the loaded configuration and
//! report pass/fail per check (table on stdout, JSON summary on disk).

use num_complex::Complex64;
use serde_json::json;
use stratwave_core::lorentz::{classical_limit_error, permittivity, permittivity_compact};
use stratwave_core::transfer::{
    eigenvector_matrix, floquet_factorize, fundamental_matrix, monodromy_closed_form,
    monodromy_product, Regime,
};
use stratwave_core::{ComplexMat2, MediumConfig, WaveCoordinates};

use super::{linspace, Ctx};
use crate::error::CliError;

struct Check {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> Check {
    Check { name, passed, detail: detail.into() }
}

const SAMPLE_K: [f64; 5] = [0.3, 0.9, 1.7, 2.6, 3.8];
const SAMPLE_OMEGA: [f64; 5] = [0.3, 0.7, 1.3, 2.1, 3.2];

pub fn run(ctx: &Ctx) -> Result<(), CliError> {
    let cfg = &ctx.loaded.config;
    let mut checks = Vec::new();

    let cfg_ok = cfg.validate();
    checks.push(check(
        "config_invariants",
        cfg_ok.is_ok(),
        match &cfg_ok {
            Ok(()) => "all configuration invariants hold".to_string(),
            Err(e) => e.to_string(),
        },
    ));

    if cfg_ok.is_ok() {
        checks.push(permittivity_consistency(cfg));
        checks.push(monodromy_oracle(cfg));
        checks.push(multipliers_unimodular(cfg));
        checks.push(floquet_reconstruction(cfg));
        checks.push(layer_exchange_trace(cfg));
        checks.push(classical_limit_recovery(cfg));
    } else {
        checks.push(check(
            "numeric_suite",
            false,
            "skipped: configuration invariants failed",
        ));
    }

    let all_pass = checks.iter().all(|c| c.passed);
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &checks {
        println!(
            "{:width$}  {}  {}",
            c.name,
            if c.passed { "pass" } else { "FAIL" },
            c.detail,
        );
    }
    println!("result: {}", if all_pass { "all-pass" } else { "failures present" });

    let out = ctx.out_path("validate.json");
    let manifest = ctx.manifest(&out);
    let summary = json!({
        "manifest": {
            "tool": format!("stratwave {}", env!("CARGO_PKG_VERSION")),
            "command": manifest.command,
            "config": manifest.config_path.display().to_string(),
            "config_json": serde_json::from_str::<serde_json::Value>(&ctx.loaded.canonical_json)
                .expect("canonical config parses"),
            "overrides": manifest.overrides,
            "timestamp": manifest.timestamp,
        },
        "all_pass": all_pass,
        "checks": checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    });
    std::fs::write(&out, format!("{}\n", serde_json::to_string_pretty(&summary).unwrap()))?;

    if all_pass {
        Ok(())
    } else {
        Err(CliError::Failed("validation failures present; see report".into()))
    }
}

/// Component-form permittivity agrees with the compact rational form, and a
/// lossless medium has a purely real permittivity away from resonance.
fn permittivity_consistency(cfg: &MediumConfig) -> Check {
    let mut worst: f64 = 0.0;
    let mut im_violation: f64 = 0.0;
    for om in linspace(0.05, 3.5, 40) {
        let Ok(eps) = permittivity(&cfg.lorentz, om) else { continue };
        let compact = permittivity_compact(&cfg.lorentz, om);
        worst = worst.max((eps.value - compact).norm() / compact.norm().max(1.0));
        if cfg.lorentz.loss_ratio == 0.0 {
            im_violation = im_violation.max(eps.value.im.abs());
        } else {
            // Loss must dissipate: Im eps_L <= 0 in this convention.
            im_violation = im_violation.max(eps.value.im.max(0.0));
        }
    }
    check(
        "permittivity_consistency",
        worst < 1e-12 && im_violation == 0.0,
        format!("max form disagreement {worst:.2e}, sign violation {im_violation:.2e}"),
    )
}

/// Closed-form one-period transfer matrix vs the product of layer
/// exponentials, to 1e-11 relative.
fn monodromy_oracle(cfg: &MediumConfig) -> Check {
    let mut worst: f64 = 0.0;
    let mut tested = 0usize;
    for_samples(|w| {
        let (Ok(mono), Ok((closed, ls_closed))) =
            (monodromy_product(cfg, &w), monodromy_closed_form(cfg, &w))
        else {
            return;
        };
        // Compare at a common scale to stay finite in deep gaps.
        let rescale = Complex64::new((ls_closed - mono.log_scale).exp(), 0.0);
        let diff = closed.scale(rescale).sub(&mono.matrix).frobenius_norm();
        worst = worst.max(diff / mono.matrix.frobenius_norm());
        tested += 1;
    });
    check(
        "monodromy_oracle",
        tested > 0 && worst < 1e-11,
        format!("{tested} points, max relative deviation {worst:.2e}"),
    )
}

/// Floquet multipliers multiply to 1 (unimodular transfer across a period).
fn multipliers_unimodular(cfg: &MediumConfig) -> Check {
    let mut worst: f64 = 0.0;
    let mut tested = 0usize;
    for_samples(|w| {
        let Ok(mono) = monodromy_product(cfg, &w) else { return };
        worst = worst.max((mono.eigenvalues[0] * mono.eigenvalues[1] - 1.0).norm());
        tested += 1;
    });
    check(
        "multipliers_unimodular",
        tested > 0 && worst < 1e-12,
        format!("{tested} points, max |lambda1 lambda2 - 1| = {worst:.2e}"),
    )
}

/// In the gap regime, Phi(x) T reconstructs as Psi(x) diag(lambda^x) with
/// d-periodic Psi, to 1e-10 over three periods.
fn floquet_reconstruction(cfg: &MediumConfig) -> Check {
    let grid = linspace(0.0, 3.0, 31);
    let mut worst: f64 = 0.0;
    let mut tested = 0usize;
    for_samples(|w| {
        let Ok(mono) = monodromy_product(cfg, &w) else { return };
        if mono.regime != Regime::Gap || mono.matrix.frobenius_norm() * mono.log_scale.exp() > 1e6 {
            return;
        }
        let Ok(fl) = floquet_factorize(cfg, &w, &grid) else { return };
        let t = eigenvector_matrix(&mono);
        for (x, psi) in &fl.psi {
            let Ok(phi) = fundamental_matrix(cfg, &w, *x) else { continue };
            let lhs = phi.mul(&t);
            let diag = ComplexMat2::new(
                (fl.exponents[0] * *x).exp(),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                (fl.exponents[1] * *x).exp(),
            );
            let rhs = psi.mul(&diag);
            worst = worst.max(lhs.sub(&rhs).frobenius_norm() / lhs.frobenius_norm().max(1.0));
        }
        tested += 1;
    });
    check(
        "floquet_reconstruction",
        worst < 1e-10,
        format!("{tested} gap points, max relative deviation {worst:.2e}"),
    )
}

/// Exchanging the two layers preserves the monodromy trace (band structure),
/// even though the interface residual is not exchange-symmetric.
fn layer_exchange_trace(cfg: &MediumConfig) -> Check {
    let mut swapped = *cfg;
    core::mem::swap(&mut swapped.layer_a, &mut swapped.layer_b);
    swapped.h = 1.0 - cfg.h;
    let mut worst: f64 = 0.0;
    let mut tested = 0usize;
    for_samples(|w| {
        let (Ok(m1), Ok(m2)) = (monodromy_product(cfg, &w), monodromy_product(&swapped, &w))
        else {
            return;
        };
        let t1 = m1.matrix.trace() * Complex64::new(m1.log_scale.exp(), 0.0);
        let t2 = m2.matrix.trace() * Complex64::new(m2.log_scale.exp(), 0.0);
        if !(t1.norm().is_finite() && t2.norm().is_finite()) {
            return;
        }
        worst = worst.max((t1 - t2).norm() / t1.norm().max(1.0));
        tested += 1;
    });
    check(
        "layer_exchange_trace",
        tested > 0 && worst < 1e-11,
        format!("{tested} points, max relative trace deviation {worst:.2e}"),
    )
}

/// The generalised impedance reduces to the classical Leontovich impedance
/// as k_hat^2 / ((omega_hat rho)^2 eps_L) -> 0: the error must shrink by
/// about the parameter ratio (here 1e4) when k_hat drops 100x.
fn classical_limit_recovery(cfg: &MediumConfig) -> Check {
    let om = 0.5;
    let err_at = |k: f64| {
        classical_limit_error(&cfg.lorentz, &WaveCoordinates::new(k, om), cfg.rho)
            .map(|c| c.relative_error)
    };
    match (err_at(1e-2), err_at(1e-4)) {
        (Ok(big), Ok(small)) if small > 0.0 => {
            let ratio = big / small;
            check(
                "classical_limit_recovery",
                (1e3..1e5).contains(&ratio),
                format!("error ratio over 100x wavenumber drop: {ratio:.3e}"),
            )
        }
        (Ok(big), Ok(_)) => check(
            "classical_limit_recovery",
            big < 1e-10,
            format!("limit already exact (error {big:.2e})"),
        ),
        _ => check("classical_limit_recovery", false, "impedance evaluation failed"),
    }
}

fn for_samples(mut f: impl FnMut(WaveCoordinates)) {
    for &k in &SAMPLE_K {
        for &om in &SAMPLE_OMEGA {
            f(WaveCoordinates::new(k, om));
        }
    }
}
