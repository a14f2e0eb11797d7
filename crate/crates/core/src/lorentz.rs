//! Lorentz-oscillator permittivity, the decay exponent `alpha_L`, and the
//! generalised TE/TM surface impedances with their classical limits.
//!
//! Sign conventions, fixed by substituting the candidate decaying solution
//! into the lower-half-space ODE system (the TE system with
//! `eps = eps_L eps_0` and decay as `x3 -> -infinity`):
//!
//! * The decaying solution is `H2 = C exp(alpha_L x3)`,
//!   `E1 = -C i alpha_L / (omega eps_L eps_0) exp(alpha_L x3)`, so the
//!   boundary relation is `E1(0) = -i alpha_L / (omega eps_L eps_0) H2(0)`;
//!   the opposite sign on the interior solution gives a nonzero ODE residual.
//! * For TM the same substitution yields
//!   `H1(0) = +i alpha_L / (omega mu_L mu_0) E2(0)`.
//! * `sigma(omega)` carries a leading minus, so `Im eps_L < 0` for positive
//!   loss under the `exp(i(k x1 - omega t))` convention. It is implemented
//!   exactly as written; the dispersion machinery is sign-agnostic.
//!
//! Nondimensionally the TE impedance is `zeta_TE = chi_L / eps_L` and the TM
//! one `zeta_TM = mu_L / chi_L`; the SI form is recovered as
//! `-i Z0 (k_hat / (omega_hat rho)) zeta_TE` with `Z0 = sqrt(mu_0/eps_0)`.

use num_complex::Complex64;

use crate::error::Error;
use crate::medium::{LorentzParams, WaveCoordinates};
use crate::tol;

/// `eps_L = eps_r + i sigma/omega` split into its exact components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Permittivity {
    pub value: Complex64,
    pub real_part: f64,
    pub loss_over_omega: f64,
}

/// Lorentz permittivity at `omega_hat = omega / omega_0`, component form:
///
/// `eps_r = 1 + P^2 (1 - W^2) / ((1 - W^2)^2 + (W G)^2)`,
/// `sigma/omega = -P^2 W G / ((1 - W^2)^2 + (W G)^2)`
///
/// with `W = omega_hat`, `P = plasma_ratio`, `G = loss_ratio`.
pub fn permittivity(lp: &LorentzParams, omega_hat: f64) -> Result<Permittivity, Error> {
    // No oscillators: exactly vacuum at every frequency, including on the
    // (absent) resonance where the generic formula would evaluate 0/0.
    if lp.plasma_ratio == 0.0 {
        return Ok(Permittivity {
            value: Complex64::new(1.0, 0.0),
            real_part: 1.0,
            loss_over_omega: 0.0,
        });
    }
    if lp.loss_ratio == 0.0 && (omega_hat - 1.0).abs() < tol::RESONANCE {
        return Err(Error::ResonancePole);
    }
    let p2 = lp.plasma_ratio * lp.plasma_ratio;
    let det = 1.0 - omega_hat * omega_hat;
    let wg = omega_hat * lp.loss_ratio;
    let denom = det * det + wg * wg;
    let real_part = 1.0 + p2 * det / denom;
    let loss_over_omega = -p2 * wg / denom;
    Ok(Permittivity {
        value: Complex64::new(real_part, loss_over_omega),
        real_part,
        loss_over_omega,
    })
}

/// Compact form `eps_L = 1 + P^2 / ((1 - W^2) + i W G)`, the independent
/// evaluation path cross-checked against [`permittivity`].
pub fn permittivity_compact(lp: &LorentzParams, omega_hat: f64) -> Complex64 {
    let p2 = lp.plasma_ratio * lp.plasma_ratio;
    let denom = Complex64::new(
        1.0 - omega_hat * omega_hat,
        omega_hat * lp.loss_ratio,
    );
    Complex64::new(1.0, 0.0) + p2 / denom
}

/// Decay exponent scaled by the period:
/// `d alpha_L = sqrt(k_hat^2 - (omega_hat rho)^2 eps_L mu_L)` with
/// `arg` in `(-pi/2, pi/2]`.
pub fn alpha_l(lp: &LorentzParams, w: &WaveCoordinates, rho: f64) -> Result<Complex64, Error> {
    let eps = permittivity(lp, w.omega_hat)?;
    Ok(alpha_l_from(eps.value, lp.mu_rel, w, rho))
}

/// Same, with the permittivity supplied directly (used where a constant,
/// non-dispersive replacement of the Lorentz medium is wanted).
pub fn alpha_l_from(
    eps_l: Complex64,
    mu_l: f64,
    w: &WaveCoordinates,
    rho: f64,
) -> Complex64 {
    let wr = w.omega_hat * rho;
    (Complex64::new(w.k_hat * w.k_hat, 0.0) - wr * wr * mu_l * eps_l).sqrt()
}

/// `chi_L = d alpha_L / k_hat`, the branch slaved to `alpha_L` (for
/// `k_hat > 0` division by a positive real preserves the argument).
pub fn chi_l_from(eps_l: Complex64, mu_l: f64, w: &WaveCoordinates, rho: f64) -> Complex64 {
    alpha_l_from(eps_l, mu_l, w, rho) / w.k_hat
}

/// Generalised TE impedance `zeta_TE = chi_L / eps_L`.
pub fn impedance_te(lp: &LorentzParams, w: &WaveCoordinates, rho: f64) -> Result<Complex64, Error> {
    let eps = permittivity(lp, w.omega_hat)?;
    if eps.value.norm() < tol::POLE {
        return Err(Error::ZeroPermittivity);
    }
    Ok(chi_l_from(eps.value, lp.mu_rel, w, rho) / eps.value)
}

/// Generalised TM impedance `zeta_TM = mu_L / chi_L`.
pub fn impedance_tm(lp: &LorentzParams, w: &WaveCoordinates, rho: f64) -> Result<Complex64, Error> {
    let eps = permittivity(lp, w.omega_hat)?;
    let chi_l = chi_l_from(eps.value, lp.mu_rel, w, rho);
    if chi_l.norm() < tol::POLE {
        return Err(Error::BranchPoint);
    }
    Ok(Complex64::new(lp.mu_rel, 0.0) / chi_l)
}

/// Generalised vs classical Leontovich impedance.
#[derive(Debug, Clone, Copy)]
pub struct LimitComparison {
    pub generalized: Complex64,
    pub classical: Complex64,
    pub relative_error: f64,
}

/// Compares the generalised TE impedance, in its velocity-restored form
/// `-i (d alpha_L) / (omega_hat rho eps_L)`, against the classical
/// Leontovich impedance `sqrt(mu_L / eps_L)`. The relative deviation is
/// `O(|k_hat^2 / ((omega_hat rho)^2 eps_L)|)` as that parameter shrinks.
pub fn classical_limit_error(
    lp: &LorentzParams,
    w: &WaveCoordinates,
    rho: f64,
) -> Result<LimitComparison, Error> {
    let eps = permittivity(lp, w.omega_hat)?;
    if eps.value.norm() < tol::POLE {
        return Err(Error::ZeroPermittivity);
    }
    let wr = w.omega_hat * rho;
    let generalized =
        Complex64::new(0.0, -1.0) * alpha_l_from(eps.value, lp.mu_rel, w, rho) / (wr * eps.value);
    let classical = (Complex64::new(lp.mu_rel, 0.0) / eps.value).sqrt();
    let relative_error = (generalized - classical).norm() / classical.norm();
    Ok(LimitComparison { generalized, classical, relative_error })
}
