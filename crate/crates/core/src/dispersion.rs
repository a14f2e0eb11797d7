//! The surface-wave dispersion residual, admissibility predicates, and the
//! closed-form limit relations used for validation.
//!
//! The residual is the eigenvector condition for the boundary vector
//! `(-i chi_L / l, 1)` of the Lorentz side against the one-period monodromy
//! of the stratified side, expanded into the three-bracket form
//!
//! ```text
//! [chi_A b/(chi_B a) - chi_B a/(chi_A b)] S_A S_B
//!   + [chi_L a/(l chi_A) - l chi_A/(chi_L a)] S_A C_B
//!   + [chi_L b/(l chi_B) - l chi_B/(chi_L b)] S_B C_A  =  0
//! ```
//!
//! where `a`, `b`, `l` are the effective relative permittivities of the two
//! layers and the Lorentz medium (`eps` for TE, `-mu` for TM). Each bracket
//! multiplied by its hyperbolic product is even in `chi_A` and in `chi_B`
//! separately, so the layer square-root branches are immaterial; it is NOT
//! even in `chi_L`, whose branch is slaved to `alpha_L`.

use num_complex::Complex64;

use crate::error::{Denominator, Error};
use crate::lorentz;
use crate::medium::{nondim_chi, LayerParams, MediumConfig, WaveCoordinates};
use crate::tol;
use crate::transfer::cosh_sinh_scaled;

/// Dispersion residual with its diagnostic ingredients.
///
/// `value` is normalised by `exp(-(m_A + m_B))` when the hyperbolic
/// arguments are large enough to be computed in log form (`m = 0`
/// otherwise, making `value` the plain three-bracket sum). `scale` is the
/// same sum with every bracket `r - 1/r` replaced by `|r| + 1/|r|` and the
/// hyperbolic products by their moduli, so it carries the exponential
/// growth of the terms but stays strictly positive at roots; root criteria
/// use `|value| / scale`.
#[derive(Debug, Clone, Copy)]
pub struct ResidualValue {
    pub value: Complex64,
    pub chi_a: Complex64,
    pub chi_b: Complex64,
    pub chi_l: Complex64,
    pub scale: f64,
}

impl ResidualValue {
    pub fn re(&self) -> f64 {
        self.value.re
    }

    pub fn im(&self) -> f64 {
        self.value.im
    }

    /// `value / scale`, the quantity scans and Newton solves drive to zero.
    pub fn scaled(&self) -> Complex64 {
        self.value / self.scale
    }
}

/// Decay diagnostics at a candidate point. A root supports a surface wave
/// only when both half-spaces decay.
#[derive(Debug, Clone, Copy)]
pub struct Admissibility {
    /// `Re(alpha_L) > 0`.
    pub decay_lorentz: bool,
    /// `|multiplier| < 1`.
    pub decay_stratified: bool,
    /// The Floquet multiplier the boundary vector would propagate with; at a
    /// residual root it equals an eigenvalue of the monodromy matrix.
    pub multiplier: Complex64,
    pub admissible: bool,
}

struct Ingredients {
    chi_a: Complex64,
    chi_b: Complex64,
    chi_l: Complex64,
    a: Complex64,
    b: Complex64,
    l: Complex64,
    c_a: Complex64,
    s_a: Complex64,
    c_b: Complex64,
    s_b: Complex64,
    alpha_l: Complex64,
}

/// `(|r| + 1/|r|) |hyp|`: the magnitude envelope of one residual term.
fn bracket_scale(r: Complex64, hyp: Complex64) -> f64 {
    let n = r.norm();
    (n + 1.0 / n) * hyp.norm()
}

fn ingredients(cfg: &MediumConfig, w: &WaveCoordinates) -> Result<Ingredients, Error> {
    let chi_a = nondim_chi(&cfg.layer_a, w, cfg.rho);
    let chi_b = nondim_chi(&cfg.layer_b, w, cfg.rho);
    if chi_a.norm() < tol::POLE {
        return Err(Error::PoleEncountered(Denominator::ChiA));
    }
    if chi_b.norm() < tol::POLE {
        return Err(Error::PoleEncountered(Denominator::ChiB));
    }
    let eps_l = lorentz::permittivity(&cfg.lorentz, w.omega_hat)?.value;
    let alpha_l = lorentz::alpha_l_from(eps_l, cfg.lorentz.mu_rel, w, cfg.rho);
    let chi_l = alpha_l / w.k_hat;
    if chi_l.norm() < tol::POLE {
        return Err(Error::PoleEncountered(Denominator::ChiL));
    }
    let l = cfg.eps_eff_lorentz(eps_l);
    if l.norm() < tol::POLE {
        return Err(Error::PoleEncountered(Denominator::EpsL));
    }
    let (c_a, s_a, m_a) = cosh_sinh_scaled(chi_a * w.k_hat * cfg.h);
    let (c_b, s_b, m_b) = cosh_sinh_scaled(chi_b * w.k_hat * (1.0 - cfg.h));
    let _ = (m_a, m_b); // common factor exp(m_a + m_b) cancels in all uses
    Ok(Ingredients {
        chi_a,
        chi_b,
        chi_l,
        a: Complex64::new(cfg.eps_eff(&cfg.layer_a), 0.0),
        b: Complex64::new(cfg.eps_eff(&cfg.layer_b), 0.0),
        l,
        c_a,
        s_a,
        c_b,
        s_b,
        alpha_l,
    })
}

/// Evaluates the three-bracket dispersion residual.
pub fn residual(cfg: &MediumConfig, w: &WaveCoordinates) -> Result<ResidualValue, Error> {
    let g = ingredients(cfg, w)?;
    let r_ab = g.chi_a * g.b / (g.chi_b * g.a);
    let r_la = g.chi_l * g.a / (g.l * g.chi_a);
    let r_lb = g.chi_l * g.b / (g.l * g.chi_b);
    let one = Complex64::new(1.0, 0.0);
    let t1 = (r_ab - one / r_ab) * g.s_a * g.s_b;
    let t2 = (r_la - one / r_la) * g.s_a * g.c_b;
    let t3 = (r_lb - one / r_lb) * g.s_b * g.c_a;
    let scale = bracket_scale(r_ab, g.s_a * g.s_b)
        + bracket_scale(r_la, g.s_a * g.c_b)
        + bracket_scale(r_lb, g.s_b * g.c_a);
    Ok(ResidualValue {
        value: t1 + t2 + t3,
        chi_a: g.chi_a,
        chi_b: g.chi_b,
        chi_l: g.chi_l,
        scale,
    })
}

/// Evaluates the two decay conditions: `Re(alpha_L) > 0` into the Lorentz
/// side and `|multiplier| < 1` into the stratified side, with
///
/// ```text
/// multiplier = (chi_L/l) (a/chi_A C_B S_A + b/chi_B S_B C_A)
///              + C_B C_A + (chi_A b/(chi_B a)) S_B S_A
/// ```
pub fn admissibility(cfg: &MediumConfig, w: &WaveCoordinates) -> Result<Admissibility, Error> {
    let g = ingredients(cfg, w)?;
    let (c_a, s_a, m_a) = cosh_sinh_scaled(g.chi_a * w.k_hat * cfg.h);
    let (c_b, s_b, m_b) = cosh_sinh_scaled(g.chi_b * w.k_hat * (1.0 - cfg.h));
    let scaled = (g.chi_l / g.l) * (g.a / g.chi_a * c_b * s_a + g.b / g.chi_b * s_b * c_a)
        + c_b * c_a
        + (g.chi_a * g.b / (g.chi_b * g.a)) * s_b * s_a;
    let multiplier = scaled * Complex64::new((m_a + m_b).exp(), 0.0);
    let decay_lorentz = g.alpha_l.re > 0.0;
    let decay_stratified = multiplier.norm() < 1.0;
    Ok(Admissibility {
        decay_lorentz,
        decay_stratified,
        multiplier,
        admissible: decay_lorentz && decay_stratified,
    })
}

/// Closed-form `v_hat^2 = (omega/(k c))^2` for a homogeneous dielectric
/// half-space (`eps_A = eps_B`, `mu_A = mu_B`) against a medium with
/// relative permittivity `eps_l` and permeability `mu_l`:
///
/// `v_hat^2 = (eps_l/eps_A - eps_A/eps_l) / (mu_A eps_l - mu_l eps_A)`.
pub fn homogeneous_vhat_sq(
    layer: &LayerParams,
    mu_l: f64,
    eps_l: Complex64,
) -> Result<Complex64, Error> {
    let eps_a = Complex64::new(layer.eps_rel, 0.0);
    let denom = layer.mu_rel * eps_l - mu_l * eps_a;
    if denom.norm() < tol::POLE {
        return Err(Error::DegenerateDenominator);
    }
    Ok((eps_l / eps_a - eps_a / eps_l) / denom)
}

/// [`homogeneous_vhat_sq`] with the Lorentz permittivity evaluated at
/// `omega_hat`; requires `layer_a == layer_b`.
pub fn homogeneous_dispersion(cfg: &MediumConfig, omega_hat: f64) -> Result<Complex64, Error> {
    if cfg.layer_a != cfg.layer_b {
        return Err(Error::InvalidConfig("homogeneous limit requires identical layers"));
    }
    let eps_l = lorentz::permittivity(&cfg.lorentz, omega_hat)?.value;
    homogeneous_vhat_sq(&cfg.layer_a, cfg.lorentz.mu_rel, eps_l)
}

/// Large-`|eps_l|` limit of the homogeneous relation (classical Leontovich
/// boundary): `omega/(k c) = 1 / sqrt(eps_A mu_A (1 - (mu_l/eps_l)(eps_A/mu_A)))`.
pub fn babich_vhat(layer: &LayerParams, mu_l: f64, eps_l: Complex64) -> Complex64 {
    let ratio = Complex64::new(mu_l * layer.eps_rel / layer.mu_rel, 0.0) / eps_l;
    let one = Complex64::new(1.0, 0.0);
    one / (layer.eps_rel * layer.mu_rel * (one - ratio)).sqrt()
}

/// Residual of the homogeneous relation at a trial `v_hat^2`: zero exactly
/// on the closed-form solution, `eps_A/eps_l` exactly at the Babich point.
pub fn homogeneous_relation_residual(
    layer: &LayerParams,
    mu_l: f64,
    eps_l: Complex64,
    vhat_sq: Complex64,
) -> Complex64 {
    let eps_a = Complex64::new(layer.eps_rel, 0.0);
    vhat_sq * (layer.mu_rel * eps_l - mu_l * eps_a) - (eps_l / eps_a - eps_a / eps_l)
}
