//! Material and wave descriptions, all nondimensional.

use num_complex::Complex64;

use crate::error::Error;

/// Lorentz-oscillator half-space, parameterised relative to the resonant
/// frequency `omega_0`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LorentzParams {
    /// `omega_p / omega_0`. Zero makes the half-space vacuum-like
    /// (`eps_L = 1` at every frequency).
    pub plasma_ratio: f64,
    /// `gamma / omega_0`.
    pub loss_ratio: f64,
    /// Relative permeability, a real constant.
    pub mu_rel: f64,
}

/// One homogeneous dielectric layer of the periodic stack.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LayerParams {
    pub eps_rel: f64,
    pub mu_rel: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Polarization {
    TE,
    TM,
}

/// Full nondimensional description of both half-spaces.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MediumConfig {
    pub layer_a: LayerParams,
    pub layer_b: LayerParams,
    /// Fill fraction: A-layers have thickness `h d`, B-layers `(1 - h) d`.
    pub h: f64,
    /// `rho = omega_0 d / c`, coupling the period to the resonant frequency.
    pub rho: f64,
    pub lorentz: LorentzParams,
    pub polarization: Polarization,
}

impl MediumConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.h > 0.0 && self.h < 1.0) {
            return Err(Error::InvalidConfig("h must lie in (0, 1)"));
        }
        if !(self.rho > 0.0) {
            return Err(Error::InvalidConfig("rho must be positive"));
        }
        for layer in [&self.layer_a, &self.layer_b] {
            if !(layer.eps_rel > 0.0) {
                return Err(Error::InvalidConfig("layer eps_rel must be positive"));
            }
            if !(layer.mu_rel > 0.0) {
                return Err(Error::InvalidConfig("layer mu_rel must be positive"));
            }
        }
        if !(self.lorentz.plasma_ratio >= 0.0) {
            return Err(Error::InvalidConfig("plasma_ratio must be nonnegative"));
        }
        if !(self.lorentz.loss_ratio >= 0.0) {
            return Err(Error::InvalidConfig("loss_ratio must be nonnegative"));
        }
        if !self.lorentz.mu_rel.is_finite() {
            return Err(Error::InvalidConfig("lorentz mu_rel must be finite"));
        }
        Ok(())
    }

    /// Same configuration with the loss ratio replaced.
    pub fn with_loss(&self, loss_ratio: f64) -> Self {
        let mut cfg = *self;
        cfg.lorentz.loss_ratio = loss_ratio;
        cfg
    }

    /// Effective permittivity factor of a layer for the configured
    /// polarisation: `eps_rel` for TE, `-mu_rel` for TM.
    pub fn eps_eff(&self, layer: &LayerParams) -> f64 {
        match self.polarization {
            Polarization::TE => layer.eps_rel,
            Polarization::TM => -layer.mu_rel,
        }
    }

    /// Effective Lorentz permittivity factor: `eps_L` for TE, `-mu_L` for TM.
    pub fn eps_eff_lorentz(&self, eps_l: Complex64) -> Complex64 {
        match self.polarization {
            Polarization::TE => eps_l,
            Polarization::TM => Complex64::new(-self.lorentz.mu_rel, 0.0),
        }
    }
}

/// A candidate `(k_hat, omega_hat)` pair.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WaveCoordinates {
    /// `d k`
    pub k_hat: f64,
    /// `omega / omega_0`
    pub omega_hat: f64,
}

impl WaveCoordinates {
    pub fn new(k_hat: f64, omega_hat: f64) -> Self {
        Self { k_hat, omega_hat }
    }

    /// Phase-velocity factor `v_hat = v_p / c = omega_hat * rho / k_hat`.
    pub fn v_hat(&self, rho: f64) -> f64 {
        self.omega_hat * rho / self.k_hat
    }
}

/// `chi = sqrt(1 - v_hat^2 mu_rel eps_rel)` for a dielectric layer, on the
/// principal branch (`arg` in `(-pi/2, pi/2]`): real below the layer light
/// line, purely imaginary above it.
pub fn nondim_chi(layer: &LayerParams, w: &WaveCoordinates, rho: f64) -> Complex64 {
    Complex64::new(chi_sq(layer, w, rho), 0.0).sqrt()
}

/// `chi^2 = 1 - v_hat^2 mu_rel eps_rel`, always real for lossless layers.
pub fn chi_sq(layer: &LayerParams, w: &WaveCoordinates, rho: f64) -> f64 {
    let v = w.v_hat(rho);
    1.0 - v * v * layer.mu_rel * layer.eps_rel
}
