//! Error conditions raised by the solver operations.

use core::fmt;

/// Which ratio denominator vanished in the dispersion residual.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Denominator {
    ChiA,
    ChiB,
    ChiL,
    EpsL,
}

impl fmt::Display for Denominator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Denominator::ChiA => write!(f, "chi_A"),
            Denominator::ChiB => write!(f, "chi_B"),
            Denominator::ChiL => write!(f, "chi_L"),
            Denominator::EpsL => write!(f, "eps_L"),
        }
    }
}

/// Which half-space failed a decay requirement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Stratified,
    Lorentz,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Stratified => write!(f, "stratified half-space"),
            Side::Lorentz => write!(f, "Lorentz half-space"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Monodromy eigenvalues coincide (band edge): Floquet factorisation
    /// into distinct multipliers is unavailable.
    DegenerateSpectrum,
    /// Lossless permittivity evaluated at the resonance `omega_hat = 1`.
    ResonancePole,
    /// `|eps_L|` below the pole floor; the TE impedance has a pole here.
    ZeroPermittivity,
    /// `|chi_L|` below the pole floor; the TM impedance has a pole here.
    BranchPoint,
    /// A layer `chi` vanished; the closed-form monodromy is singular and the
    /// caller should fall back to the product construction.
    ChiZero,
    /// A ratio denominator of the dispersion relation vanished.
    PoleEncountered(Denominator),
    /// The requested field profile does not decay on the named side.
    NotDecaying(Side),
    /// Newton iteration failed to converge.
    NoConvergence,
    /// Newton converged to a root that violates the decay conditions.
    InadmissibleRoot,
    /// Gamma continuation exhausted its step halvings; carries the last
    /// successfully solved `log10(gamma)`.
    CurveTerminated { last_log10_gamma: f64 },
    /// Homogeneous closed-form denominator vanished.
    DegenerateDenominator,
    /// A configuration invariant is violated.
    InvalidConfig(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateSpectrum => write!(f, "degenerate monodromy spectrum (band edge)"),
            Error::ResonancePole => write!(f, "lossless permittivity pole at omega_hat = 1"),
            Error::ZeroPermittivity => write!(f, "eps_L vanishes: TE impedance pole"),
            Error::BranchPoint => write!(f, "chi_L vanishes: TM impedance pole"),
            Error::ChiZero => write!(f, "layer chi vanishes: use the product-form monodromy"),
            Error::PoleEncountered(d) => write!(f, "dispersion residual pole: {d} vanished"),
            Error::NotDecaying(side) => write!(f, "solution does not decay into the {side}"),
            Error::NoConvergence => write!(f, "Newton iteration did not converge"),
            Error::InadmissibleRoot => write!(f, "converged root violates the decay conditions"),
            Error::CurveTerminated { last_log10_gamma } => {
                write!(f, "continuation terminated; last good log10(gamma) = {last_log10_gamma}")
            }
            Error::DegenerateDenominator => {
                write!(f, "homogeneous dispersion denominator vanished")
            }
            Error::InvalidConfig(what) => write!(f, "invalid configuration: {what}"),
        }
    }
}

impl core::error::Error for Error {}
