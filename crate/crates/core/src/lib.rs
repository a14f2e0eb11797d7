//! Surface waves on the boundary of a stratified dielectric half-space.
//!
//! The upper half-space `x3 > 0` is a two-layer periodic dielectric (layers A
//! and B, period `d`, fill fraction `h`); the lower half-space is a Lorentz
//! medium with relative permittivity `eps_L(omega)` and constant relative
//! permeability `mu_L`. Waves of the form `U(x3) exp(i(k x1 - omega t))`
//! bound to the interface satisfy a dispersion relation built from the
//! one-period monodromy matrix of the stratified side and the generalised
//! impedance of the Lorentz side.
//!
//! Everything is nondimensional:
//!
//! * `k_hat = d k` (wavenumber), `omega_hat = omega / omega_0` (frequency in
//!   units of the Lorentz resonance), and `rho = omega_0 d / c` couples the
//!   two scales, so `omega d / c = omega_hat * rho`.
//! * Field vectors are `(E1 * omega eps_0 / k, H2)` for TE. With this scaling
//!   the layer propagators and the boundary impedance contain only relative
//!   material constants; the SI impedance is recovered by multiplying the
//!   first component by `Z0 * k_hat / (omega_hat * rho)` with
//!   `Z0 = sqrt(mu_0/eps_0)`.
//! * TM polarisation reuses the TE machinery with the vector `(H1, E2)` and
//!   every relative permittivity replaced by minus the corresponding relative
//!   permeability.
//!
//! The crate is `no_std` (with `alloc`); all operations are pure functions of
//! immutable inputs and safe to call concurrently.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod dispersion;
pub mod error;
pub mod lorentz;
pub mod mat2;
pub mod medium;
pub mod solver;
pub mod tol;
pub mod transfer;

pub use error::{Denominator, Error, Side};
pub use mat2::{eigen_decompose, eigen_decompose_with_det, ComplexMat2, EigenPair};
pub use medium::{LayerParams, LorentzParams, MediumConfig, Polarization, WaveCoordinates};
