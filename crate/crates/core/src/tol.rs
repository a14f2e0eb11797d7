//! Numerical thresholds shared across the crate.

/// Relative eigenvalue separation below which a 2x2 spectrum is treated as
/// degenerate. Separates genuine Floquet band edges from roundoff.
pub const EIGEN_DEGENERACY: f64 = 1e-10;

/// Absolute floor on ratio denominators (`chi_A`, `chi_B`, `chi_L`,
/// `eps_L`). Scans step over light lines by masking cells that cross it.
pub const POLE: f64 = 1e-14;

/// `|chi * k_hat * t|` below which the `sinh(z)/z` factors of a layer
/// propagator switch to a 4-term series (removable singularity at `chi = 0`).
pub const SERIES_SWITCH: f64 = 1e-6;

/// `Re(chi * k_hat * t)` above which hyperbolic entries are computed with an
/// explicit `exp` log-scale factored out, so large-`k_hat` scans do not
/// overflow.
pub const LOG_FORM: f64 = 300.0;

/// `| |lambda_1| - 1 |` below which a monodromy matrix is classified as
/// band regime (unit-modulus Floquet multipliers).
pub const BAND_EDGE: f64 = 1e-9;

/// Scaled-residual magnitude below which a scan point counts as a root.
pub const ROOT_RESIDUAL: f64 = 1e-9;

/// Bisection bracket width at which root refinement stops.
pub const BISECTION_WIDTH: f64 = 1e-10;

/// Newton convergence: both scaled-residual components below
/// [`ROOT_RESIDUAL`] and the step norm below this.
pub const NEWTON_STEP: f64 = 1e-10;

/// Newton iteration cap for lossy point solves.
pub const NEWTON_MAX_ITER: usize = 50;

/// Maximum number of log-step halvings during gamma continuation before the
/// curve is declared terminated.
pub const CONTINUATION_HALVINGS: usize = 8;

/// `gamma = 0` resonance guard: `|omega_hat - 1|` below this is a pole of the
/// lossless permittivity.
pub const RESONANCE: f64 = 1e-14;
