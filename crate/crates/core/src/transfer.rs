//! Per-layer propagators, the one-period monodromy matrix (closed form and
//! product-of-exponentials), Floquet factorisation, and decaying field
//! profiles on both sides of the interface.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Side};
use crate::lorentz;
use crate::mat2::{eigen_decompose_with_det, ComplexMat2};
use crate::medium::{chi_sq, nondim_chi, LayerParams, MediumConfig, WaveCoordinates};
use crate::tol;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `(cosh z, sinh z)` scaled by `exp(-m)` with `m = |Re z|` whenever
/// `|Re z|` exceeds [`tol::LOG_FORM`], so deep-gap arguments do not overflow.
pub fn cosh_sinh_scaled(z: Complex64) -> (Complex64, Complex64, f64) {
    if z.re.abs() <= tol::LOG_FORM {
        (z.cosh(), z.sinh(), 0.0)
    } else {
        let m = z.re.abs();
        let ep = (z - m).exp();
        let en = (-z - m).exp();
        ((ep + en) * 0.5, (ep - en) * 0.5, m)
    }
}

/// 4-term series for `sinh(z)/z`, accurate to 1e-12 for `|z| < 1e-6`.
fn sinhc(z: Complex64) -> Complex64 {
    let z2 = z * z;
    Complex64::new(1.0, 0.0) + z2 / 6.0 + z2 * z2 / 120.0 + z2 * z2 * z2 / 5040.0
}

/// The piecewise-constant system matrix `A` in nondimensional form,
/// `U' = A U` with derivatives in `x3/d`:
/// `A = [[0, -i chi^2 k_hat / eps_eff], [i eps_eff k_hat, 0]]`.
///
/// `eps_eff` is the relative permittivity for TE and minus the relative
/// permeability for TM; complex `eps_eff`/`chi^2` cover the Lorentz side.
pub fn system_generator(chi_sq: Complex64, eps_eff: Complex64, k_hat: f64) -> ComplexMat2 {
    ComplexMat2::new(
        Complex64::new(0.0, 0.0),
        -I * chi_sq * k_hat / eps_eff,
        I * eps_eff * k_hat,
        Complex64::new(0.0, 0.0),
    )
}

/// `exp(A * t)` for one homogeneous layer, in the field scaling of the
/// crate: `[[cosh z, -i (chi/eps) sinh z], [i (eps/chi) sinh z, cosh z]]`
/// with `z = chi k_hat t`. The true matrix is `matrix * exp(log_scale)`.
#[derive(Debug, Clone, Copy)]
pub struct LayerPropagator {
    pub matrix: ComplexMat2,
    pub chi: Complex64,
    pub thickness_hat: f64,
    pub log_scale: f64,
}

pub fn layer_propagator(
    layer: &LayerParams,
    cfg: &MediumConfig,
    w: &WaveCoordinates,
    thickness_hat: f64,
) -> LayerPropagator {
    let eps_eff = Complex64::new(cfg.eps_eff(layer), 0.0);
    let c2 = Complex64::new(chi_sq(layer, w, cfg.rho), 0.0);
    let chi = nondim_chi(layer, w, cfg.rho);
    let (matrix, log_scale) = propagator_entries(chi, c2, eps_eff, w.k_hat, thickness_hat);
    LayerPropagator { matrix, chi, thickness_hat, log_scale }
}

fn propagator_entries(
    chi: Complex64,
    chi_sq: Complex64,
    eps_eff: Complex64,
    k_hat: f64,
    t: f64,
) -> (ComplexMat2, f64) {
    let z = chi * k_hat * t;
    if z.norm() < tol::SERIES_SWITCH {
        // Removable singularity at chi = 0: sinh(z)/chi = k_hat t sinhc(z)
        // and the (1,2) entry vanishes like chi^2.
        let sc = sinhc(z);
        let kt = Complex64::new(k_hat * t, 0.0);
        let m = ComplexMat2::new(
            z.cosh(),
            -I * chi_sq * kt * sc / eps_eff,
            I * eps_eff * kt * sc,
            z.cosh(),
        );
        (m, 0.0)
    } else {
        let (c, s, log_scale) = cosh_sinh_scaled(z);
        let m = ComplexMat2::new(c, -I * (chi / eps_eff) * s, I * (eps_eff / chi) * s, c);
        (m, log_scale)
    }
}

/// Decay regime of the stratified half-space at a given `(k_hat, omega_hat)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `|lambda_1| < 1 < |lambda_2|`: one Floquet mode decays into the stack.
    Gap,
    /// Unit-modulus multipliers: oscillatory, nothing decays.
    Band,
    /// Coinciding multipliers (band edge).
    Degenerate,
}

/// One-period propagator with its spectral data. `matrix * exp(log_scale)`
/// is the true monodromy; `eigenvalues` are the true Floquet multipliers,
/// ordered so the decaying one (if any) is index 0.
#[derive(Debug, Clone)]
pub struct Monodromy {
    pub matrix: ComplexMat2,
    pub log_scale: f64,
    pub eigenvalues: [Complex64; 2],
    pub eigenvectors: [[Complex64; 2]; 2],
    pub regime: Regime,
}

/// Monodromy as the product of the two layer propagators,
/// `Phi(d) = P_B(1 - h) P_A(h)`.
pub fn monodromy_product(cfg: &MediumConfig, w: &WaveCoordinates) -> Result<Monodromy, Error> {
    let pa = layer_propagator(&cfg.layer_a, cfg, w, cfg.h);
    let pb = layer_propagator(&cfg.layer_b, cfg, w, 1.0 - cfg.h);
    let matrix = pb.matrix.mul(&pa.matrix);
    let log_scale = pa.log_scale + pb.log_scale;
    // The scaled monodromy is analytically exp(-2 log_scale)-unimodular;
    // forming its determinant from the entries cancels in deep gaps.
    let det = Complex64::new((-2.0 * log_scale).exp(), 0.0);
    let eig = eigen_decompose_with_det(&matrix, det)?;
    let boost = Complex64::new(log_scale.exp(), 0.0);
    let eigenvalues = [eig.values[0] * boost, eig.values[1] * boost];
    let regime = if (eigenvalues[0].norm() - 1.0).abs() <= tol::BAND_EDGE {
        Regime::Band
    } else {
        Regime::Gap
    };
    Ok(Monodromy {
        matrix,
        log_scale,
        eigenvalues,
        eigenvectors: eig.vectors,
        regime,
    })
}

/// Monodromy from the closed-form entries
///
/// ```text
/// [ C_B C_A + (chi_B a / chi_A b) S_B S_A     -i (chi_A/a) C_B S_A - i (chi_B/b) S_B C_A ]
/// [ i (a/chi_A) C_B S_A + i (b/chi_B) S_B C_A  C_B C_A + (chi_A b / chi_B a) S_B S_A     ]
/// ```
///
/// with `a`, `b` the effective layer permittivities,
/// `S_A = sinh(chi_A k_hat h)`, `C_B = cosh(chi_B k_hat (1 - h))`, etc.
/// Returns the same `(matrix, log_scale)` normalisation as
/// [`monodromy_product`]; they must agree to 1e-11 relative.
pub fn monodromy_closed_form(
    cfg: &MediumConfig,
    w: &WaveCoordinates,
) -> Result<(ComplexMat2, f64), Error> {
    let chi_a = nondim_chi(&cfg.layer_a, w, cfg.rho);
    let chi_b = nondim_chi(&cfg.layer_b, w, cfg.rho);
    if chi_a.norm_sqr() < tol::POLE || chi_b.norm_sqr() < tol::POLE {
        return Err(Error::ChiZero);
    }
    let a = Complex64::new(cfg.eps_eff(&cfg.layer_a), 0.0);
    let b = Complex64::new(cfg.eps_eff(&cfg.layer_b), 0.0);
    let (c_a, s_a, m_a) = cosh_sinh_scaled(chi_a * w.k_hat * cfg.h);
    let (c_b, s_b, m_b) = cosh_sinh_scaled(chi_b * w.k_hat * (1.0 - cfg.h));
    let matrix = ComplexMat2::new(
        c_b * c_a + (chi_b * a / (chi_a * b)) * s_b * s_a,
        -I * (chi_a / a) * c_b * s_a - I * (chi_b / b) * s_b * c_a,
        I * (a / chi_a) * c_b * s_a + I * (b / chi_b) * s_b * c_a,
        c_b * c_a + (chi_a * b / (chi_b * a)) * s_b * s_a,
    );
    Ok((matrix, m_a + m_b))
}

/// Canonical fundamental matrix `Phi(x)` of the stratified system at
/// `x = x3/d >= 0` (true, unscaled entries; intended for moderate `x`).
pub fn fundamental_matrix(
    cfg: &MediumConfig,
    w: &WaveCoordinates,
    x: f64,
) -> Result<ComplexMat2, Error> {
    let periods = x.floor();
    let frac = x - periods;
    let mut phi = fractional_propagator(cfg, w, frac);
    if periods > 0.0 {
        let mono = monodromy_product(cfg, w)?;
        let m_true = mono.matrix.scale(Complex64::new(mono.log_scale.exp(), 0.0));
        for _ in 0..(periods as u64) {
            phi = phi.mul(&m_true);
        }
    }
    Ok(phi)
}

/// `Phi(r)` for `r` within one period.
fn fractional_propagator(cfg: &MediumConfig, w: &WaveCoordinates, r: f64) -> ComplexMat2 {
    if r <= cfg.h {
        let p = layer_propagator(&cfg.layer_a, cfg, w, r);
        p.matrix.scale(Complex64::new(p.log_scale.exp(), 0.0))
    } else {
        let pa = layer_propagator(&cfg.layer_a, cfg, w, cfg.h);
        let pb = layer_propagator(&cfg.layer_b, cfg, w, r - cfg.h);
        pb.matrix
            .mul(&pa.matrix)
            .scale(Complex64::new((pa.log_scale + pb.log_scale).exp(), 0.0))
    }
}

/// Floquet factorisation `Phi(x) T = Psi(x) diag(exp(x ln lambda_i))` with
/// `T` the eigenvector matrix of the monodromy and `Psi` d-periodic.
#[derive(Debug, Clone)]
pub struct FloquetFactorization {
    /// Principal logarithms `ln lambda_i` (Floquet exponents per period).
    pub exponents: [Complex64; 2],
    /// Samples `(x/d, Psi(x))` on the requested grid.
    pub psi: Vec<(f64, ComplexMat2)>,
    pub monodromy: Monodromy,
}

pub fn floquet_factorize(
    cfg: &MediumConfig,
    w: &WaveCoordinates,
    grid: &[f64],
) -> Result<FloquetFactorization, Error> {
    let mono = monodromy_product(cfg, w)?;
    let exponents = [mono.eigenvalues[0].ln(), mono.eigenvalues[1].ln()];
    let t = eigenvector_matrix(&mono);
    let mut psi = Vec::with_capacity(grid.len());
    for &x in grid {
        // Psi depends on x only through r = x mod 1, so periodicity is exact:
        // Phi(n + r) T diag(lambda^-(n+r)) = Phi_frac(r) T diag(lambda^-r).
        let r = x - x.floor();
        let phi = fractional_propagator(cfg, w, r);
        let decay = ComplexMat2::new(
            (-exponents[0] * r).exp(),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            (-exponents[1] * r).exp(),
        );
        psi.push((x, phi.mul(&t).mul(&decay)));
    }
    Ok(FloquetFactorization { exponents, psi, monodromy: mono })
}

pub fn eigenvector_matrix(mono: &Monodromy) -> ComplexMat2 {
    ComplexMat2::new(
        mono.eigenvectors[0][0],
        mono.eigenvectors[1][0],
        mono.eigenvectors[0][1],
        mono.eigenvectors[1][1],
    )
}

/// Sampled `(x3/d, U1, U2)` field amplitudes, normalised to `U2(0) = 1`.
/// For TE the components are `(E1, H2)`; for TM they carry `(H1, E2)`.
#[derive(Debug, Clone, Copy)]
pub struct ProfileSample {
    pub x_over_d: f64,
    pub e1: Complex64,
    pub h2: Complex64,
}

#[derive(Debug, Clone)]
pub struct FieldProfile {
    pub samples: Vec<ProfileSample>,
    pub wave: WaveCoordinates,
}

/// Decaying Floquet-mode profile over `x3/d` in `[0, n_periods]`.
///
/// `U(x) = Phi(x) v_1 / v_1[2]` with `v_1` the decaying eigenvector, so the
/// envelope drops by exactly `|lambda_1|` per period.
pub fn stratified_profile(
    cfg: &MediumConfig,
    w: &WaveCoordinates,
    n_periods: usize,
    samples_per_layer: usize,
) -> Result<FieldProfile, Error> {
    let mono = monodromy_product(cfg, w)?;
    if mono.regime != Regime::Gap {
        return Err(Error::NotDecaying(Side::Stratified));
    }
    let v1 = mono.eigenvectors[0];
    let u0 = [v1[0] / v1[1], Complex64::new(1.0, 0.0)];
    let lambda1 = mono.eigenvalues[0];

    // Abscissae within one period, each paired with its propagator applied
    // once; period n then only rescales by lambda_1^n.
    let mut base = Vec::new();
    for j in 0..samples_per_layer {
        base.push(cfg.h * j as f64 / samples_per_layer as f64);
    }
    for j in 0..samples_per_layer {
        base.push(cfg.h + (1.0 - cfg.h) * j as f64 / samples_per_layer as f64);
    }
    let states: Vec<(f64, [Complex64; 2])> = base
        .iter()
        .map(|&r| (r, fractional_propagator(cfg, w, r).apply(u0)))
        .collect();

    let mut samples = Vec::with_capacity(n_periods * states.len() + 1);
    let mut factor = Complex64::new(1.0, 0.0);
    for n in 0..n_periods {
        for (r, u) in &states {
            samples.push(ProfileSample {
                x_over_d: n as f64 + r,
                e1: u[0] * factor,
                h2: u[1] * factor,
            });
        }
        factor *= lambda1;
    }
    samples.push(ProfileSample {
        x_over_d: n_periods as f64,
        e1: u0[0] * factor,
        h2: u0[1] * factor,
    });
    Ok(FieldProfile { samples, wave: *w })
}

/// Exponential profile in the Lorentz half-space over `x3/d` in
/// `[-depth, 0]`, normalised to `U2(0) = 1`:
/// `U(x) = (-i chi_L / eps_eff_L, 1) exp(d alpha_L x)`.
pub fn lorentz_profile(
    cfg: &MediumConfig,
    w: &WaveCoordinates,
    depth: f64,
    samples: usize,
) -> Result<FieldProfile, Error> {
    let eps_l = lorentz::permittivity(&cfg.lorentz, w.omega_hat)?.value;
    let alpha = lorentz::alpha_l_from(eps_l, cfg.lorentz.mu_rel, w, cfg.rho);
    if alpha.re <= 0.0 {
        return Err(Error::NotDecaying(Side::Lorentz));
    }
    let eps_eff = cfg.eps_eff_lorentz(eps_l);
    if eps_eff.norm() < tol::POLE {
        return Err(Error::ZeroPermittivity);
    }
    let e1_at_zero = -I * (alpha / w.k_hat) / eps_eff;
    let n = samples.max(2);
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let x = -depth + depth * j as f64 / (n - 1) as f64;
        let env = (alpha * x).exp();
        out.push(ProfileSample { x_over_d: x, e1: e1_at_zero * env, h2: env });
    }
    Ok(FieldProfile { samples: out, wave: *w })
}
