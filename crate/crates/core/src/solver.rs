//! Root finding on the dispersion residual: lossless grid scans with
//! bisection refinement and branch linking, lossy two-constraint Newton
//! solves in the real `(k_hat, omega_hat)` pair, and predictor-corrector
//! continuation in the loss ratio.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use crate::dispersion::{admissibility, residual};
use crate::error::Error;
use crate::lorentz;
use crate::medium::{MediumConfig, WaveCoordinates};
use crate::tol;

/// Rectangular `(k_hat, omega_hat)` scan window with uniform spacing.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ScanGrid {
    pub k_min: f64,
    pub k_max: f64,
    pub n_k: usize,
    pub omega_min: f64,
    pub omega_max: f64,
    pub n_omega: usize,
}

impl ScanGrid {
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.k_min > 0.0 && self.k_max > self.k_min) {
            return Err(Error::InvalidConfig("scan grid needs 0 < k_min < k_max"));
        }
        if !(self.omega_min > 0.0 && self.omega_max > self.omega_min) {
            return Err(Error::InvalidConfig(
                "scan grid needs 0 < omega_min < omega_max",
            ));
        }
        if self.n_k < 2 || self.n_omega < 2 {
            return Err(Error::InvalidConfig("scan grid needs at least 2x2 points"));
        }
        Ok(())
    }

    pub fn k_values(&self) -> Vec<f64> {
        linspace(self.k_min, self.k_max, self.n_k)
    }

    pub fn omega_values(&self) -> Vec<f64> {
        linspace(self.omega_min, self.omega_max, self.n_omega)
    }

    pub fn k_step(&self) -> f64 {
        (self.k_max - self.k_min) / (self.n_k - 1) as f64
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(|i| lo + step * i as f64).collect()
}

/// A refined root of the dispersion residual with its decay diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct WavePoint {
    pub wave: WaveCoordinates,
    pub admissible: bool,
    /// `|multiplier|` of the decay mode into the stack; < 1 means decaying.
    pub multiplier_norm: f64,
}

/// A connected dispersion branch, ordered by ascending `omega_hat`.
#[derive(Debug, Clone, Default)]
pub struct DispersionBranch {
    pub points: Vec<WavePoint>,
}

impl DispersionBranch {
    /// Lowest-frequency point of the branch (cut-on end).
    pub fn cuton(&self) -> Option<&WavePoint> {
        self.points.first()
    }
}

/// Lossless real-axis residual at fixed `omega_hat`, masked to the region
/// where the Lorentz side can decay (`alpha_L^2 > 0`). `None` marks a pole
/// or a non-decaying cell; sign changes of `Some` values bracket roots.
fn column_value(cfg: &MediumConfig, k: f64, omega_hat: f64) -> Option<f64> {
    let wr = omega_hat * cfg.rho;
    let eps_l = lorentz::permittivity(&cfg.lorentz, omega_hat).ok()?.value;
    let alpha_sq = k * k - wr * wr * cfg.lorentz.mu_rel * eps_l.re;
    if alpha_sq <= 0.0 {
        return None;
    }
    let w = WaveCoordinates::new(k, omega_hat);
    let r = residual(cfg, &w).ok()?;
    if r.scale == 0.0 {
        return None;
    }
    Some(r.scaled().re)
}

/// All refined roots in `k_hat` along one fixed-`omega_hat` column.
///
/// Cells touching a pole of the residual or the `alpha_L = 0` branch point
/// are skipped; bisection narrows each bracket to [`tol::BISECTION_WIDTH`].
pub fn scan_column(cfg: &MediumConfig, omega_hat: f64, k_values: &[f64]) -> Vec<WavePoint> {
    let mut out = Vec::new();
    let vals: Vec<Option<f64>> = k_values
        .iter()
        .map(|&k| column_value(cfg, k, omega_hat))
        .collect();
    for i in 1..k_values.len() {
        let (Some(f_lo), Some(f_hi)) = (vals[i - 1], vals[i]) else {
            continue;
        };
        if f_lo == 0.0 {
            // Exact hit on a grid node; the i-1 cell already reported it.
            continue;
        }
        if f_lo * f_hi > 0.0 {
            continue;
        }
        if let Some(k_root) =
            bisect(|k| column_value(cfg, k, omega_hat), k_values[i - 1], k_values[i], f_lo)
        {
            let w = WaveCoordinates::new(k_root, omega_hat);
            if let Ok(adm) = admissibility(cfg, &w) {
                out.push(WavePoint {
                    wave: w,
                    admissible: adm.admissible,
                    multiplier_norm: adm.multiplier.norm(),
                });
            }
        }
    }
    out
}

/// Bisection on a masked function; gives up if an interior evaluation hits a
/// masked cell (pole wandered into the bracket).
fn bisect<F: Fn(f64) -> Option<f64>>(f: F, mut lo: f64, mut hi: f64, mut f_lo: f64) -> Option<f64> {
    while hi - lo > tol::BISECTION_WIDTH {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Some(mid);
        }
        if f_lo * f_mid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Scans the whole grid (lossless configurations only) and links the
/// per-column roots into branches.
pub fn scan_lossless(cfg: &MediumConfig, grid: &ScanGrid) -> Result<Vec<DispersionBranch>, Error> {
    cfg.validate()?;
    grid.validate()?;
    if cfg.lorentz.loss_ratio != 0.0 {
        return Err(Error::InvalidConfig(
            "real-axis scan requires loss_ratio = 0; use the loss continuation instead",
        ));
    }
    let k_values = grid.k_values();
    let columns: Vec<Vec<WavePoint>> = grid
        .omega_values()
        .iter()
        .map(|&om| scan_column(cfg, om, &k_values))
        .collect();
    Ok(link_branches(&columns, grid.k_step()))
}

/// Joins per-column roots into branches by nearest-neighbour matching:
/// a root continues the branch whose latest point lies within two grid
/// steps in `k_hat` and at most two columns back; everything else opens a
/// new branch. Splits conservatively: one root extends at most one branch.
pub fn link_branches(columns: &[Vec<WavePoint>], k_step: f64) -> Vec<DispersionBranch> {
    struct Open {
        points: Vec<WavePoint>,
        last_col: usize,
    }
    let mut open: Vec<Open> = Vec::new();
    let mut closed: Vec<DispersionBranch> = Vec::new();
    let gate = 2.0 * k_step;
    for (col, roots) in columns.iter().enumerate() {
        let mut taken = alloc::vec![false; roots.len()];
        // Greedy by distance: repeatedly match the closest (branch, root)
        // pair inside the gate.
        loop {
            let mut best: Option<(usize, usize, f64)> = None;
            for (bi, b) in open.iter().enumerate() {
                if col - b.last_col > 2 || b.last_col == col {
                    continue;
                }
                let k_last = b.points.last().unwrap().wave.k_hat;
                for (ri, r) in roots.iter().enumerate() {
                    if taken[ri] {
                        continue;
                    }
                    let d = (r.wave.k_hat - k_last).abs();
                    if d <= gate && best.map_or(true, |(_, _, bd)| d < bd) {
                        best = Some((bi, ri, d));
                    }
                }
            }
            let Some((bi, ri, _)) = best else { break };
            open[bi].points.push(roots[ri]);
            open[bi].last_col = col;
            taken[ri] = true;
        }
        for (ri, r) in roots.iter().enumerate() {
            if !taken[ri] {
                open.push(Open {
                    points: alloc::vec![*r],
                    last_col: col,
                });
            }
        }
        // Retire branches that fell more than two columns behind.
        let mut i = 0;
        while i < open.len() {
            if col - open[i].last_col > 2 {
                let b = open.swap_remove(i);
                closed.push(DispersionBranch { points: b.points });
            } else {
                i += 1;
            }
        }
    }
    closed.extend(open.into_iter().map(|b| DispersionBranch { points: b.points }));
    // Deterministic order: by cut-on (omega, then k).
    closed.sort_by(|a, b| {
        let ka = a.points.first().map(|p| (p.wave.omega_hat, p.wave.k_hat));
        let kb = b.points.first().map(|p| (p.wave.omega_hat, p.wave.k_hat));
        ka.partial_cmp(&kb).unwrap_or(core::cmp::Ordering::Equal)
    });
    closed
}

/// Lowest-`omega_hat` root along a fixed-`k_hat` cut, refined by bisection
/// in `omega_hat`. Cells where the Lorentz permittivity changes sign (its
/// zero is a pole of the residual) are skipped.
pub fn lowest_root_in_omega(
    cfg: &MediumConfig,
    k_hat: f64,
    omega_values: &[f64],
) -> Option<WavePoint> {
    let f = |om: f64| column_value(cfg, k_hat, om);
    let eps_sign = |om: f64| {
        lorentz::permittivity(&cfg.lorentz, om)
            .map(|e| e.value.re > 0.0)
            .ok()
    };
    for i in 1..omega_values.len() {
        let (lo, hi) = (omega_values[i - 1], omega_values[i]);
        let (Some(f_lo), Some(f_hi)) = (f(lo), f(hi)) else {
            continue;
        };
        if eps_sign(lo) != eps_sign(hi) {
            continue;
        }
        if f_lo != 0.0 && f_lo * f_hi > 0.0 {
            continue;
        }
        if let Some(om_root) = bisect(&f, lo, hi, f_lo) {
            let w = WaveCoordinates::new(k_hat, om_root);
            if let Ok(adm) = admissibility(cfg, &w) {
                return Some(WavePoint {
                    wave: w,
                    admissible: adm.admissible,
                    multiplier_norm: adm.multiplier.norm(),
                });
            }
        }
    }
    None
}

/// A converged lossy root at one loss ratio: a real `(k_hat, omega_hat)`
/// pair on which both the real and imaginary parts of the scaled residual
/// vanish.
#[derive(Debug, Clone, Copy)]
pub struct LossyCurvePoint {
    pub log10_gamma: f64,
    pub wave: WaveCoordinates,
    /// `|residual| / scale` at the accepted iterate.
    pub residual_norm: f64,
}

fn converged(f: Complex64) -> bool {
    f.re.abs() < tol::ROOT_RESIDUAL && f.im.abs() < tol::ROOT_RESIDUAL
}

/// Damped Newton iteration on the real pair `(k_hat, omega_hat)` for a
/// simultaneous zero of the real and imaginary parts of the scaled residual
/// (two constraints, two real unknowns).
///
/// The Jacobian is a central finite difference with step
/// `1e-6 * max(1, |coordinate|)`; a step is halved until it does not
/// increase `|F|` (at most [`tol::CONTINUATION_HALVINGS`] times). Converges
/// when both residual components are below [`tol::ROOT_RESIDUAL`] and the
/// last step is below [`tol::NEWTON_STEP`]; gives up after
/// [`tol::NEWTON_MAX_ITER`] iterations or on a singular Jacobian. The
/// converged point must additionally pass the decay conditions or
/// [`Error::InadmissibleRoot`] is returned.
pub fn solve_lossy_point(cfg: &MediumConfig, seed: WaveCoordinates) -> Result<LossyCurvePoint, Error> {
    let eval = |k: f64, om: f64| -> Result<Complex64, Error> {
        // The model lives in k_hat > 0, omega_hat > 0; iterates outside the
        // domain are rejected so damping backs the step off.
        if !(k > 0.0 && om > 0.0) {
            return Err(Error::InvalidConfig("wave coordinates must stay positive"));
        }
        let r = residual(cfg, &WaveCoordinates::new(k, om))?;
        if r.scale == 0.0 {
            return Err(Error::DegenerateDenominator);
        }
        Ok(r.scaled())
    };
    let point = |k: f64, om: f64, res: f64| -> Result<LossyCurvePoint, Error> {
        let w = WaveCoordinates::new(k, om);
        if !admissibility(cfg, &w)?.admissible {
            return Err(Error::InadmissibleRoot);
        }
        Ok(LossyCurvePoint {
            log10_gamma: if cfg.lorentz.loss_ratio > 0.0 {
                cfg.lorentz.loss_ratio.log10()
            } else {
                f64::NEG_INFINITY
            },
            wave: w,
            residual_norm: res,
        })
    };
    let (mut k, mut om) = (seed.k_hat, seed.omega_hat);
    let mut f = eval(k, om)?;
    if converged(f) {
        return point(k, om, f.norm());
    }
    for _ in 0..tol::NEWTON_MAX_ITER {
        let hk = 1e-6 * k.abs().max(1.0);
        let hw = 1e-6 * om.abs().max(1.0);
        let d_k = (eval(k + hk, om)? - eval(k - hk, om)?) / (2.0 * hk);
        let d_w = (eval(k, om + hw)? - eval(k, om - hw)?) / (2.0 * hw);
        // Real 2x2 system J * delta = -F with columns d_k, d_w.
        let det = d_k.re * d_w.im - d_w.re * d_k.im;
        if det.abs() < 1e-300 {
            return Err(Error::NoConvergence);
        }
        let dk = (-f.re * d_w.im + f.im * d_w.re) / det;
        let dw = (-d_k.re * f.im + d_k.im * f.re) / det;
        let mut damping = 1.0;
        let mut accepted = None;
        for _ in 0..=tol::CONTINUATION_HALVINGS {
            let (kt, wt) = (k + dk * damping, om + dw * damping);
            if let Ok(ft) = eval(kt, wt) {
                if ft.norm() <= f.norm() {
                    let step = (dk * dk + dw * dw).sqrt() * damping;
                    accepted = Some((kt, wt, ft, step));
                    break;
                }
            }
            damping *= 0.5;
        }
        let Some((k_new, w_new, f_new, step)) = accepted else {
            return Err(Error::NoConvergence);
        };
        (k, om, f) = (k_new, w_new, f_new);
        if converged(f) && step < tol::NEWTON_STEP {
            return point(k, om, f.norm());
        }
    }
    Err(Error::NoConvergence)
}

/// Loss-ratio sweep in `log10(gamma / omega_0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GammaRange {
    pub log10_start: f64,
    pub log10_stop: f64,
    /// Number of steps at the nominal resolution (>= 1).
    pub steps: usize,
}

/// Result of a loss continuation: the converged points, plus the last good
/// `log10(gamma)` if the curve could not be continued to the end of the
/// range even after step halving.
#[derive(Debug, Clone)]
pub struct ContinuationRun {
    pub points: Vec<LossyCurvePoint>,
    pub terminated: Option<f64>,
}

/// Tracks a lossy root pair `(k_hat, omega_hat)` from `gamma = 10^log10_start`
/// to `10^log10_stop`.
///
/// Linear predictor in `log10(gamma)` from the last two points, Newton
/// corrector at each step; on corrector failure the step is halved up to
/// [`tol::CONTINUATION_HALVINGS`] times before the run is declared
/// terminated (branch death or admissibility loss).
pub fn continue_in_gamma(
    cfg: &MediumConfig,
    seed: WaveCoordinates,
    range: &GammaRange,
) -> Result<ContinuationRun, Error> {
    if range.steps == 0 || range.log10_stop == range.log10_start {
        return Err(Error::InvalidConfig("gamma range must be nonempty"));
    }
    let at = |t: f64| cfg.with_loss(Float::powf(10.0, t));
    let mut t = range.log10_start;
    let first = solve_lossy_point(&at(t), seed)?;
    let mut points = alloc::vec![LossyCurvePoint { log10_gamma: t, ..first }];
    let nominal = (range.log10_stop - range.log10_start) / range.steps as f64;
    let mut dt = nominal;
    let mut halvings = 0usize;
    while (range.log10_stop - t) * nominal.signum() > 1e-12 {
        let mut step = dt;
        if (range.log10_stop - (t + step)) * nominal.signum() < 0.0 {
            step = range.log10_stop - t;
        }
        let t_next = t + step;
        // Linear predictor through the last two accepted points.
        let guess = if points.len() >= 2 {
            let p1 = &points[points.len() - 1];
            let p0 = &points[points.len() - 2];
            let dt_prev = p1.log10_gamma - p0.log10_gamma;
            let sk = (p1.wave.k_hat - p0.wave.k_hat) / dt_prev;
            let sw = (p1.wave.omega_hat - p0.wave.omega_hat) / dt_prev;
            let lead = t_next - p1.log10_gamma;
            WaveCoordinates::new(p1.wave.k_hat + sk * lead, p1.wave.omega_hat + sw * lead)
        } else {
            points.last().unwrap().wave
        };
        match solve_lossy_point(&at(t_next), guess) {
            Ok(p) => {
                t = t_next;
                points.push(LossyCurvePoint { log10_gamma: t, ..p });
                if halvings > 0 {
                    halvings -= 1;
                    dt *= 2.0;
                }
            }
            Err(_) => {
                halvings += 1;
                if halvings > tol::CONTINUATION_HALVINGS {
                    return Ok(ContinuationRun { points, terminated: Some(t) });
                }
                dt *= 0.5;
            }
        }
    }
    Ok(ContinuationRun { points, terminated: None })
}

/// Least-squares slope of `ln y` against `ln x`; inputs must be positive.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(x, y) in points {
        let (lx, ly) = (x.ln(), y.ln());
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}
