//! Canonical-ensemble and windowed microcanonical quantities on bath spectra.
//!
//! Microcanonical structure is always measured through half-open energy
//! windows `(E - omega, E]`: [`window_count`] realizes the density of states
//! at resolution `omega`, [`micro_entropy`] is its logarithm, and the
//! discrete derivative stencils build on those windows. The default window
//! width is the canonical energy fluctuation `sqrt(C_can)/beta`, clamped from
//! below to the minimum level spacing so windows on small explicit spectra
//! stay populated; every operation also accepts an explicit width.

use crate::error::{Error, Result};
use crate::spectra::{AnalyticBathModel, Bath, ExplicitBathSpectrum};
use crate::TOL;

/// Number of bath levels with energy at most `e` (within the global
/// tolerance). Non-decreasing in `e`; zero below the spectrum.
pub fn cumulative_count(bath: &ExplicitBathSpectrum, e: f64) -> u64 {
    bath.energies().partition_point(|&x| x <= e + TOL) as u64
}

/// Number of bath levels in the half-open window `(e - omega, e]`.
///
/// Callers must pass `omega > 0`; the count is zero whenever the window
/// misses the spectrum.
pub fn window_count(bath: &ExplicitBathSpectrum, e: f64, omega: f64) -> u64 {
    debug_assert!(omega > 0.0, "window width must be positive");
    cumulative_count(bath, e) - cumulative_count(bath, e - omega)
}

/// Canonical-ensemble summary of a bath at a fixed inverse temperature.
///
/// Computed once per `(bath, beta)` pair and shared read-only by the bound
/// evaluations. `omega` is the default microcanonical window width; it is
/// `None` when the spectrum carries no energy variance, in which case the
/// caller must supply a width explicitly.
#[derive(Debug, Clone)]
pub struct StatmechCache {
    /// Inverse temperature the cache was built at.
    pub beta: f64,
    /// Partition function `Z_B`.
    pub z: f64,
    /// `ln Z_B`, kept separately for log-domain work.
    pub ln_z: f64,
    /// Mean energy of the canonical state.
    pub mean_energy: f64,
    /// Second moment of the energy.
    pub mean_sq_energy: f64,
    /// Dimensionless heat capacity `beta^2 * Var(E)`.
    pub c_can: f64,
    /// Free-energy density `-ln Z_B / (beta * V)`.
    pub f_can: f64,
    /// Default window width `sqrt(C_can)/beta`, clamped to the minimum
    /// level spacing; `None` when the variance vanishes.
    pub omega: Option<f64>,
    /// Whether the spacing clamp raised `omega` above `sqrt(C_can)/beta`.
    pub omega_clamped: bool,
}

/// Builds the canonical summary: an explicit finite sum, or the closed-form
/// expressions of the analytic family.
pub fn canonical_ensemble(bath: &Bath, beta: f64) -> Result<StatmechCache> {
    if !(beta > 0.0) {
        return Err(Error::NonpositiveBeta(beta));
    }
    match bath {
        Bath::Explicit(b) => canonical_explicit(b, beta),
        Bath::Analytic(m) => {
            let (alpha, nu, v) = (m.alpha, m.nu, m.volume);
            let mean = v * (alpha * nu / beta).powf(1.0 / (1.0 - nu));
            let c_can = (alpha * nu / (1.0 - nu)) * v * (alpha * nu / beta).powf(nu / (1.0 - nu));
            let var = c_can / (beta * beta);
            let f_can = analytic_f_can(m, beta);
            let ln_z = -beta * v * f_can;
            Ok(StatmechCache {
                beta,
                z: ln_z.exp(),
                ln_z,
                mean_energy: mean,
                mean_sq_energy: var + mean * mean,
                c_can,
                f_can,
                omega: Some(var.sqrt()),
                omega_clamped: false,
            })
        }
    }
}

pub(crate) fn canonical_explicit(b: &ExplicitBathSpectrum, beta: f64) -> Result<StatmechCache> {
    if !(beta > 0.0) {
        return Err(Error::NonpositiveBeta(beta));
    }
    let energies = b.energies();
    let mut z = 0.0;
    for &e in energies {
        z += (-beta * e).exp();
    }
    let mut mean = 0.0;
    let mut mean_sq = 0.0;
    for &e in energies {
        let w = (-beta * e).exp();
        mean += e * w;
        mean_sq += e * e * w;
    }
    mean /= z;
    mean_sq /= z;
    let mut var = 0.0;
    for &e in energies {
        var += (e - mean) * (e - mean) * (-beta * e).exp();
    }
    var /= z;
    let ln_z = z.ln();
    let sigma = var.sqrt();
    let (omega, omega_clamped) = if var > 0.0 {
        match b.min_level_spacing() {
            Some(gap) if sigma < gap => (Some(gap), true),
            _ => (Some(sigma), false),
        }
    } else {
        (None, false)
    };
    Ok(StatmechCache {
        beta,
        z,
        ln_z,
        mean_energy: mean,
        mean_sq_energy: mean_sq,
        c_can: beta * beta * var,
        f_can: -ln_z / (beta * b.volume()),
        omega,
        omega_clamped,
    })
}

/// Windowed microcanonical entropy `S(E) = ln Omega(E)`; the closed form
/// `alpha * V^(1-nu) * E^nu` for analytic baths (where `omega` is unused).
pub fn micro_entropy(bath: &Bath, e: f64, omega: f64) -> Result<f64> {
    match bath {
        Bath::Explicit(b) => {
            if !(omega > 0.0) {
                return Err(Error::NonpositiveWindow(omega));
            }
            let n = window_count(b, e, omega);
            if n == 0 {
                return Err(Error::EmptyWindow {
                    lo: e - omega,
                    hi: e,
                });
            }
            Ok((n as f64).ln())
        }
        Bath::Analytic(m) => Ok(analytic_entropy(m, e)),
    }
}

fn analytic_entropy(m: &AnalyticBathModel, e: f64) -> f64 {
    m.alpha * m.volume.powf(1.0 - m.nu) * e.powf(m.nu)
}

/// First and second discrete derivatives of the windowed entropy,
/// `S'(E) = [S(E) - S(E-omega)]/omega` and the standard second-difference
/// stencil `S''(E) = [S(E) + S(E-2*omega) - 2*S(E-omega)]/omega^2`.
/// Analytic baths use the closed forms instead.
pub fn discrete_derivatives(bath: &Bath, e: f64, omega: f64) -> Result<(f64, f64)> {
    match bath {
        Bath::Explicit(_) => {
            let s0 = micro_entropy(bath, e, omega)?;
            let s1 = micro_entropy(bath, e - omega, omega)?;
            let s2 = micro_entropy(bath, e - 2.0 * omega, omega)?;
            let slope = (s0 - s1) / omega;
            let curvature = (s0 + s2 - 2.0 * s1) / (omega * omega);
            Ok((slope, curvature))
        }
        Bath::Analytic(m) => {
            let (alpha, nu, v) = (m.alpha, m.nu, m.volume);
            let slope = alpha * nu * (e / v).powf(nu - 1.0);
            let curvature = alpha * nu * (nu - 1.0) * v.powf(1.0 - nu) * e.powf(nu - 2.0);
            Ok((slope, curvature))
        }
    }
}

/// Microcanonical heat capacity `C_mic = -S'(E)^2 / S''(E)`.
///
/// A vanishing second derivative yields `Ok(f64::INFINITY)` rather than an
/// error: downstream premise checks treat an infinite heat capacity as a
/// premise failure, not as an invalid input.
pub fn micro_heat_capacity(bath: &Bath, e: f64, omega: f64) -> Result<f64> {
    match bath {
        Bath::Explicit(_) => {
            let (slope, curvature) = discrete_derivatives(bath, e, omega)?;
            if curvature == 0.0 {
                return Ok(f64::INFINITY);
            }
            Ok(-slope * slope / curvature)
        }
        Bath::Analytic(m) => {
            let (alpha, nu, v) = (m.alpha, m.nu, m.volume);
            Ok((alpha * nu / (1.0 - nu)) * v * (e / v).powf(nu))
        }
    }
}

/// Output of [`micro_free_energy_density`]: the microcanonical free-energy
/// density at the slope target, together with the energy where the slope
/// crossed and the windowed entropy there.
#[derive(Debug, Clone, Copy)]
pub struct MicroFreeEnergy {
    /// `f_mic = [E0 - S(E0)/beta] / V`. Note the two temperatures: the
    /// window is selected by `beta0` while the entropy is weighed at the
    /// background `beta`.
    pub f_mic: f64,
    /// Energy solving `S'(E0) = beta0` (first grid crossing from above).
    pub e0: f64,
    /// Windowed entropy `S(E0)`.
    pub entropy: f64,
}

/// First energy on the `omega`-grid where the windowed entropy slope drops
/// to `beta0` or below. Grid points whose stencil windows are empty are
/// skipped; `None` when the slope never crosses within the spectrum.
pub fn slope_crossing(bath: &ExplicitBathSpectrum, beta0: f64, omega: f64) -> Option<f64> {
    let e_max = bath.max_energy();
    let mut k = 1u64;
    loop {
        let e = k as f64 * omega;
        if e > e_max + TOL {
            return None;
        }
        let w0 = window_count(bath, e, omega);
        let w1 = window_count(bath, e - omega, omega);
        if w0 > 0 && w1 > 0 {
            let slope = ((w0 as f64).ln() - (w1 as f64).ln()) / omega;
            if slope <= beta0 {
                return Some(e);
            }
        }
        k += 1;
    }
}

/// Microcanonical free-energy density at slope target `beta0`.
///
/// Explicit baths scan the `omega`-grid for the first energy where the
/// windowed slope drops to `beta0`; analytic baths use the closed-form
/// threshold `E0 = V*(beta0/(alpha*nu))^(1/(nu-1))`.
pub fn micro_free_energy_density(
    bath: &Bath,
    beta: f64,
    beta0: f64,
    omega: f64,
) -> Result<MicroFreeEnergy> {
    if !(beta > 0.0) {
        return Err(Error::NonpositiveBeta(beta));
    }
    if !(beta0 > 0.0) {
        return Err(Error::NonpositiveBeta(beta0));
    }
    match bath {
        Bath::Explicit(b) => micro_free_energy_explicit(b, beta, beta0, omega),
        Bath::Analytic(m) => {
            let e0 = analytic_energy_at_slope(m, beta0);
            let entropy = analytic_entropy(m, e0);
            Ok(MicroFreeEnergy {
                f_mic: (e0 - entropy / beta) / m.volume,
                e0,
                entropy,
            })
        }
    }
}

pub(crate) fn micro_free_energy_explicit(
    b: &ExplicitBathSpectrum,
    beta: f64,
    beta0: f64,
    omega: f64,
) -> Result<MicroFreeEnergy> {
    if !(beta > 0.0) {
        return Err(Error::NonpositiveBeta(beta));
    }
    if !(beta0 > 0.0) {
        return Err(Error::NonpositiveBeta(beta0));
    }
    if !(omega > 0.0) {
        return Err(Error::NonpositiveWindow(omega));
    }
    let e_max = b.max_energy();
    let mut min_slope = f64::INFINITY;
    let mut max_slope = f64::NEG_INFINITY;
    let mut k = 1u64;
    loop {
        let e = k as f64 * omega;
        if e > e_max + TOL {
            break;
        }
        let w0 = window_count(b, e, omega);
        let w1 = window_count(b, e - omega, omega);
        if w0 > 0 && w1 > 0 {
            let entropy = (w0 as f64).ln();
            let slope = (entropy - (w1 as f64).ln()) / omega;
            min_slope = min_slope.min(slope);
            max_slope = max_slope.max(slope);
            if slope <= beta0 {
                return Ok(MicroFreeEnergy {
                    f_mic: (e - entropy / beta) / b.volume(),
                    e0: e,
                    entropy,
                });
            }
        }
        k += 1;
    }
    Err(Error::SlopeOutOfRange {
        beta0,
        min_slope,
        max_slope,
    })
}

/// Energy at which the analytic entropy slope equals `beta0`.
pub fn analytic_energy_at_slope(m: &AnalyticBathModel, beta0: f64) -> f64 {
    m.volume * (m.alpha * m.nu / beta0).powf(1.0 / (1.0 - m.nu))
}

/// Closed-form canonical free-energy density of the analytic family,
/// `(alpha/beta)^(1/(1-nu)) * [nu^(1/(1-nu)) - nu^(nu/(1-nu))]`.
pub fn analytic_f_can(m: &AnalyticBathModel, beta: f64) -> f64 {
    let nu = m.nu;
    (m.alpha / beta).powf(1.0 / (1.0 - nu)) * (nu.powf(1.0 / (1.0 - nu)) - nu.powf(nu / (1.0 - nu)))
}

/// Canonical free-energy density of the analytic family by direct quadrature
/// of `Z = ∫ a * exp(a*u - beta*u^(1/nu)) du` with `u = E^nu` and
/// `a = alpha * V^(1-nu)`, evaluated in log domain relative to the peak.
///
/// The closed form in [`analytic_f_can`] keeps only the saddle-point leading
/// order; the quadrature includes the `O(ln V / V)` prefactor corrections, so
/// the two agree in the large-volume limit.
pub fn analytic_f_can_quadrature(m: &AnalyticBathModel, beta: f64, panels: usize) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(Error::NonpositiveBeta(beta));
    }
    let n = panels.max(2) + panels % 2;
    let a = m.alpha * m.volume.powf(1.0 - m.nu);
    let inv_nu = 1.0 / m.nu;
    let ln_integrand = |u: f64| a * u - beta * u.powf(inv_nu);
    // Saddle: a = (beta/nu) * u^(1/nu - 1).
    let u_star = (a * m.nu / beta).powf(m.nu / (1.0 - m.nu));
    let peak = ln_integrand(u_star);
    let mut hi = u_star.max(1.0);
    while ln_integrand(hi) > peak - 80.0 {
        hi *= 2.0;
    }
    let h = hi / n as f64;
    let mut acc = 0.0;
    for i in 0..=n {
        let weight = if i == 0 || i == n {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        acc += weight * (ln_integrand(i as f64 * h) - peak).exp();
    }
    let ln_z = peak + (a * acc * h / 3.0).ln();
    Ok(-ln_z / (beta * m.volume))
}
