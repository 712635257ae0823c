//! Descriptions of the objects the bounds are computed from: the target
//! system (levels plus initial-state eigenvalues), explicit bath spectra,
//! analytic density-of-states families, and time/work resource budgets.
//!
//! Energy conventions: every spectrum is shifted so its lowest level sits at
//! zero, degeneracies are expanded into repeated entries, and Boltzmann's
//! constant is one (temperatures and energies share units).

use crate::error::{Error, Result};
use crate::{DEFAULT_STATE_BUDGET, TOL};

/// Finite-dimensional target of the cooling step.
///
/// `levels` is the expanded, ascending level list with `levels[0] == 0`.
/// `init_eigs` are the eigenvalues of the initial state, aligned with
/// `levels` (the state is assumed diagonal in the energy basis). The ground
/// degeneracy `g` and gap `delta` default to the level structure but can be
/// remapped when the Hamiltonian changes during the process.
#[derive(Debug, Clone)]
pub struct SystemSpec {
    levels: Vec<f64>,
    init_eigs: Vec<f64>,
    ground_degeneracy: usize,
    gap: Option<f64>,
    t_s: Option<f64>,
    z_s: Option<f64>,
}

impl SystemSpec {
    /// Builds a system from `(energy, degeneracy)` pairs and explicit
    /// initial-state eigenvalues listed per expanded state, in the same
    /// order as the expansion of `levels`.
    pub fn new(levels: &[(f64, usize)], init_eigs: Vec<f64>) -> Result<Self> {
        let expanded = expand_levels(levels)?;
        if init_eigs.len() != expanded.len() {
            return Err(Error::EigenvalueCount {
                expected: expanded.len(),
                got: init_eigs.len(),
            });
        }
        let mut pairs: Vec<(f64, f64)> = expanded.into_iter().zip(init_eigs).collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let (levels, init_eigs): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
        Self::assemble(levels, init_eigs, None, None)
    }

    /// Builds a system whose initial state is thermal at temperature `t_s`
    /// (`f64::INFINITY` yields the maximally mixed state). Rejects gapless
    /// level lists: a thermal preparation with no excited level leaves
    /// nothing to cool.
    pub fn thermal(levels: &[(f64, usize)], t_s: f64) -> Result<Self> {
        if t_s.is_nan() || t_s <= 0.0 {
            return Err(Error::NonpositiveTemperature(t_s));
        }
        let expanded = expand_levels(levels)?;
        let top = *expanded.last().expect("non-empty");
        if top <= TOL {
            return Err(Error::GaplessSystem);
        }
        let weights: Vec<f64> = expanded.iter().map(|e| (-e / t_s).exp()).collect();
        let z_s: f64 = weights.iter().sum();
        let init_eigs: Vec<f64> = weights.into_iter().map(|w| w / z_s).collect();
        Self::assemble(expanded, init_eigs, Some(t_s), Some(z_s))
    }

    fn assemble(
        levels: Vec<f64>,
        init_eigs: Vec<f64>,
        t_s: Option<f64>,
        z_s: Option<f64>,
    ) -> Result<Self> {
        let mut sum = 0.0;
        for (index, &value) in init_eigs.iter().enumerate() {
            if !(value > 0.0) {
                return Err(Error::ZeroEigenvalue { index, value });
            }
            sum += value;
        }
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::EigenvalueSum(sum));
        }
        let ground_degeneracy = levels.iter().take_while(|&&e| e <= TOL).count();
        let gap = levels.iter().copied().find(|&e| e > TOL);
        Ok(Self {
            levels,
            init_eigs,
            ground_degeneracy,
            gap,
            t_s,
            z_s,
        })
    }

    /// Hilbert-space dimension `d`.
    pub fn dim(&self) -> usize {
        self.levels.len()
    }

    /// Dimension of the target (ground) space `g`.
    pub fn ground_degeneracy(&self) -> usize {
        self.ground_degeneracy
    }

    /// Energy gap above the ground space, `None` for a gapless system.
    pub fn gap(&self) -> Option<f64> {
        self.gap
    }

    /// Largest level energy `J` (zero for a gapless system).
    pub fn top_level(&self) -> f64 {
        *self.levels.last().expect("non-empty")
    }

    /// Expanded ascending level list.
    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    /// Initial-state eigenvalues aligned with [`levels`](Self::levels).
    pub fn init_eigs(&self) -> &[f64] {
        &self.init_eigs
    }

    /// Smallest initial-state eigenvalue.
    pub fn lambda_min(&self) -> f64 {
        self.init_eigs.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Largest initial-state eigenvalue.
    pub fn lambda_max(&self) -> f64 {
        self.init_eigs.iter().copied().fold(0.0, f64::max)
    }

    /// Preparation temperature, when the state was built thermally.
    pub fn t_s(&self) -> Option<f64> {
        self.t_s
    }

    /// System partition function, when the state was built thermally.
    pub fn z_s(&self) -> Option<f64> {
        self.z_s
    }

    /// View of the same initial state under a changed final Hamiltonian:
    /// the target degeneracy and gap are replaced, everything tied to the
    /// initial state (levels, eigenvalues, `J`, `Z_S`) is kept.
    pub fn with_final_hamiltonian(&self, final_g: usize, final_gap: Option<f64>) -> Result<Self> {
        if final_g == 0 || final_g > self.dim() {
            return Err(Error::Config(format!(
                "final ground degeneracy {} outside 1..={}",
                final_g,
                self.dim()
            )));
        }
        if let Some(gap) = final_gap {
            if !(gap > 0.0) {
                return Err(Error::NonpositiveParameter {
                    name: "final gap",
                    value: gap,
                });
            }
        }
        let mut out = self.clone();
        out.ground_degeneracy = final_g;
        out.gap = final_gap;
        Ok(out)
    }

    /// Tensors a trivial `factor`-dimensional subsystem (zero Hamiltonian,
    /// maximally mixed) onto the system and counts it as part of the target
    /// space, so `d -> d*factor` and `g -> g*factor` while every bound stays
    /// invariant.
    pub fn with_discarded_factor(&self, factor: usize) -> Result<Self> {
        if factor == 0 {
            return Err(Error::Config("discarded factor must be at least 1".into()));
        }
        if factor == 1 {
            return Ok(self.clone());
        }
        let mut levels = Vec::with_capacity(self.levels.len() * factor);
        let mut init_eigs = Vec::with_capacity(self.levels.len() * factor);
        for (&e, &p) in self.levels.iter().zip(&self.init_eigs) {
            for _ in 0..factor {
                levels.push(e);
                init_eigs.push(p / factor as f64);
            }
        }
        let mut pairs: Vec<(f64, f64)> = levels.into_iter().zip(init_eigs).collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let (levels, init_eigs): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
        Self::assemble(
            levels,
            init_eigs,
            self.t_s,
            self.z_s.map(|z| z * factor as f64),
        )
    }
}

fn expand_levels(levels: &[(f64, usize)]) -> Result<Vec<f64>> {
    if levels.is_empty() {
        return Err(Error::Config("system needs at least one level".into()));
    }
    let mut expanded = Vec::new();
    for &(e, deg) in levels {
        if !e.is_finite() {
            return Err(Error::Config(format!("non-finite level energy {e}")));
        }
        if deg == 0 {
            return Err(Error::Config(format!("level {e} has degeneracy 0")));
        }
        for _ in 0..deg {
            expanded.push(e);
        }
    }
    let min = expanded.iter().copied().fold(f64::INFINITY, f64::min);
    for e in &mut expanded {
        *e -= min;
    }
    expanded.sort_by(f64::total_cmp);
    Ok(expanded)
}

/// Explicit finite bath: an ascending list of eigenenergies starting at 0,
/// degeneracies expanded into repeats.
#[derive(Debug, Clone)]
pub struct ExplicitBathSpectrum {
    energies: Vec<f64>,
    volume: f64,
    truncation_cutoff: Option<f64>,
    tail_mass: Option<f64>,
}

impl ExplicitBathSpectrum {
    /// Wraps a raw energy list. The list is sorted; it must contain at
    /// least two entries and its minimum must already be zero.
    pub fn from_energies(mut energies: Vec<f64>, volume: f64) -> Result<Self> {
        if energies.len() < 2 {
            return Err(Error::BathTooSmall(energies.len()));
        }
        if energies.iter().any(|e| !e.is_finite()) {
            return Err(Error::Config("non-finite bath energy".into()));
        }
        if !(volume > 0.0) {
            return Err(Error::NonpositiveParameter {
                name: "bath volume",
                value: volume,
            });
        }
        energies.sort_by(f64::total_cmp);
        if energies[0].abs() > TOL {
            return Err(Error::BathGroundNonzero(energies[0]));
        }
        Ok(Self {
            energies,
            volume,
            truncation_cutoff: None,
            tail_mass: None,
        })
    }

    /// Tensor-composes independent modes, keeping total energies up to
    /// `e_cut`. Each mode is shifted to start at zero; modes with no
    /// positive level are dropped since they only multiply degeneracies.
    /// `beta` is used to record the Gibbs weight lost to the cutoff.
    pub fn compose(
        modes: &[Vec<f64>],
        e_cut: f64,
        beta: f64,
        volume: f64,
        state_budget: usize,
    ) -> Result<Self> {
        if !(beta > 0.0) {
            return Err(Error::NonpositiveBeta(beta));
        }
        let mut active: Vec<Vec<f64>> = Vec::new();
        for mode in modes {
            if mode.is_empty() {
                return Err(Error::Config("empty bath mode".into()));
            }
            let min = mode.iter().copied().fold(f64::INFINITY, f64::min);
            let mut shifted: Vec<f64> = mode.iter().map(|e| e - min).collect();
            shifted.sort_by(f64::total_cmp);
            if *shifted.last().unwrap() > TOL {
                active.push(shifted);
            }
        }
        if active.is_empty() {
            return Err(Error::BathTooSmall(1));
        }
        let estimate: u128 = active
            .iter()
            .map(|m| m.len() as u128)
            .fold(1u128, |acc, n| acc.saturating_mul(n));
        let mut sums = vec![0.0f64];
        for mode in &active {
            let mut next = Vec::with_capacity(sums.len());
            for &base in &sums {
                for &e in mode {
                    let total = base + e;
                    if total > e_cut + TOL {
                        break; // mode levels ascend, so the rest overflow too
                    }
                    next.push(total);
                }
                if next.len() > state_budget {
                    return Err(Error::StateBudget {
                        estimate,
                        budget: state_budget,
                    });
                }
            }
            sums = next;
        }
        if sums.len() < 2 {
            return Err(Error::BathTooSmall(sums.len()));
        }
        sums.sort_by(f64::total_cmp);
        let kept_z: f64 = sums.iter().map(|e| (-beta * e).exp()).sum();
        let full_z: f64 = active
            .iter()
            .map(|m| m.iter().map(|e| (-beta * e).exp()).sum::<f64>())
            .product();
        let mut bath = Self::from_energies(sums, volume)?;
        bath.truncation_cutoff = Some(e_cut);
        bath.tail_mass = Some((1.0 - kept_z / full_z).max(0.0));
        Ok(bath)
    }

    /// Bath whose cumulative state count is exactly `floor(exp(alpha * E))`:
    /// level `m` (1-based) sits at `ln(m)/alpha`.
    pub fn with_exponential_counts(alpha: f64, n_levels: usize, volume: f64) -> Result<Self> {
        if !(alpha > 0.0) {
            return Err(Error::NonpositiveParameter {
                name: "alpha",
                value: alpha,
            });
        }
        let energies = (1..=n_levels).map(|m| (m as f64).ln() / alpha).collect();
        Self::from_energies(energies, volume)
    }

    /// Bath whose cumulative state count is exactly
    /// `floor(exp(alpha * V^(1-nu) * E^nu))`: level `m` (1-based) sits at
    /// `(ln(m) / (alpha V^(1-nu)))^(1/nu)`.
    pub fn with_stretched_counts(
        alpha: f64,
        nu: f64,
        volume: f64,
        n_levels: usize,
    ) -> Result<Self> {
        if !(alpha > 0.0) {
            return Err(Error::NonpositiveParameter {
                name: "alpha",
                value: alpha,
            });
        }
        if !(0.5..1.0).contains(&nu) {
            return Err(Error::BadNu(nu));
        }
        let scale = alpha * volume.powf(1.0 - nu);
        let energies = (1..=n_levels)
            .map(|m| ((m as f64).ln() / scale).powf(1.0 / nu))
            .collect();
        Self::from_energies(energies, volume)
    }

    /// Ascending expanded energy list.
    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    /// Number of states.
    pub fn len(&self) -> usize {
        self.energies.len()
    }

    /// True when the spectrum holds no states (never, by construction).
    pub fn is_empty(&self) -> bool {
        self.energies.is_empty()
    }

    /// Largest eigenenergy.
    pub fn max_energy(&self) -> f64 {
        *self.energies.last().expect("non-empty")
    }

    /// Volume stand-in used by free-energy densities.
    pub fn volume(&self) -> f64 {
        self.volume
    }

    /// Replaces the recorded volume.
    pub fn with_volume(mut self, volume: f64) -> Result<Self> {
        if !(volume > 0.0) {
            return Err(Error::NonpositiveParameter {
                name: "bath volume",
                value: volume,
            });
        }
        self.volume = volume;
        Ok(self)
    }

    /// Energy cutoff this spectrum was truncated at, when composed.
    pub fn truncation_cutoff(&self) -> Option<f64> {
        self.truncation_cutoff
    }

    /// Gibbs weight of the discarded states at composition temperature.
    pub fn tail_mass(&self) -> Option<f64> {
        self.tail_mass
    }

    /// Smallest spacing between consecutive distinct levels.
    pub fn min_level_spacing(&self) -> Option<f64> {
        let mut best: Option<f64> = None;
        for pair in self.energies.windows(2) {
            let gap = pair[1] - pair[0];
            if gap > TOL && best.map_or(true, |b| gap < b) {
                best = Some(gap);
            }
        }
        best
    }
}

/// Harmonic-ladder level list `{0, spacing, ..., (count-1)*spacing}`.
pub fn oscillator_levels(spacing: f64, count: usize) -> Vec<f64> {
    (0..count).map(|n| n as f64 * spacing).collect()
}

/// Analytic bath family with windowed entropy
/// `S(E) = alpha * V^(1-nu) * E^nu`, `nu` in `[1/2, 1)`.
///
/// Radiation-like baths in `D` spatial dimensions correspond to
/// `nu = D/(D+1)`.
#[derive(Debug, Clone, Copy)]
pub struct AnalyticBathModel {
    /// Entropy prefactor.
    pub alpha: f64,
    /// Entropy exponent.
    pub nu: f64,
    /// Bath volume.
    pub volume: f64,
}

impl AnalyticBathModel {
    /// Validated constructor.
    pub fn new(alpha: f64, nu: f64, volume: f64) -> Result<Self> {
        if !(alpha > 0.0) {
            return Err(Error::NonpositiveParameter {
                name: "alpha",
                value: alpha,
            });
        }
        if !(0.5..1.0).contains(&nu) {
            return Err(Error::BadNu(nu));
        }
        if !(volume > 0.0) {
            return Err(Error::NonpositiveParameter {
                name: "bath volume",
                value: volume,
            });
        }
        Ok(Self { alpha, nu, volume })
    }

    /// Radiation bath in `dim` spatial dimensions: `nu = dim/(dim+1)`.
    pub fn radiation(dim: u32, alpha: f64, volume: f64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Config("spatial dimension must be at least 1".into()));
        }
        Self::new(alpha, dim as f64 / (dim as f64 + 1.0), volume)
    }

    /// Same model at a different volume.
    pub fn with_volume(&self, volume: f64) -> Result<Self> {
        Self::new(self.alpha, self.nu, volume)
    }
}

/// Either kind of bath description.
#[derive(Debug, Clone)]
pub enum Bath {
    /// Explicit finite level list.
    Explicit(ExplicitBathSpectrum),
    /// Closed-form density-of-states family.
    Analytic(AnalyticBathModel),
}

impl Bath {
    /// The explicit spectrum, or an error for analytic models.
    pub fn as_explicit(&self) -> Result<&ExplicitBathSpectrum> {
        match self {
            Bath::Explicit(b) => Ok(b),
            Bath::Analytic(_) => Err(Error::NeedExplicitBath),
        }
    }

    /// The analytic model, or an error for explicit spectra.
    pub fn as_analytic(&self) -> Result<&AnalyticBathModel> {
        match self {
            Bath::Analytic(m) => Ok(m),
            Bath::Explicit(_) => Err(Error::NeedAnalyticBath),
        }
    }

    /// Volume stand-in of either representation.
    pub fn volume(&self) -> f64 {
        match self {
            Bath::Explicit(b) => b.volume(),
            Bath::Analytic(m) => m.volume,
        }
    }
}

impl From<ExplicitBathSpectrum> for Bath {
    fn from(b: ExplicitBathSpectrum) -> Self {
        Bath::Explicit(b)
    }
}

impl From<AnalyticBathModel> for Bath {
    fn from(m: AnalyticBathModel) -> Self {
        Bath::Analytic(m)
    }
}

/// Resources available to one cooling run: per-run worst-case work `w_max`,
/// and for time-limited protocols the rates `u` (work per unit time) and `v`
/// (ballistic bath-radius growth) in `dim` spatial dimensions.
#[derive(Debug, Clone, Copy)]
pub struct ResourceBudget {
    /// Worst-case work available per run.
    pub w_max: f64,
    /// Work delivery rate.
    pub u: f64,
    /// Bath light-cone speed.
    pub v: f64,
    /// Spatial dimension.
    pub dim: u32,
    /// Elapsed time, when the budget is time-limited.
    pub t: Option<f64>,
    /// Accessible bath volume.
    pub volume: f64,
}

impl ResourceBudget {
    /// Untimed budget with explicit volume and work cap.
    pub fn new(w_max: f64, u: f64, v: f64, dim: u32, volume: f64) -> Result<Self> {
        let budget = Self {
            w_max,
            u,
            v,
            dim,
            t: None,
            volume,
        };
        budget.validate()?;
        Ok(budget)
    }

    /// Budget at the time frontier: `w_max = u*t`, `volume = (v*t)^dim`.
    pub fn at_time(u: f64, v: f64, dim: u32, t: f64) -> Result<Self> {
        if !(t > 0.0) {
            return Err(Error::NonpositiveParameter {
                name: "time",
                value: t,
            });
        }
        let budget = Self {
            w_max: u * t,
            u,
            v,
            dim,
            t: Some(t),
            volume: (v * t).powi(dim as i32),
        };
        budget.validate()?;
        Ok(budget)
    }

    fn validate(&self) -> Result<()> {
        if !(self.u > 0.0) {
            return Err(Error::NonpositiveParameter {
                name: "u",
                value: self.u,
            });
        }
        if !(self.v > 0.0) {
            return Err(Error::NonpositiveParameter {
                name: "v",
                value: self.v,
            });
        }
        if self.dim == 0 {
            return Err(Error::Config("spatial dimension must be at least 1".into()));
        }
        if !(self.w_max >= 0.0) {
            return Err(Error::NonpositiveParameter {
                name: "w_max",
                value: self.w_max,
            });
        }
        if !(self.volume > 0.0) {
            return Err(Error::NonpositiveParameter {
                name: "volume",
                value: self.volume,
            });
        }
        if let Some(t) = self.t {
            let v_cap = (self.v * t).powi(self.dim as i32);
            let w_cap = self.u * t;
            if self.volume > v_cap * (1.0 + 1e-9) + TOL {
                return Err(Error::BudgetInconsistent(format!(
                    "volume {} exceeds reachable ({})^{} = {}",
                    self.volume,
                    self.v * t,
                    self.dim,
                    v_cap
                )));
            }
            if self.w_max > w_cap + TOL {
                return Err(Error::BudgetInconsistent(format!(
                    "w_max {} exceeds deliverable u*t = {}",
                    self.w_max, w_cap
                )));
            }
        }
        Ok(())
    }
}

/// Default state budget re-exported for callers sizing compositions.
pub const STATE_BUDGET: usize = DEFAULT_STATE_BUDGET;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thermal_qubit_has_expected_weights() {
        let sys = SystemSpec::thermal(&[(0.0, 1), (1.0, 1)], 1.0).unwrap();
        let z = 1.0 + (-1.0f64).exp();
        assert!((sys.z_s().unwrap() - z).abs() < 1e-15);
        assert!((sys.lambda_max() - 1.0 / z).abs() < 1e-15);
        assert!((sys.lambda_min() - (-1.0f64).exp() / z).abs() < 1e-15);
        assert_eq!(sys.dim(), 2);
        assert_eq!(sys.ground_degeneracy(), 1);
        assert_eq!(sys.gap(), Some(1.0));
    }

    #[test]
    fn infinite_temperature_is_maximally_mixed() {
        let sys = SystemSpec::thermal(&[(0.0, 2), (1.0, 2)], f64::INFINITY).unwrap();
        for &p in sys.init_eigs() {
            assert!((p - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn gapless_thermal_system_rejected() {
        let err = SystemSpec::thermal(&[(2.0, 3)], 1.0).unwrap_err();
        assert!(matches!(err, Error::GaplessSystem));
    }

    #[test]
    fn levels_are_shifted_to_zero() {
        let sys = SystemSpec::thermal(&[(5.0, 1), (7.0, 1)], 1.0).unwrap();
        assert_eq!(sys.levels(), &[0.0, 2.0]);
        assert_eq!(sys.top_level(), 2.0);
    }

    #[test]
    fn eigenvalue_sum_enforced() {
        let err = SystemSpec::new(&[(0.0, 2)], vec![0.6, 0.6]).unwrap_err();
        assert!(matches!(err, Error::EigenvalueSum(_)));
    }

    #[test]
    fn zero_eigenvalue_rejected_with_hint() {
        let err = SystemSpec::new(&[(0.0, 2)], vec![1.0, 0.0]).unwrap_err();
        assert!(matches!(err, Error::ZeroEigenvalue { .. }));
    }

    #[test]
    fn bath_must_start_at_zero() {
        let err = ExplicitBathSpectrum::from_energies(vec![0.5, 1.0], 1.0).unwrap_err();
        assert!(matches!(err, Error::BathGroundNonzero(_)));
    }

    #[test]
    fn three_oscillators_truncated_at_four_give_stars_and_bars_count() {
        // Occupation triples with n1+n2+n3 <= 4: C(7,3) = 35.
        let mode = oscillator_levels(1.0, 5);
        let bath =
            ExplicitBathSpectrum::compose(&[mode.clone(), mode.clone(), mode], 4.0, 1.0, 3.0, 1000)
                .unwrap();
        assert_eq!(bath.len(), 35);
        assert_eq!(bath.energies()[0], 0.0);
        assert_eq!(bath.max_energy(), 4.0);
    }

    #[test]
    fn zero_energy_modes_are_dropped() {
        let bath = ExplicitBathSpectrum::compose(
            &[vec![0.0, 0.0], vec![0.0, 1.0, 2.0]],
            10.0,
            1.0,
            1.0,
            100,
        )
        .unwrap();
        assert_eq!(bath.len(), 3);
    }

    #[test]
    fn compose_respects_state_budget() {
        let mode = oscillator_levels(1.0, 100);
        let err = ExplicitBathSpectrum::compose(
            &[mode.clone(), mode.clone(), mode],
            300.0,
            1.0,
            3.0,
            10_000,
        )
        .unwrap_err();
        match err {
            Error::StateBudget { estimate, budget } => {
                assert_eq!(estimate, 1_000_000);
                assert_eq!(budget, 10_000);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn tail_mass_tracks_truncation() {
        let mode = oscillator_levels(1.0, 30);
        let untruncated =
            ExplicitBathSpectrum::compose(&[mode.clone(), mode.clone()], 60.0, 1.0, 2.0, 10_000)
                .unwrap();
        assert!(untruncated.tail_mass().unwrap() < 1e-12);
        let truncated =
            ExplicitBathSpectrum::compose(&[mode.clone(), mode], 3.0, 1.0, 2.0, 10_000).unwrap();
        assert!(truncated.tail_mass().unwrap() > 1e-3);
    }

    #[test]
    fn exponential_count_bath_realizes_floor_counts() {
        let bath = ExplicitBathSpectrum::with_exponential_counts(1.0, 100, 1.0).unwrap();
        // I(E) = floor(exp(E)) at a grid of probe energies.
        for e in [0.0, 0.5, 1.0, 2.0, 3.0, 4.0] {
            let count = bath.energies().iter().filter(|&&x| x <= e + TOL).count();
            assert_eq!(count, (e.exp().floor() as usize).min(100), "at E = {e}");
        }
    }

    #[test]
    fn discarded_factor_scales_dimensions_only() {
        let sys = SystemSpec::thermal(&[(0.0, 1), (1.0, 1)], 1.0).unwrap();
        let big = sys.with_discarded_factor(4).unwrap();
        assert_eq!(big.dim(), 8);
        assert_eq!(big.ground_degeneracy(), 4);
        assert_eq!(big.gap(), Some(1.0));
        let ratio = big.lambda_max() / big.lambda_min();
        assert!((ratio - sys.lambda_max() / sys.lambda_min()).abs() < 1e-12);
    }

    #[test]
    fn budget_frontier_is_consistent() {
        let b = ResourceBudget::at_time(2.0, 3.0, 3, 10.0).unwrap();
        assert!((b.w_max - 20.0).abs() < 1e-12);
        assert!((b.volume - 27_000.0).abs() < 1e-9);
        let err = ResourceBudget {
            volume: 30_000.0,
            ..b
        }
        .validate()
        .unwrap_err();
        assert!(matches!(err, Error::BudgetInconsistent(_)));
    }
}
