//! Run configuration: strict JSON schema and builders for library types.
//!
//! Unknown keys are rejected everywhere so a typo cannot silently fall
//! back to a default and invalidate a regression baseline.

use cryobound::spectra::{
    AnalyticBathModel, Bath, ExplicitBathSpectrum, ResourceBudget, SystemSpec,
};
use cryobound::DEFAULT_STATE_BUDGET;
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Inverse bath temperature.
    pub beta: f64,
    #[serde(default)]
    pub system: Option<SystemConfig>,
    #[serde(default)]
    pub bath: Option<BathConfig>,
    #[serde(default)]
    pub w_max: Option<f64>,
    #[serde(default)]
    pub budget: Option<BudgetConfig>,
    #[serde(default)]
    pub method: Option<MethodConfig>,
    /// Bath growth constant for the time-limited bound.
    #[serde(default)]
    pub alpha: Option<f64>,
    /// Fixed microcanonical window, overriding the canonical default.
    #[serde(default)]
    pub window: Option<f64>,
    #[serde(default)]
    pub sweep: Option<SweepConfig>,
    #[serde(default)]
    pub protocol: Option<ProtocolConfig>,
    #[serde(default)]
    pub oracle: Option<OracleConfig>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub out: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemConfig {
    /// `(energy, degeneracy)` pairs.
    pub levels: Vec<(f64, usize)>,
    /// Explicit initial eigenvalues, one per expanded state.
    #[serde(default)]
    pub eigenvalues: Option<Vec<f64>>,
    /// Thermal preparation temperature (alternative to `eigenvalues`).
    #[serde(default)]
    pub t_s: Option<f64>,
    /// Ground degeneracy of a changed final Hamiltonian.
    #[serde(default)]
    pub final_g: Option<usize>,
    /// Gap of the changed final Hamiltonian.
    #[serde(default)]
    pub final_gap: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BathConfig {
    /// Explicit level list.
    #[serde(default)]
    pub energies: Option<Vec<f64>>,
    /// Per-mode level lists, composed up to `e_cut`.
    #[serde(default)]
    pub modes: Option<Vec<Vec<f64>>>,
    #[serde(default)]
    pub e_cut: Option<f64>,
    #[serde(default)]
    pub analytic: Option<AnalyticConfig>,
    #[serde(default)]
    pub exponential: Option<ExponentialConfig>,
    /// Volume of an explicit bath (defaults to 1).
    #[serde(default)]
    pub volume: Option<f64>,
    #[serde(default)]
    pub state_budget: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalyticConfig {
    pub alpha: f64,
    /// Entropy exponent; alternative to `dim`.
    #[serde(default)]
    pub nu: Option<f64>,
    /// Spatial dimension, giving `nu = dim/(dim+1)`.
    #[serde(default)]
    pub dim: Option<u32>,
    pub volume: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExponentialConfig {
    pub alpha: f64,
    pub levels: usize,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BudgetConfig {
    pub u: f64,
    pub v: f64,
    pub dim: u32,
    pub t: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodConfig {
    General,
    Smooth,
    Thermal,
    Radiation,
    Time,
}

impl MethodConfig {
    pub fn name(&self) -> &'static str {
        match self {
            MethodConfig::General => "general",
            MethodConfig::Smooth => "smooth",
            MethodConfig::Thermal => "thermal",
            MethodConfig::Radiation => "radiation",
            MethodConfig::Time => "time",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepParam {
    WMax,
    Volume,
    T,
    DDiscard,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub param: SweepParam,
    pub from: f64,
    pub to: f64,
    pub points: usize,
    #[serde(default)]
    pub log: bool,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProtocolConfig {
    pub delta: f64,
    pub points: usize,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleConfig {
    /// Number of randomized instances to validate.
    #[serde(default)]
    pub instances: Option<usize>,
}

impl RunConfig {
    pub fn from_path(path: &std::path::Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        let config: RunConfig =
            serde_json::from_str(&text).map_err(|e| format!("config {}: {e}", path.display()))?;
        if !(config.beta > 0.0) {
            return Err(format!(
                "config field `beta`: must be positive, got {}",
                config.beta
            ));
        }
        if let Some(sweep) = &config.sweep {
            sweep.validate()?;
        }
        Ok(config)
    }

    pub fn temperature(&self) -> f64 {
        1.0 / self.beta
    }

    pub fn require_system(&self) -> Result<SystemSpec, String> {
        self.system
            .as_ref()
            .ok_or("config field `system`: required by this command".to_string())?
            .build()
    }

    pub fn require_bath(&self) -> Result<Bath, String> {
        self.bath
            .as_ref()
            .ok_or("config field `bath`: required by this command".to_string())?
            .build(self.beta)
    }

    pub fn require_w_max(&self) -> Result<f64, String> {
        self.w_max
            .ok_or("config field `w_max`: required by this method".to_string())
    }

    pub fn require_budget(&self) -> Result<ResourceBudget, String> {
        self.budget
            .ok_or("config field `budget`: required by this command".to_string())?
            .build()
    }
}

impl SystemConfig {
    pub fn build(&self) -> Result<SystemSpec, String> {
        let base = match (&self.eigenvalues, self.t_s) {
            (Some(eigs), None) => SystemSpec::new(&self.levels, eigs.clone()),
            (None, Some(ts)) => SystemSpec::thermal(&self.levels, ts),
            (Some(_), Some(_)) => {
                return Err(
                    "config field `system`: give `eigenvalues` or `t_s`, not both".to_string(),
                )
            }
            (None, None) => {
                return Err(
                    "config field `system`: one of `eigenvalues` or `t_s` is required".to_string(),
                )
            }
        }
        .map_err(|e| format!("config field `system`: {e}"))?;
        match (self.final_g, self.final_gap) {
            (None, None) => Ok(base),
            (Some(g), gap) => base
                .with_final_hamiltonian(g, gap)
                .map_err(|e| format!("config field `system.final_g`: {e}")),
            (None, Some(_)) => Err("config field `system.final_gap`: needs `final_g`".to_string()),
        }
    }
}

impl BathConfig {
    pub fn build(&self, beta: f64) -> Result<Bath, String> {
        let kinds = usize::from(self.energies.is_some())
            + usize::from(self.modes.is_some())
            + usize::from(self.analytic.is_some())
            + usize::from(self.exponential.is_some());
        if kinds != 1 {
            return Err(format!(
                "config field `bath`: exactly one of `energies`, `modes`, `analytic`, \
                 `exponential` is required, got {kinds}"
            ));
        }
        if self.analytic.is_some() && self.volume.is_some() {
            return Err(
                "config field `bath.volume`: analytic baths carry their own volume".to_string(),
            );
        }
        let volume = self.volume.unwrap_or(1.0);
        let budget = self.state_budget.unwrap_or(DEFAULT_STATE_BUDGET);
        if let Some(energies) = &self.energies {
            let b = ExplicitBathSpectrum::from_energies(energies.clone(), volume)
                .map_err(|e| format!("config field `bath.energies`: {e}"))?;
            return Ok(Bath::Explicit(b));
        }
        if let Some(modes) = &self.modes {
            let e_cut = self
                .e_cut
                .ok_or("config field `bath.e_cut`: required with `modes`".to_string())?;
            let b = ExplicitBathSpectrum::compose(modes, e_cut, beta, volume, budget)
                .map_err(|e| format!("config field `bath.modes`: {e}"))?;
            return Ok(Bath::Explicit(b));
        }
        if let Some(exp) = &self.exponential {
            let b = ExplicitBathSpectrum::with_exponential_counts(exp.alpha, exp.levels, volume)
                .map_err(|e| format!("config field `bath.exponential`: {e}"))?;
            return Ok(Bath::Explicit(b));
        }
        let analytic = self.analytic.as_ref().expect("one kind");
        let model = match (analytic.nu, analytic.dim) {
            (Some(nu), None) => AnalyticBathModel::new(analytic.alpha, nu, analytic.volume),
            (None, Some(dim)) => AnalyticBathModel::radiation(dim, analytic.alpha, analytic.volume),
            _ => {
                return Err(
                    "config field `bath.analytic`: exactly one of `nu` or `dim` is required"
                        .to_string(),
                )
            }
        }
        .map_err(|e| format!("config field `bath.analytic`: {e}"))?;
        Ok(Bath::Analytic(model))
    }
}

impl BudgetConfig {
    pub fn build(&self) -> Result<ResourceBudget, String> {
        ResourceBudget::at_time(self.u, self.v, self.dim, self.t)
            .map_err(|e| format!("config field `budget`: {e}"))
    }
}

impl SweepConfig {
    fn validate(&self) -> Result<(), String> {
        if self.points == 0 {
            return Err("config field `sweep.points`: must be at least 1".to_string());
        }
        if !(self.from <= self.to) {
            return Err(format!(
                "config field `sweep`: range [{}, {}] must be ordered",
                self.from, self.to
            ));
        }
        if self.log && !(self.from > 0.0) {
            return Err("config field `sweep`: log spacing needs a positive start".to_string());
        }
        Ok(())
    }

    /// Deterministic sweep grid, inclusive of both endpoints.
    pub fn grid(&self) -> Vec<f64> {
        if self.points == 1 {
            return vec![self.from];
        }
        let n = (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                let s = i as f64 / n;
                if self.log {
                    self.from * (self.to / self.from).powf(s)
                } else {
                    self.from + (self.to - self.from) * s
                }
            })
            .collect()
    }
}
