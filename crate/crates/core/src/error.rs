//! Error type shared across the library.

/// Convenience alias used by every fallible operation in this crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of spectrum construction and bound evaluation.
///
/// Domain errors are deliberately specific: most of them name the input
/// regime that made a formula undefined, so callers can decide whether to
/// fall back to a weaker bound or reject the configuration.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// All system levels coincide, so there is no gap to cool across.
    #[error("gapless system: all levels equal, no positive excitation gap")]
    GaplessSystem,

    /// A temperature parameter was zero or negative.
    #[error("temperature must be positive, got {0}")]
    NonpositiveTemperature(f64),

    /// An inverse temperature parameter was zero or negative.
    #[error("inverse temperature must be positive, got {0}")]
    NonpositiveBeta(f64),

    /// An initial-state eigenvalue was zero or negative; exact zeros should
    /// be handled by truncating the level instead.
    #[error("initial-state eigenvalue {value} at level {index} is not positive; truncate the level instead")]
    ZeroEigenvalue { index: usize, value: f64 },

    /// Initial-state eigenvalues must sum to one.
    #[error("initial-state eigenvalues sum to {0}, expected 1 within 1e-9")]
    EigenvalueSum(f64),

    /// Mismatched lengths between level list and eigenvalue list.
    #[error("expected {expected} eigenvalues for the expanded level list, got {got}")]
    EigenvalueCount { expected: usize, got: usize },

    /// A bath spectrum must contain its ground state at energy zero.
    #[error("bath spectrum must start at energy 0, found {0}; shift the levels first")]
    BathGroundNonzero(f64),

    /// A bath spectrum needs at least two levels to carry any structure.
    #[error("bath spectrum needs at least two levels, got {0}")]
    BathTooSmall(usize),

    /// Tensor composition would exceed the configured state budget.
    #[error("state budget exceeded: at least {estimate} composed states, budget {budget}")]
    StateBudget { estimate: u128, budget: usize },

    /// Canonical fluctuations vanish, so no energy window can be derived;
    /// the caller must supply one.
    #[error(
        "energy window undefined: canonical energy fluctuations are zero; supply omega explicitly"
    )]
    DegenerateWindow,

    /// A supplied energy window was not positive.
    #[error("energy window must be positive, got {0}")]
    NonpositiveWindow(f64),

    /// A windowed state count was empty where an entropy value was needed.
    #[error("no states in the window ({lo}, {hi}]: entropy undefined there")]
    EmptyWindow { lo: f64, hi: f64 },

    /// The discrete curvature was non-negative, so the microcanonical heat
    /// capacity is negative or infinite at this energy.
    #[error(
        "entropy curvature {curvature} at E = {energy} is not negative; heat capacity undefined"
    )]
    CurvatureDegenerate { energy: f64, curvature: f64 },

    /// The requested entropy slope is never attained on the grid.
    #[error("slope target {beta0} out of range: grid slopes span [{min_slope}, {max_slope}]")]
    SlopeOutOfRange {
        beta0: f64,
        min_slope: f64,
        max_slope: f64,
    },

    /// An analytic density-of-states exponent outside the supported family.
    #[error("analytic exponent nu must lie in [1/2, 1), got {0}")]
    BadNu(f64),

    /// A parameter that must be positive was not.
    #[error("{name} must be positive, got {value}")]
    NonpositiveParameter { name: &'static str, value: f64 },

    /// A resource budget whose stated volume or work exceeds what its time
    /// allotment can deliver.
    #[error("resource budget inconsistent: {0}")]
    BudgetInconsistent(String),

    /// The bound formula is undefined for this dimension ratio.
    #[error("level ratio d/g = {0} is not above 3/2; use the general bound")]
    RatioTooSmall(f64),

    /// The operation needs a thermal initial state.
    #[error("operation requires a thermally prepared system (no T_S recorded)")]
    NotThermal,

    /// The operation needs an explicit bath spectrum.
    #[error("operation requires an explicit bath spectrum")]
    NeedExplicitBath,

    /// The operation needs an analytic bath model.
    #[error("operation requires an analytic bath model")]
    NeedAnalyticBath,

    /// Joint-state enumeration would exceed its budget.
    #[error("joint table too large: {states} states, budget {budget}")]
    JointBudget { states: usize, budget: usize },

    /// Exhaustive assignment search is restricted to tiny instances.
    #[error("exhaustive search limited to {limit} joint states, got {states}")]
    ExhaustiveTooLarge { states: usize, limit: usize },

    /// Configuration parsing or validation failure.
    #[error("config: {0}")]
    Config(String),
}
