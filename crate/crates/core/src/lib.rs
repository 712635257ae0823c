//! Quantitative limits on cooling a small quantum system with finite resources.
//!
//! The library answers two questions about a cooling (or erasure) step that
//! may consume at most `w_max` of work per run and has access to a finite
//! thermal bath: how small can the failure probability `epsilon` be, and how
//! low can the final effective temperature of the target go?  Both limits come
//! from counting arguments over the bath spectrum, so every quantity here is
//! ultimately a function of level lists, Boltzmann weights and cumulative
//! state counts.
//!
//! Modules:
//!
//! * [`spectra`]: descriptions of the target system, explicit bath
//!   spectra, analytic density-of-states families, and resource budgets.
//! * [`statmech`]: canonical and microcanonical quantities measured on a
//!   spectrum (partition function, windowed entropy, discrete slope and
//!   curvature, free-energy densities).
//! * [`bounds`]: the error and temperature lower bounds themselves, plus
//!   protocol curves and truncation tuning.
//! * [`oracle`]: an independent brute-force optimizer over explicit
//!   state-to-slot assignments used to validate the bounds from above.
//! * [`report`]: deterministic 17-significant-digit JSON/CSV rendering.

// Validation uses `!(x > 0.0)` rather than `x <= 0.0` on purpose: the negated
// form also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod oracle;
pub mod report;
pub mod spectra;
pub mod statmech;

pub use bounds::{BoundReport, Method};
pub use error::{Error, Result};
pub use oracle::{GroundSlotList, JointStateTable, OracleVerdict};
pub use spectra::{AnalyticBathModel, Bath, ExplicitBathSpectrum, ResourceBudget, SystemSpec};
pub use statmech::StatmechCache;

/// Absolute tolerance for every energy threshold comparison: `E <= X` is
/// implemented as `E <= X + TOL` so that grid points landing on a boundary
/// count as inside.
pub const TOL: f64 = 1e-9;

/// Default cap on the number of explicit states a constructed spectrum or
/// joint table may hold.
pub const DEFAULT_STATE_BUDGET: usize = 1_000_000;
