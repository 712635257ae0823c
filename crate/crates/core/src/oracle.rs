//! Brute-force oracle for the minimum cooling error on explicit finite
//! instances, independent of the analytic bounds.
//!
//! The model: the joint system-bath state is diagonal with weights
//! `lambda_s * exp(-beta E_b) / Z_B`. A protocol permutes joint states and
//! may raise any state's energy by at most `w_max`. Cooling succeeds on the
//! weight it parks in "ground slots": pairs (target state, bath state),
//! of which there are `g` per bath level. The minimum failure probability
//! is therefore a maximum-weight matching from joint states to slots.
//!
//! Two matching rules are implemented. The relaxed rule only forbids
//! raising a state by more than `w_max` (`slot energy <= state energy +
//! w_max`); every state's feasible slot set is then a prefix of the
//! ascending slot list, the problem is a transversal matroid, and the
//! greedy algorithm (heaviest state first, highest feasible free slot) is
//! exactly optimal. The strict rule also forbids lowering by more than
//! `w_max` (`|slot energy - state energy| <= w_max`); that is not a matroid,
//! so it is solved exhaustively on tiny instances to measure the gap.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::spectra::{ExplicitBathSpectrum, SystemSpec};
use crate::TOL;

/// Default cap on the number of joint states the greedy oracle enumerates.
pub const DEFAULT_JOINT_BUDGET: usize = 100_000;

/// Largest joint-state count the exhaustive search accepts.
pub const MAX_EXHAUSTIVE_STATES: usize = 8;

/// One diagonal joint state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointEntry {
    /// Index into the system level list.
    pub system_index: usize,
    /// Index into the bath energy list.
    pub bath_index: usize,
    /// Total energy `E_s + E_b`.
    pub energy: f64,
    /// Initial probability of this joint state.
    pub probability: f64,
}

/// All joint states of a system-bath product, sorted by probability
/// descending with ties broken by (system index, bath index) ascending.
#[derive(Debug, Clone)]
pub struct JointStateTable {
    entries: Vec<JointEntry>,
}

impl JointStateTable {
    /// Entries in canonical order.
    pub fn entries(&self) -> &[JointEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all entry probabilities; 1 up to rounding by construction.
    pub fn total_probability(&self) -> f64 {
        self.entries.iter().map(|e| e.probability).sum()
    }
}

/// Ascending energies of the ground slots: `g` per bath level, equal
/// energies ordered by bath index.
#[derive(Debug, Clone)]
pub struct GroundSlotList {
    slots: Vec<f64>,
}

impl GroundSlotList {
    /// Slot energies, ascending.
    pub fn slots(&self) -> &[f64] {
        &self.slots
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }
}

/// Enumerates all joint states of `system` against a bath in its Gibbs
/// state at inverse temperature `beta`.
pub fn enumerate_joint(
    system: &SystemSpec,
    bath: &ExplicitBathSpectrum,
    beta: f64,
    state_budget: usize,
) -> Result<JointStateTable> {
    if !(beta > 0.0) {
        return Err(Error::NonpositiveBeta(beta));
    }
    let count = system.dim() * bath.len();
    if count > state_budget {
        return Err(Error::JointBudget {
            states: count,
            budget: state_budget,
        });
    }
    let z_b: f64 = bath.energies().iter().map(|e| (-beta * e).exp()).sum();
    let mut entries = Vec::with_capacity(count);
    for (s, (&e_s, &lambda)) in system.levels().iter().zip(system.init_eigs()).enumerate() {
        for (b, &e_b) in bath.energies().iter().enumerate() {
            entries.push(JointEntry {
                system_index: s,
                bath_index: b,
                energy: e_s + e_b,
                probability: lambda * (-beta * e_b).exp() / z_b,
            });
        }
    }
    entries.sort_by(|a, b| {
        b.probability
            .total_cmp(&a.probability)
            .then(a.system_index.cmp(&b.system_index))
            .then(a.bath_index.cmp(&b.bath_index))
    });
    let table = JointStateTable { entries };
    debug_assert!((table.total_probability() - 1.0).abs() < 1e-9);
    Ok(table)
}

/// Ground slots of a bath with target-space degeneracy `g`.
///
/// Slots normally come from the same spectrum as the joint table. Passing a
/// deliberately extended spectrum instead models a count law continuing past
/// the truncation edge, so the matching is not starved by the artificial
/// cutoff.
pub fn ground_slots(bath: &ExplicitBathSpectrum, g: usize) -> GroundSlotList {
    let mut slots = Vec::with_capacity(bath.len() * g);
    for &e in bath.energies() {
        for _ in 0..g {
            slots.push(e);
        }
    }
    GroundSlotList { slots }
}

/// Minimum error under the relaxed (raise-only) rule, by the provably
/// optimal greedy matching.
///
/// Unmatched probabilities accumulate in descending order, so the result is
/// reproducible bit for bit and exactly `0.0` on fully matched instances.
pub fn greedy_optimal_error(table: &JointStateTable, slots: &GroundSlotList, w_max: f64) -> f64 {
    let slots = slots.slots();
    let mut free: BTreeSet<usize> = (0..slots.len()).collect();
    let mut error = 0.0;
    for entry in table.entries() {
        let end = slots.partition_point(|&s| s <= entry.energy + w_max + TOL);
        if let Some(&slot) = free.range(..end).next_back() {
            free.remove(&slot);
        } else {
            error += entry.probability;
        }
    }
    error
}

fn exhaustive_error(
    table: &JointStateTable,
    slots: &GroundSlotList,
    w_max: f64,
    two_sided: bool,
) -> Result<f64> {
    let entries = table.entries();
    let slots = slots.slots();
    if entries.len() > MAX_EXHAUSTIVE_STATES {
        return Err(Error::ExhaustiveTooLarge {
            states: entries.len(),
            limit: MAX_EXHAUSTIVE_STATES,
        });
    }
    if slots.len() > 2 * MAX_EXHAUSTIVE_STATES {
        return Err(Error::ExhaustiveTooLarge {
            states: slots.len(),
            limit: 2 * MAX_EXHAUSTIVE_STATES,
        });
    }
    let n = entries.len();
    let m = slots.len();
    let masks = 1usize << m;
    let feasible = |slot_e: f64, entry_e: f64| -> bool {
        slot_e <= entry_e + w_max + TOL && (!two_sided || slot_e >= entry_e - w_max - TOL)
    };
    // layers[i][mask]: best extra weight from entries i.. given used slots
    let mut layers = vec![vec![0.0f64; masks]; n + 1];
    for i in (0..n).rev() {
        let entry = entries[i];
        for mask in 0..masks {
            let mut best = layers[i + 1][mask];
            for (j, &slot_e) in slots.iter().enumerate() {
                if mask >> j & 1 == 1 || !feasible(slot_e, entry.energy) {
                    continue;
                }
                let cand = entry.probability + layers[i + 1][mask | (1 << j)];
                if cand > best {
                    best = cand;
                }
            }
            layers[i][mask] = best;
        }
    }
    // Walk one optimal solution so the unmatched probabilities can be
    // summed in the same canonical descending order as the greedy path.
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| slots[b].total_cmp(&slots[a]));
    let mut mask = 0usize;
    let mut error = 0.0;
    for (i, entry) in entries.iter().enumerate() {
        let mut taken = false;
        for &j in &order {
            if mask >> j & 1 == 1 || !feasible(slots[j], entry.energy) {
                continue;
            }
            if entry.probability + layers[i + 1][mask | (1 << j)] >= layers[i][mask] {
                mask |= 1 << j;
                taken = true;
                break;
            }
        }
        if !taken {
            error += entry.probability;
        }
    }
    Ok(error)
}

/// Exact minimum error under the strict two-sided rule
/// `|slot energy - state energy| <= w_max`, by exhaustive search.
pub fn exhaustive_optimal_error(
    table: &JointStateTable,
    slots: &GroundSlotList,
    w_max: f64,
) -> Result<f64> {
    exhaustive_error(table, slots, w_max, true)
}

/// Exhaustive search under the relaxed raise-only rule; exists purely to
/// cross-check the greedy optimum on tiny instances.
pub fn exhaustive_one_sided_error(
    table: &JointStateTable,
    slots: &GroundSlotList,
    w_max: f64,
) -> Result<f64> {
    exhaustive_error(table, slots, w_max, false)
}

/// Largest energy up to which a work cap of `w_max` suffices for error-free
/// qubit erasure (d = 2, g = 1): the counting condition
/// `2 I(E) <= I(E + w_max)` must hold at each grid point.
///
/// The scan runs over distinct level energies up to `max_energy - w_max`,
/// so the spectrum's artificial top edge cannot fake a violation, and stops
/// at the first grid point where the condition flips. Returns the last
/// energy before the flip, `+inf` when the condition holds on the whole
/// capped grid, `-inf` when already the first point violates.
pub fn erasure_threshold_simple(bath: &ExplicitBathSpectrum, w_max: f64) -> f64 {
    let cap = bath.max_energy() - w_max;
    let mut last_ok = f64::NEG_INFINITY;
    let mut previous = f64::NEG_INFINITY;
    for &e in bath.energies() {
        if e <= previous + TOL {
            continue;
        }
        previous = e;
        if e > cap + TOL {
            break;
        }
        let here = cumulative_count_at(bath, e) as u128;
        let shifted = cumulative_count_at(bath, e + w_max) as u128;
        if 2 * here > shifted {
            return last_ok;
        }
        last_ok = e;
    }
    f64::INFINITY
}

fn cumulative_count_at(bath: &ExplicitBathSpectrum, e: f64) -> usize {
    bath.energies().partition_point(|&x| x <= e + TOL)
}

/// Outcome of checking the analytic bound against the oracle on one
/// instance.
#[derive(Debug, Clone, Copy)]
pub struct OracleVerdict {
    /// Minimum error from the greedy matching (relaxed rule).
    pub epsilon_oracle: f64,
    /// Analytic lower bound for the same instance.
    pub epsilon_bound: f64,
    /// `epsilon_oracle - epsilon_bound`; negative means the bound is wrong.
    pub slack: f64,
    /// Whether the bound is honored (up to 1e-12 slack).
    pub ok: bool,
    /// Strict two-sided optimum, when the instance is small enough to
    /// enumerate.
    pub epsilon_exact: Option<f64>,
}

/// Runs the greedy oracle and the analytic error bound on the identical
/// finite spectrum and reports whether the bound holds from below.
pub fn validate_bound(
    system: &SystemSpec,
    bath: &ExplicitBathSpectrum,
    w_max: f64,
    t: f64,
) -> Result<OracleVerdict> {
    if !(t > 0.0) {
        return Err(Error::NonpositiveTemperature(t));
    }
    let table = enumerate_joint(system, bath, 1.0 / t, DEFAULT_JOINT_BUDGET)?;
    let slots = ground_slots(bath, system.ground_degeneracy());
    let epsilon_oracle = greedy_optimal_error(&table, &slots, w_max);
    let bound = crate::bounds::error_bound_general(system, bath, w_max, t)?;
    let epsilon_bound = bound.epsilon_lb.unwrap_or(0.0);
    let epsilon_exact = if table.len() <= MAX_EXHAUSTIVE_STATES {
        Some(exhaustive_optimal_error(&table, &slots, w_max)?)
    } else {
        None
    };
    let slack = epsilon_oracle - epsilon_bound;
    Ok(OracleVerdict {
        epsilon_oracle,
        epsilon_bound,
        slack,
        ok: slack >= -1e-12,
        epsilon_exact,
    })
}

/// A randomly drawn finite instance for stress-testing the bounds.
#[derive(Debug, Clone)]
pub struct RandomInstance {
    /// Target system.
    pub system: SystemSpec,
    /// Explicit bath.
    pub bath: ExplicitBathSpectrum,
    /// Inverse bath temperature.
    pub beta: f64,
    /// Work cap.
    pub w_max: f64,
}

impl RandomInstance {
    /// Bath temperature.
    pub fn temperature(&self) -> f64 {
        1.0 / self.beta
    }
}

fn random_instance_sized(seed: u64, max_bath: usize, force_tiny: bool) -> RandomInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d: usize = rng.random_range(2..=4);

    let levels: Vec<(f64, usize)> = if rng.random_range(0..3) == 0 {
        vec![(0.0, d)]
    } else {
        let mut ls = vec![0.0];
        for _ in 1..d {
            ls.push(rng.random_range(0.05..2.0));
        }
        ls.sort_by(f64::total_cmp);
        ls.into_iter().map(|e| (e, 1)).collect()
    };

    let mut eigs: Vec<f64> = (0..d)
        .map(|_| {
            let u: f64 = rng.random_range(1e-6..1.0);
            -u.ln()
        })
        .collect();
    let sum: f64 = eigs.iter().sum();
    for e in &mut eigs {
        *e /= sum;
    }
    let system = SystemSpec::new(&levels, eigs).expect("random system is valid");

    let hi = if force_tiny {
        MAX_EXHAUSTIVE_STATES / d
    } else {
        max_bath
    };
    let n: usize = rng.random_range(2..=hi.max(2));
    let span: f64 = rng.random_range(0.5..8.0);
    let mut energies = vec![0.0];
    for _ in 1..n {
        energies.push(rng.random_range(0.0..span));
    }
    let bath = ExplicitBathSpectrum::from_energies(energies, 1.0).expect("random bath is valid");

    let beta: f64 = rng.random_range(0.1..5.0);
    let w_max: f64 = rng.random_range(0.0..2.0 * span);
    RandomInstance {
        system,
        bath,
        beta,
        w_max,
    }
}

/// Draws a reproducible random instance: system dimension 2 to 4 with a
/// zero or random Hamiltonian and strictly positive random eigenvalues,
/// bath of 2 to 50 levels over a random span, `beta` in `[0.1, 5)`, `w_max`
/// up to twice the bath span.
pub fn random_instance(seed: u64) -> RandomInstance {
    random_instance_sized(seed, 50, false)
}

/// Like [`random_instance`] but capped so the joint table fits the
/// exhaustive search (at most [`MAX_EXHAUSTIVE_STATES`] joint states).
pub fn random_tiny_instance(seed: u64) -> RandomInstance {
    random_instance_sized(seed, 0, true)
}

#[cfg(test)]
// Frozen optima keep every digit the reference run printed.
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    fn erased_qubit() -> SystemSpec {
        // Maximally mixed qubit targeting one of its two states: d = 2,
        // g = 1 after the final-Hamiltonian remap.
        SystemSpec::new(&[(0.0, 2)], vec![0.5, 0.5])
            .unwrap()
            .with_final_hamiltonian(1, None)
            .unwrap()
    }

    fn bath(energies: &[f64]) -> ExplicitBathSpectrum {
        ExplicitBathSpectrum::from_energies(energies.to_vec(), 1.0).unwrap()
    }

    fn instance(
        sys: &SystemSpec,
        b: &ExplicitBathSpectrum,
        beta: f64,
        g: usize,
    ) -> (JointStateTable, GroundSlotList) {
        let table = enumerate_joint(sys, b, beta, DEFAULT_JOINT_BUDGET).unwrap();
        (table, ground_slots(b, g))
    }

    #[test]
    fn joint_table_of_product_state() {
        let sys = SystemSpec::new(&[(0.0, 2)], vec![0.5, 0.5]).unwrap();
        let b = bath(&[0.0, 1.0]);
        let table = enumerate_joint(&sys, &b, 1.0, 100).unwrap();
        let z = 1.0 + (-1.0f64).exp();
        let probs: Vec<f64> = table.entries().iter().map(|e| e.probability).collect();
        assert_eq!(probs.len(), 4);
        assert!((probs[0] - 0.5 / z).abs() < 1e-15);
        assert!((probs[1] - 0.5 / z).abs() < 1e-15);
        assert!((probs[2] - 0.5 * (-1.0f64).exp() / z).abs() < 1e-15);
        // Ties broken by (system, bath) index.
        assert_eq!(table.entries()[0].system_index, 0);
        assert_eq!(table.entries()[1].system_index, 1);
        assert!((table.total_probability() - 1.0).abs() < 1e-12);

        // A pure-ground system leaves exactly the bath Gibbs marginal.
        let pure = SystemSpec::new(&[(0.0, 1)], vec![1.0]).unwrap();
        let t2 = enumerate_joint(&pure, &b, 1.0, 100).unwrap();
        assert!((t2.entries()[0].probability - 1.0 / z).abs() < 1e-15);
    }

    #[test]
    fn joint_table_row_count_and_mass() {
        let sys = SystemSpec::new(&[(0.0, 1), (0.4, 1), (1.1, 1)], vec![0.5, 0.3, 0.2]).unwrap();
        let energies: Vec<f64> = (0..35).map(|k| 0.17 * k as f64).collect();
        let b = bath(&energies);
        let table = enumerate_joint(&sys, &b, 0.8, DEFAULT_JOINT_BUDGET).unwrap();
        assert_eq!(table.len(), 105);
        assert!((table.total_probability() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn erased_qubit_small_bath_error_is_one_third() {
        // Bath {0,1,1,2} at beta = ln 2, w_max = 1: eight joint states
        // compete for four slots; the four heaviest fit, leaving exactly 1/3.
        let sys = erased_qubit();
        let b = bath(&[0.0, 1.0, 1.0, 2.0]);
        let (table, slots) = instance(&sys, &b, 2.0f64.ln(), 1);
        let greedy = greedy_optimal_error(&table, &slots, 1.0);
        let expected = 1.0 / 9.0 + 1.0 / 9.0 + 1.0 / 18.0 + 1.0 / 18.0;
        assert_eq!(greedy, expected);
        let one_sided = exhaustive_one_sided_error(&table, &slots, 1.0).unwrap();
        assert_eq!(one_sided, greedy);
        let two_sided = exhaustive_optimal_error(&table, &slots, 1.0).unwrap();
        assert!(two_sided >= greedy);
    }

    #[test]
    fn erased_qubit_four_level_bath_frozen_value() {
        let sys = erased_qubit();
        let b = bath(&[0.0, 1.0, 2.0, 3.0]);
        let (table, slots) = instance(&sys, &b, 1.0, 1);
        let greedy = greedy_optimal_error(&table, &slots, 1.0);
        assert!((greedy - 1.94072171696056339e-1).abs() < 1e-15);
        let one_sided = exhaustive_one_sided_error(&table, &slots, 1.0).unwrap();
        assert_eq!(one_sided, greedy);
        assert!(exhaustive_optimal_error(&table, &slots, 1.0).unwrap() >= greedy);
    }

    #[test]
    fn thermal_qubit_oscillator_bath_frozen_value() {
        let sys = SystemSpec::thermal(&[(0.0, 1), (1.0, 1)], 1.0)
            .unwrap()
            .with_final_hamiltonian(1, Some(1.0))
            .unwrap();
        let b = bath(&[0.0, 1.0, 1.0, 2.0, 2.0, 2.0, 3.0, 3.0, 3.0, 3.0]);
        let (table, slots) = instance(&sys, &b, 0.7, 1);
        let greedy = greedy_optimal_error(&table, &slots, 1.3);
        assert!((greedy - 1.85945662898181513e-1).abs() < 1e-15);
    }

    #[test]
    fn inverted_qubit_two_sided_is_harder() {
        // Population-inverted qubit: the heavy weight sits on the excited
        // level, so the lower-side work constraint actually binds.
        let sys = SystemSpec::new(&[(0.0, 1), (2.0, 1)], vec![0.3, 0.7]).unwrap();
        let b = bath(&[0.0, 1.0, 2.5, 4.0]);
        let (table, slots) = instance(&sys, &b, 0.8, 1);
        let greedy = greedy_optimal_error(&table, &slots, 0.9);
        assert!((greedy - 1.32987547980008808e-1).abs() < 1e-15);
        let one_sided = exhaustive_one_sided_error(&table, &slots, 0.9).unwrap();
        assert_eq!(one_sided, greedy);
        let two_sided = exhaustive_optimal_error(&table, &slots, 0.9).unwrap();
        assert!((two_sided - 2.43562582303819969e-1).abs() < 1e-15);
        assert!(two_sided > greedy);
    }

    #[test]
    fn degenerate_ground_space_uses_both_slots() {
        let sys = SystemSpec::new(&[(0.0, 2), (2.0, 1)], vec![0.25, 0.25, 0.5]).unwrap();
        let b = bath(&[0.0, 1.2]);
        assert_eq!(sys.ground_degeneracy(), 2);
        let (table, slots) = instance(&sys, &b, 0.9, 2);
        assert_eq!(slots.len(), 4);
        let greedy = greedy_optimal_error(&table, &slots, 0.5);
        assert!((greedy - 1.26753008331168898e-1).abs() < 1e-15);
        assert_eq!(
            exhaustive_one_sided_error(&table, &slots, 0.5).unwrap(),
            greedy
        );
        let two_sided = exhaustive_optimal_error(&table, &slots, 0.5).unwrap();
        assert!((two_sided - 0.5).abs() < 1e-15);

        // Collapsing the target to one state makes everything harder.
        let narrow = ground_slots(&b, 1);
        let greedy1 = greedy_optimal_error(&table, &narrow, 0.5);
        assert!((greedy1 - 4.40129512496753306e-1).abs() < 1e-15);
        let two1 = exhaustive_optimal_error(&table, &narrow, 0.5).unwrap();
        assert!((two1 - 0.75).abs() < 1e-15);
    }

    #[test]
    fn tight_work_cap_strands_half_the_mass() {
        // Qubit against bath {0,1} with w_max = 0.25: each bath level's two
        // entries compete for the single slot at that energy, in both rules.
        let sys = erased_qubit();
        let b = bath(&[0.0, 1.0]);
        let (table, slots) = instance(&sys, &b, 1.0, 1);
        assert_eq!(greedy_optimal_error(&table, &slots, 0.25), 0.5);
        assert_eq!(
            exhaustive_one_sided_error(&table, &slots, 0.25).unwrap(),
            0.5
        );
        assert_eq!(exhaustive_optimal_error(&table, &slots, 0.25).unwrap(), 0.5);
    }

    #[test]
    fn full_matching_returns_exact_zero() {
        let sys = SystemSpec::new(&[(0.0, 2)], vec![0.5, 0.5]).unwrap();
        let b = bath(&[0.0, 1.0]);
        // g = d = 2, so slots = entries and a big enough w_max matches all
        let (table, slots) = instance(&sys, &b, 1.0, 2);
        assert_eq!(greedy_optimal_error(&table, &slots, 2.0), 0.0);
        assert_eq!(
            exhaustive_one_sided_error(&table, &slots, 2.0).unwrap(),
            0.0
        );
    }

    #[test]
    fn extended_slots_recover_perfect_cooling() {
        // Exponential count law: doubling capacity needs exactly w = ln 2.
        // Slots drawn from the same count model continued past the entry
        // bath's edge pair entry level m with slots {2m-1, 2m}.
        let entry_bath = ExplicitBathSpectrum::with_exponential_counts(1.0, 64, 1.0).unwrap();
        let slot_bath = ExplicitBathSpectrum::with_exponential_counts(1.0, 128, 1.0).unwrap();
        let sys = erased_qubit();
        let table = enumerate_joint(&sys, &entry_bath, 1.0, DEFAULT_JOINT_BUDGET).unwrap();
        let w = 2.0f64.ln();
        assert_eq!(
            greedy_optimal_error(&table, &ground_slots(&slot_bath, 1), w),
            0.0
        );
        // Within the truncated spectrum alone the edge starves the matching.
        assert!(greedy_optimal_error(&table, &ground_slots(&entry_bath, 1), w) > 0.0);
    }

    #[test]
    fn erasure_threshold_sentinels() {
        let b = ExplicitBathSpectrum::with_exponential_counts(1.0, 200, 1.0).unwrap();
        let w = 2.0f64.ln();
        // I(E) = floor(e^E) satisfies 2 I(E) <= I(E + ln 2) at every grid
        // point, so the threshold is unbounded.
        assert_eq!(erasure_threshold_simple(&b, w), f64::INFINITY);
        // With w_max = 0 already the first point fails (2 I > I).
        assert_eq!(erasure_threshold_simple(&b, 0.0), f64::NEG_INFINITY);
        // Slightly too little work fails at the origin as well: I(0.9 ln 2)
        // is still 1.
        assert_eq!(erasure_threshold_simple(&b, 0.9 * w), f64::NEG_INFINITY);
    }

    #[test]
    fn erasure_threshold_flips_mid_spectrum() {
        let b = bath(&[0.0, 1.0, 1.0, 2.0]);
        // Capped grid {0, 1}: E = 0 holds (2 <= 3), E = 1 flips (6 > 4),
        // so the last good energy is 0.
        assert_eq!(erasure_threshold_simple(&b, 1.0), 0.0);
        // w_max = 2 caps the grid at {0}, which holds (2 <= 4): unbounded
        // as far as the capped scan can see.
        assert_eq!(erasure_threshold_simple(&b, 2.0), f64::INFINITY);
    }

    #[test]
    fn joint_budget_enforced() {
        let sys = erased_qubit();
        let b = bath(&[0.0, 1.0, 2.0]);
        let err = enumerate_joint(&sys, &b, 1.0, 5).unwrap_err();
        assert!(matches!(
            err,
            Error::JointBudget {
                states: 6,
                budget: 5
            }
        ));
    }

    #[test]
    fn exhaustive_size_cap_enforced() {
        let sys = erased_qubit();
        let energies: Vec<f64> = (0..5).map(f64::from).collect();
        let b = bath(&energies);
        let (table, slots) = instance(&sys, &b, 1.0, 1);
        assert_eq!(table.len(), 10);
        let err = exhaustive_optimal_error(&table, &slots, 1.0).unwrap_err();
        assert!(matches!(err, Error::ExhaustiveTooLarge { .. }));
    }

    #[test]
    fn random_instances_are_reproducible() {
        let a = random_instance(42);
        let b = random_instance(42);
        assert_eq!(a.bath.energies(), b.bath.energies());
        assert_eq!(a.beta, b.beta);
        assert_eq!(a.w_max, b.w_max);
        assert_eq!(a.system.init_eigs(), b.system.init_eigs());
        let c = random_instance(43);
        assert_ne!(a.beta, c.beta);
    }

    #[test]
    fn tiny_instances_fit_the_exhaustive_cap() {
        for seed in 0..60 {
            let inst = random_tiny_instance(seed);
            assert!(
                inst.system.dim() * inst.bath.len() <= MAX_EXHAUSTIVE_STATES,
                "seed {seed}: {} x {}",
                inst.system.dim(),
                inst.bath.len()
            );
        }
    }
}
