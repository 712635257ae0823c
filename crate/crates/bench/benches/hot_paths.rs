//! Hot paths: greedy assignment on a large joint table, the counting
//! bound on a composed bath, and spectrum composition itself.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use cryobound::bounds::error_bound_general;
use cryobound::oracle::{enumerate_joint, greedy_optimal_error, ground_slots};
use cryobound::spectra::{oscillator_levels, ExplicitBathSpectrum, SystemSpec};
use cryobound::DEFAULT_STATE_BUDGET;

fn bench_greedy(c: &mut Criterion) {
    let system = SystemSpec::thermal(&[(0.0, 1), (1.0, 1)], 1.0).unwrap();
    let bath = ExplicitBathSpectrum::with_exponential_counts(1.0, 5000, 1.0).unwrap();
    let table = enumerate_joint(&system, &bath, 1.0, 100_000).unwrap();
    let slots = ground_slots(&bath, system.ground_degeneracy());
    c.bench_function("greedy_assignment_10k_entries", |b| {
        b.iter(|| greedy_optimal_error(black_box(&table), black_box(&slots), black_box(0.7)))
    });
}

fn bench_general_bound(c: &mut Criterion) {
    let system = SystemSpec::thermal(&[(0.0, 1), (0.4, 1)], 1.0).unwrap();
    let mode = oscillator_levels(1.0, 36);
    let modes = vec![mode.clone(), mode.clone(), mode];
    let bath = ExplicitBathSpectrum::compose(&modes, 35.0, 1.0, 3.0, DEFAULT_STATE_BUDGET).unwrap();
    c.bench_function("general_bound_8k_state_bath", |b| {
        b.iter(|| error_bound_general(black_box(&system), black_box(&bath), 0.5, 1.0).unwrap())
    });
}

fn bench_compose(c: &mut Criterion) {
    let mode = oscillator_levels(1.0, 26);
    let modes = vec![mode.clone(), mode.clone(), mode.clone(), mode];
    c.bench_function("compose_four_modes_24k_states", |b| {
        b.iter(|| {
            ExplicitBathSpectrum::compose(black_box(&modes), 25.0, 1.0, 4.0, DEFAULT_STATE_BUDGET)
                .unwrap()
        })
    });
}

criterion_group!(benches, bench_greedy, bench_general_bound, bench_compose);
criterion_main!(benches);
