#![allow(dead_code)]

use lazyq::families::{LazyDiscordantParams, SeparableFamilyParams};
use lazyq::fano::{FanoParams, TwoQubitState};
use lazyq::matcore::C64;
use lazyq::sampling;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random physical state drawn from a rotating mix of ensembles, so that every
/// level of the hierarchy is populated.
pub fn mixed_state<R: Rng>(rng: &mut R, index: usize) -> TwoQubitState {
    let rho = match index % 8 {
        0 => sampling::ginibre_state(rng),
        1 => sampling::product_state(rng),
        2 => sampling::classical_quantum_state(rng),
        3 => FanoParams::bell_diagonal(sampling::bell_diagonal_lambda(rng)).compose(),
        4 => random_lazy_discordant(rng).compose(),
        5 => sampling::unbiased_a_state(rng),
        6 => random_separable_family(rng).compose(),
        _ => random_pure(rng),
    };
    if index % 3 == 0 {
        sampling::conjugate(&rho, &sampling::local_unitary(rng))
    } else {
        rho
    }
}

pub fn random_pure<R: Rng>(rng: &mut R) -> TwoQubitState {
    TwoQubitState::pure(std::array::from_fn(|_| sampling::complex_gaussian(rng)))
}

pub fn random_lazy_discordant<R: Rng>(rng: &mut R) -> LazyDiscordantParams {
    loop {
        let l2 = rng.random_range(0.0..0.5);
        let l3 = rng.random_range(0.0..1.0);
        let y1 = rng.random_range(-1.0..1.0);
        if let Ok(q) = LazyDiscordantParams::new(y1, l2, l3) {
            return q;
        }
    }
}

pub fn random_separable_family<R: Rng>(rng: &mut R) -> SeparableFamilyParams {
    SeparableFamilyParams::new(
        rng.random_range(0.01..0.99),
        rng.random_range(0.0..=PI),
        rng.random_range(0.0..=PI),
        rng.random_range(0.0..=1.0),
        rng.random_range(0.0..=1.0),
    )
    .unwrap()
}

pub fn max_entry_diff(a: &lazyq::matcore::ComplexMatrix, b: &lazyq::matcore::ComplexMatrix) -> f64 {
    (a - b).as_slice().iter().map(|z: &C64| z.norm()).fold(0.0, f64::max)
}

/// Sorted copy.
pub fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}
