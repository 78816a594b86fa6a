//! Entropy rate of subsystem A under coupling Hamiltonians.
//!
//! A state is lazy with respect to A exactly when d/dt S(ρ_A(t)) vanishes at
//! t = 0 for every joint Hamiltonian. The rate is estimated here by a central
//! difference of the base-2 von Neumann entropy of the evolved marginal, and
//! "every Hamiltonian" is approximated by a batch of random ones.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::classify::{commutator_norm, DEFAULT_TOL};
use crate::fano::{self, StateError, TwoQubitState};
use crate::matcore::{herm_eig, herm_exp, ComplexMatrix};
use crate::sampling::ginibre_matrix;

pub const DEFAULT_STEP: f64 = 1e-4;
/// Largest |rate| still read as zero.
pub const ZERO_RATE_TOL: f64 = 1e-6;
/// Smallest max |rate| read as a witness of non-laziness.
pub const NONZERO_RATE_TOL: f64 = 1e-3;
/// Commutator norms in this band may legitimately fail to produce a witness.
pub const GRAY_ZONE: (f64, f64) = (1e-9, 1e-4);
/// Marginal eigenvalues at or below this count as zero in the entropy.
const EIG_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DynamicsError {
    #[error("unphysical state: {0}")]
    Unphysical(#[from] StateError),
    #[error("step {step} outside (0, {max}] for this Hamiltonian")]
    Step { step: f64, max: f64 },
    #[error("Hamiltonian is not Hermitian")]
    NotHermitian,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CouplingHamiltonian {
    h: ComplexMatrix,
    norm_scale: f64,
}

impl CouplingHamiltonian {
    pub fn new(h: ComplexMatrix) -> Result<Self, DynamicsError> {
        if h.rows() != 4 || !h.is_hermitian(1e-12) {
            return Err(DynamicsError::NotHermitian);
        }
        let eig = herm_eig(&h, 1e-12).map_err(|_| DynamicsError::NotHermitian)?;
        let norm_scale = eig.values.iter().map(|w| w.abs()).fold(0.0, f64::max);
        Ok(Self { h, norm_scale })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.h
    }

    /// Spectral norm.
    pub fn norm_scale(&self) -> f64 {
        self.norm_scale
    }
}

/// Gaussian Hermitian 4×4 matrix (g + g†)/2, rescaled to unit spectral norm.
pub fn random_hamiltonian(seed: u64) -> CouplingHamiltonian {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = ginibre_matrix(&mut rng, 4);
    let h = (&g + &g.adjoint()).scale_real(0.5);
    let raw = CouplingHamiltonian::new(h).expect("symmetrised matrix is Hermitian");
    let h = raw.h.scale_real(1.0 / raw.norm_scale);
    CouplingHamiltonian { h, norm_scale: 1.0 }
}

/// e^{−iht} ρ e^{iht}.
pub fn evolve(rho: &TwoQubitState, h: &CouplingHamiltonian, t: f64) -> TwoQubitState {
    let u = herm_exp(&h.h, t).expect("Hermitian by construction");
    let m = &(&u * rho.matrix()) * &u.adjoint();
    TwoQubitState::new(m).expect("unitary evolution preserves trace and Hermiticity")
}

/// −Σ w log₂ w over the eigenvalues of a Hermitian matrix, ignoring w ≤ 1e-12.
pub fn entropy_bits(m: &ComplexMatrix) -> f64 {
    let eig = herm_eig(m, 1e-8).expect("density matrix is Hermitian");
    eig.values.iter().filter(|&&w| w > EIG_FLOOR).map(|&w| -w * w.log2()).sum()
}

/// Von Neumann entropy of ρ_A in bits.
pub fn entropy_a(rho: &TwoQubitState) -> Result<f64, DynamicsError> {
    fano::validate(rho, DEFAULT_TOL).into_result()?;
    Ok(entropy_bits(&rho.reduced_a()))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateReport {
    /// dS_A/dt at t = 0, bits per unit time.
    pub rate: f64,
    pub step: f64,
    /// Seed of the Hamiltonian, when it came from [`random_hamiltonian`].
    pub seed: Option<u64>,
    /// ρ_A is pure within 1e-12; the entropy derivative is ill-conditioned there.
    pub caution: bool,
}

/// Central-difference entropy rate [S(ρ_A(+step)) − S(ρ_A(−step))] / (2·step).
pub fn entropy_rate_at_zero(rho: &TwoQubitState, h: &CouplingHamiltonian, step: f64) -> Result<RateReport, DynamicsError> {
    fano::validate(rho, DEFAULT_TOL).into_result()?;
    let max = 1e-3 / h.norm_scale.max(f64::MIN_POSITIVE);
    if !(step > 0.0 && step <= max) {
        return Err(DynamicsError::Step { step, max });
    }
    let marginal = herm_eig(&rho.reduced_a(), 1e-8).expect("Hermitian marginal");
    let caution = marginal.min() <= EIG_FLOOR;
    let plus = entropy_bits(&evolve(rho, h, step).reduced_a());
    let minus = entropy_bits(&evolve(rho, h, -step).reduced_a());
    Ok(RateReport { rate: (plus - minus) / (2.0 * step), step, seed: None, caution })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DynamicsCheck {
    pub max_abs_rate: f64,
    pub rates: Vec<RateReport>,
    pub lazy: bool,
    pub commutator_norm: f64,
    /// The commutator norm lies in [`GRAY_ZONE`].
    pub gray_zone: bool,
    /// (lazy ∧ max ≤ 1e-6) ∨ (¬lazy ∧ max > 1e-3).
    pub consistent: bool,
}

/// Seed of the k-th Hamiltonian in a batch started at `seed`.
pub fn hamiltonian_seed(seed: u64, k: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(k)
}

/// Compare the classifier's laziness verdict with sampled entropy rates.
pub fn laziness_dynamics_check(
    rho: &TwoQubitState,
    n_hamiltonians: usize,
    seed: u64,
    step: f64,
) -> Result<DynamicsCheck, DynamicsError> {
    fano::validate(rho, DEFAULT_TOL).into_result()?;
    let comm = commutator_norm(rho);
    let lazy = comm <= DEFAULT_TOL;
    let mut rates = Vec::with_capacity(n_hamiltonians);
    for k in 0..n_hamiltonians as u64 {
        let hseed = hamiltonian_seed(seed, k);
        let h = random_hamiltonian(hseed);
        let mut r = entropy_rate_at_zero(rho, &h, step)?;
        r.seed = Some(hseed);
        rates.push(r);
    }
    let max_abs_rate = rates.iter().map(|r| r.rate.abs()).fold(0.0, f64::max);
    let consistent = (lazy && max_abs_rate <= ZERO_RATE_TOL) || (!lazy && max_abs_rate > NONZERO_RATE_TOL);
    let gray_zone = comm >= GRAY_ZONE.0 && comm <= GRAY_ZONE.1;
    Ok(DynamicsCheck { max_abs_rate, rates, lazy, commutator_norm: comm, gray_zone, consistent })
}
