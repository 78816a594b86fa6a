//! Random states, local unitaries and Hamiltonians.
//!
//! Physical states are drawn from the Ginibre ensemble, ρ = GG†/tr(GG†) with
//! G a 4×4 matrix of i.i.d. complex standard normals. Every sampler takes an
//! explicit `Rng` so callers control seeding.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::fano::{FanoParams, TwoQubitState};
use crate::matcore::{kron, pauli, ComplexMatrix, C64};

pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im)
}

pub fn ginibre_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    let data = (0..n * n).map(|_| complex_gaussian(rng)).collect();
    ComplexMatrix::from_vec(n, n, data).expect("n*n entries")
}

/// Full-rank random two-qubit state from the Ginibre ensemble.
pub fn ginibre_state<R: Rng + ?Sized>(rng: &mut R) -> TwoQubitState {
    let g = ginibre_matrix(rng, 4);
    let w = &g * &g.adjoint();
    let tr = w.trace().re;
    TwoQubitState::new_unchecked(w.scale_real(1.0 / tr))
}

/// Random single-qubit state (Ginibre 2×2, full rank).
pub fn ginibre_qubit<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix {
    let g = ginibre_matrix(rng, 2);
    let w = &g * &g.adjoint();
    let tr = w.trace().re;
    w.scale_real(1.0 / tr)
}

/// Haar-random element of SU(2), a0·I − i(a1σx + a2σy + a3σz) with a uniform on S³.
pub fn haar_su2<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix {
    let mut a: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
    let n = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    a.iter_mut().for_each(|x| *x /= n);
    let mut u = ComplexMatrix::identity(2).scale_real(a[0]);
    for k in 1..4 {
        u = &u + &pauli(k).scale(C64::new(0.0, -a[k]));
    }
    u
}

/// U_A ⊗ U_B with both factors Haar-random.
pub fn local_unitary<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix {
    kron(&haar_su2(rng), &haar_su2(rng))
}

/// U ρ U†.
pub fn conjugate(rho: &TwoQubitState, u: &ComplexMatrix) -> TwoQubitState {
    TwoQubitState::new_unchecked(&(u * rho.matrix()) * &u.adjoint())
}

/// Random product state ρ_A ⊗ ρ_B with mixed marginals.
pub fn product_state<R: Rng + ?Sized>(rng: &mut R) -> TwoQubitState {
    TwoQubitState::new_unchecked(kron(&ginibre_qubit(rng), &ginibre_qubit(rng)))
}

/// Random classical-quantum state Σ_i p_i |ψ_i⟩⟨ψ_i| ⊗ ρ_i over a random A basis.
pub fn classical_quantum_state<R: Rng + ?Sized>(rng: &mut R) -> TwoQubitState {
    let p: f64 = rng.random();
    let u = haar_su2(rng);
    let e0 = ComplexMatrix::projector(&u.column(0));
    let e1 = ComplexMatrix::projector(&u.column(1));
    let a = kron(&e0, &ginibre_qubit(rng)).scale_real(p);
    let b = kron(&e1, &ginibre_qubit(rng)).scale_real(1.0 - p);
    TwoQubitState::new_unchecked(&a + &b)
}

/// Random physical Bell-diagonal triple, by rejection from the cube.
pub fn bell_diagonal_lambda<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    loop {
        let l: [f64; 3] = std::array::from_fn(|_| rng.random_range(-1.0..=1.0));
        let spec = crate::belldiag::BellDiagPoint::new(l).spectrum();
        if spec.iter().all(|&w| w >= 0.0) {
            return l;
        }
    }
}

/// Random physical state with x = 0 (so lazy) and generic y, T, by rejection.
pub fn unbiased_a_state<R: Rng + ?Sized>(rng: &mut R) -> TwoQubitState {
    loop {
        let y: [f64; 3] = std::array::from_fn(|_| rng.random_range(-0.5..=0.5));
        let t = crate::matcore::RealMatrix3(std::array::from_fn(|_| {
            std::array::from_fn(|_| rng.random_range(-0.5..=0.5))
        }));
        let params = FanoParams { x: [0.0; 3], y, t };
        let rho = params.compose();
        if crate::fano::validate(&rho, 0.0).physical {
            return rho;
        }
    }
}
