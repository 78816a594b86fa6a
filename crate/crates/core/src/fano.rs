//! Two-qubit states and their Fano (Pauli-basis) parameters.
//!
//! A state is written as
//!
//! ```text
//! ρ = ¼ (I⊗I + Σ x_i σ_i⊗I + Σ y_j I⊗σ_j + Σ T_ij σ_i⊗σ_j)
//! ```
//!
//! with Bloch vectors `x`, `y` of the two marginals and correlation matrix `T`.
//! Local unitaries act on these parameters as independent rotations of the A
//! and B indices, which is what [`normal_form`] exploits.

use thiserror::Error;

use crate::matcore::{self, herm_eig, kron, pauli, svd3, ComplexMatrix, RealMatrix3, C64};

/// Tolerance for Hermiticity and unit trace of anything called a state.
pub const STRUCTURE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StateError {
    #[error("expected a 4x4 matrix, found {rows}x{cols}")]
    Shape { rows: usize, cols: usize },
    #[error("matrix is not Hermitian (deviation {0:.3e})")]
    NotHermitian(f64),
    #[error("trace deviates from 1 by {0:.3e}")]
    Trace(f64),
    #[error("state is not positive semidefinite (min eigenvalue {0:.3e})")]
    NotPositive(f64),
}

/// 4×4 density matrix in the computational basis |00⟩, |01⟩, |10⟩, |11⟩.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitState(ComplexMatrix);

impl TwoQubitState {
    /// Accepts a Hermitian, unit-trace 4×4 matrix. Positivity is left to [`validate`].
    pub fn new(m: ComplexMatrix) -> Result<Self, StateError> {
        if m.rows() != 4 || m.cols() != 4 {
            return Err(StateError::Shape { rows: m.rows(), cols: m.cols() });
        }
        let dev = m.hermiticity_deviation();
        if dev > STRUCTURE_TOL * m.frob_norm().max(1.0) {
            return Err(StateError::NotHermitian(dev));
        }
        let tr = m.trace();
        let trace_dev = (tr - C64::new(1.0, 0.0)).norm();
        if trace_dev > STRUCTURE_TOL {
            return Err(StateError::Trace(trace_dev));
        }
        Ok(Self(m))
    }

    pub(crate) fn new_unchecked(m: ComplexMatrix) -> Self {
        debug_assert_eq!((m.rows(), m.cols()), (4, 4));
        Self(m)
    }

    /// |ψ⟩⟨ψ| for a (not necessarily normalised) 4-vector.
    pub fn pure(psi: [C64; 4]) -> Self {
        let n = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let v: Vec<C64> = psi.iter().map(|z| z / n).collect();
        Self(ComplexMatrix::projector(&v))
    }

    pub fn maximally_mixed() -> Self {
        Self(ComplexMatrix::identity(4).scale_real(0.25))
    }

    /// |Φ⁺⟩ = (|00⟩ + |11⟩)/√2.
    pub fn bell_phi_plus() -> Self {
        let one = C64::new(1.0, 0.0);
        let zero = C64::new(0.0, 0.0);
        Self::pure([one, zero, zero, one])
    }

    pub fn product(rho_a: &ComplexMatrix, rho_b: &ComplexMatrix) -> Self {
        Self(kron(rho_a, rho_b))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn reduced_a(&self) -> ComplexMatrix {
        matcore::partial_trace_b(&self.0).expect("4x4 by construction")
    }

    pub fn reduced_b(&self) -> ComplexMatrix {
        matcore::partial_trace_a(&self.0).expect("4x4 by construction")
    }

    /// The same state with the roles of A and B exchanged.
    pub fn swapped(&self) -> Self {
        Self(matcore::swap_subsystems(&self.0).expect("4x4 by construction"))
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        herm_eig(&self.0, 1e-8).expect("Hermitian by construction").values
    }

    pub fn purity(&self) -> f64 {
        (&self.0 * &self.0).trace().re
    }
}

/// Outcome of [`validate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Physicality {
    pub physical: bool,
    pub hermitian_deviation: f64,
    pub trace_deviation: f64,
    pub min_eigenvalue: f64,
}

impl Physicality {
    pub fn into_result(self) -> Result<(), StateError> {
        if self.hermitian_deviation > STRUCTURE_TOL {
            Err(StateError::NotHermitian(self.hermitian_deviation))
        } else if self.trace_deviation > STRUCTURE_TOL {
            Err(StateError::Trace(self.trace_deviation))
        } else if !self.physical {
            Err(StateError::NotPositive(self.min_eigenvalue))
        } else {
            Ok(())
        }
    }
}

/// Physical iff Hermitian and unit trace (within [`STRUCTURE_TOL`]) and the
/// smallest eigenvalue is at least `−tol`.
pub fn validate(rho: &TwoQubitState, tol: f64) -> Physicality {
    validate_matrix(rho.matrix(), tol)
}

/// [`validate`] for a raw 4×4 matrix that has not been wrapped yet.
pub fn validate_matrix(m: &ComplexMatrix, tol: f64) -> Physicality {
    let hermitian_deviation = m.hermiticity_deviation();
    let trace_deviation = (m.trace() - C64::new(1.0, 0.0)).norm();
    let structural = hermitian_deviation <= STRUCTURE_TOL * m.frob_norm().max(1.0);
    let min_eigenvalue = if structural {
        herm_eig(m, STRUCTURE_TOL).map(|e| e.min()).unwrap_or(f64::NAN)
    } else {
        f64::NAN
    };
    Physicality {
        physical: structural
            && m.rows() == 4
            && m.cols() == 4
            && trace_deviation <= STRUCTURE_TOL
            && min_eigenvalue >= -tol,
        hermitian_deviation,
        trace_deviation,
        min_eigenvalue,
    }
}

/// Fano coefficients: `x` (A Bloch vector), `y` (B Bloch vector), `t` (correlations).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FanoParams {
    pub x: [f64; 3],
    pub y: [f64; 3],
    pub t: RealMatrix3,
}

fn pauli_products() -> [[ComplexMatrix; 4]; 4] {
    std::array::from_fn(|i| std::array::from_fn(|j| kron(&pauli(i), &pauli(j))))
}

/// tr(ρ P) = Σ_ij ρ_ij P_ji.
fn expectation(rho: &ComplexMatrix, op: &ComplexMatrix) -> f64 {
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..4 {
        for j in 0..4 {
            acc += rho[(i, j)] * op[(j, i)];
        }
    }
    acc.re
}

impl FanoParams {
    pub fn bell_diagonal(lambda: [f64; 3]) -> Self {
        Self { x: [0.0; 3], y: [0.0; 3], t: RealMatrix3::diag(lambda) }
    }

    /// ¼(I⊗I + x·σ⊗I + I⊗y·σ + Σ T_ij σ_i⊗σ_j). No positivity check.
    pub fn compose(&self) -> TwoQubitState {
        let paulis = pauli_products();
        let mut m = paulis[0][0].clone();
        for k in 0..3 {
            m = &m + &paulis[k + 1][0].scale_real(self.x[k]);
            m = &m + &paulis[0][k + 1].scale_real(self.y[k]);
            for l in 0..3 {
                m = &m + &paulis[k + 1][l + 1].scale_real(self.t.get(k, l));
            }
        }
        TwoQubitState::new_unchecked(m.scale_real(0.25))
    }

    /// Parameters after local rotations `o_a` on A and `o_b` on B.
    pub fn rotated(&self, o_a: &RealMatrix3, o_b: &RealMatrix3) -> Self {
        Self { x: o_a.mul_vec(self.x), y: o_b.mul_vec(self.y), t: o_a.mul(&self.t).mul(&o_b.transpose()) }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let dx = self.x.iter().zip(other.x).map(|(a, b)| (a - b).abs());
        let dy = self.y.iter().zip(other.y).map(|(a, b)| (a - b).abs());
        dx.chain(dy).fold(self.t.max_abs_diff(&other.t), f64::max)
    }
}

/// x_i = tr(ρ σ_i⊗I), y_j = tr(ρ I⊗σ_j), T_ij = tr(ρ σ_i⊗σ_j).
pub fn decompose(rho: &TwoQubitState) -> FanoParams {
    let m = rho.matrix();
    let paulis = pauli_products();
    let mut p = FanoParams::default();
    for k in 0..3 {
        p.x[k] = expectation(m, &paulis[k + 1][0]);
        p.y[k] = expectation(m, &paulis[0][k + 1]);
        for l in 0..3 {
            p.t.0[k][l] = expectation(m, &paulis[k + 1][l + 1]);
        }
    }
    p
}

/// Decompose a raw matrix, rejecting anything that is not a Hermitian unit-trace 4×4.
pub fn decompose_matrix(m: &ComplexMatrix) -> Result<FanoParams, StateError> {
    Ok(decompose(&TwoQubitState::new(m.clone())?))
}

/// Local-unitary normal form of the correlation matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalForm {
    pub x_rot: [f64; 3],
    pub y_rot: [f64; 3],
    /// Diagonal of `o_a·t·o_bᵀ`; `|d₁| ≤ |d₂| ≤ |d₃|`, at most the first entry negative.
    pub d: [f64; 3],
    /// Singular values of `t`, ascending.
    pub sigma: [f64; 3],
    pub o_a: RealMatrix3,
    pub o_b: RealMatrix3,
}

impl NormalForm {
    /// The rotated parameters, with `t` replaced by `diag(d)`.
    pub fn params(&self) -> FanoParams {
        FanoParams { x: self.x_rot, y: self.y_rot, t: RealMatrix3::diag(self.d) }
    }
}

/// Rotate `t` to diagonal form with `o_a, o_b ∈ SO(3)`.
///
/// Proper rotations can only flip signs of the diagonal in pairs, so when
/// `det t < 0` one entry of `d` stays negative. That entry is placed on the
/// smallest singular value. `sigma` is always `|d|` sorted ascending.
pub fn normal_form(p: &FanoParams) -> NormalForm {
    let svd = svd3(&p.t);
    // svd3 returns descending order; reverse to ascending.
    let order = [2usize, 1, 0];
    let mut u_cols: [[f64; 3]; 3] = std::array::from_fn(|k| svd.u.column(order[k]));
    let mut v_cols: [[f64; 3]; 3] = std::array::from_fn(|k| svd.v.column(order[k]));
    let sigma: [f64; 3] = std::array::from_fn(|k| svd.s[order[k]]);
    let mut d = sigma;
    if RealMatrix3::from_columns(u_cols).det() < 0.0 {
        u_cols[0] = u_cols[0].map(|x| -x);
        d[0] = -d[0];
    }
    if RealMatrix3::from_columns(v_cols).det() < 0.0 {
        v_cols[0] = v_cols[0].map(|x| -x);
        d[0] = -d[0];
    }
    // t = U diag(d) Vᵀ  ⇒  Uᵀ t V = diag(d).
    let o_a = RealMatrix3::from_columns(u_cols).transpose();
    let o_b = RealMatrix3::from_columns(v_cols).transpose();
    NormalForm { x_rot: o_a.mul_vec(p.x), y_rot: o_b.mul_vec(p.y), d, sigma, o_a, o_b }
}
