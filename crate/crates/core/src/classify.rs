//! Hierarchy predicates for two-qubit states.
//!
//! Laziness with respect to A is decided twice: once from the commutator
//! `[ρ, ρ_A⊗I]` and once from the Fano parameters (every column of `T` must
//! be parallel to `x`). [`classify`] insists that both routes agree.
//!
//! Zero discord with respect to A is decided from the normal form: the only
//! measurement directions that can leave ρ invariant are the direction of `x`
//! (when `T` vanishes) or the single singular axis of a rank-one `T` (when `x`
//! lies along it). The candidate is then checked by dephasing ρ in that basis.

use thiserror::Error;

use crate::fano::{self, decompose, normal_form, FanoParams, Physicality, StateError, TwoQubitState};
use crate::matcore::{
    commutator, cross, herm_eig, kron, norm3, partial_transpose_b, pauli, ComplexMatrix, C64,
};

pub const DEFAULT_TOL: f64 = 1e-9;

/// Routes may disagree only while both witnesses sit inside this multiple of `tol`.
const ROUTE_BAND: f64 = 100.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClassifyError {
    #[error("unphysical state: {0}")]
    Unphysical(#[from] StateError),
    #[error(
        "laziness routes disagree: commutator norm {commutator_norm:.3e}, parallelism residual {parallel_residual:.3e}"
    )]
    RouteDisagreement { commutator_norm: f64, parallel_residual: f64 },
}

fn require_physical(rho: &TwoQubitState, tol: f64) -> Result<Physicality, ClassifyError> {
    let phys = fano::validate(rho, tol);
    phys.into_result()?;
    Ok(phys)
}

/// ‖[ρ, ρ_A⊗I]‖_F.
pub fn commutator_norm(rho: &TwoQubitState) -> f64 {
    let lifted = kron(&rho.reduced_a(), &pauli(0));
    commutator(rho.matrix(), &lifted).frob_norm()
}

/// Lazy with respect to A iff `‖[ρ, ρ_A⊗I]‖_F ≤ tol`. Returns the verdict and the norm.
pub fn lazy_by_commutator(rho: &TwoQubitState, tol: f64) -> Result<(bool, f64), ClassifyError> {
    require_physical(rho, tol)?;
    let norm = commutator_norm(rho);
    Ok((norm <= tol, norm))
}

/// Lazy with respect to B, by exchanging the subsystems.
pub fn lazy_b_by_commutator(rho: &TwoQubitState, tol: f64) -> Result<(bool, f64), ClassifyError> {
    lazy_by_commutator(&rho.swapped(), tol)
}

/// Residual `max_j ‖x × t_j‖ / max(1, |x|·|t_j|)` over the columns `t_j` of `T`.
pub fn parallel_residual(p: &FanoParams) -> f64 {
    let nx = norm3(p.x);
    (0..3)
        .map(|j| {
            let col = p.t.column(j);
            norm3(cross(p.x, col)) / (nx * norm3(col)).max(1.0)
        })
        .fold(0.0, f64::max)
}

/// Lazy with respect to A iff every column of `T` is parallel to `x`.
pub fn lazy_by_parallelism(p: &FanoParams, tol: f64) -> (bool, f64) {
    let r = parallel_residual(p);
    (r <= tol, r)
}

/// Result of the zero-discord test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroDiscord {
    pub zero_discord: bool,
    /// Number of singular values of `T` above `tol`.
    pub rank: usize,
    /// Measurement direction on A (original frame) when a candidate exists.
    pub direction: Option<[f64; 3]>,
    /// ‖ρ − Σ_k (Π_k⊗I) ρ (Π_k⊗I)‖_F for the candidate direction.
    pub dephasing_residual: Option<f64>,
}

/// ρ minus its dephased copy in the A basis {½(I ± n·σ)}.
pub fn dephasing_residual(rho: &TwoQubitState, n: [f64; 3]) -> f64 {
    let mut n_sigma = ComplexMatrix::zeros(2, 2);
    for k in 0..3 {
        n_sigma = &n_sigma + &pauli(k + 1).scale_real(n[k]);
    }
    let id = pauli(0);
    let pi0 = kron(&(&id + &n_sigma).scale_real(0.5), &id);
    let pi1 = kron(&(&id - &n_sigma).scale_real(0.5), &id);
    let m = rho.matrix();
    let dephased = &(&(&pi0 * m) * &pi0) + &(&(&pi1 * m) * &pi1);
    (m - &dephased).frob_norm()
}

/// Zero discord with respect to A.
pub fn zero_discord_a(p: &FanoParams, tol: f64) -> ZeroDiscord {
    let nf = normal_form(p);
    let rank = nf.sigma.iter().filter(|&&s| s > tol).count();
    let direction = match rank {
        0 => {
            let nx = norm3(p.x);
            Some(if nx > tol { p.x.map(|c| c / nx) } else { [0.0, 0.0, 1.0] })
        }
        1 => {
            let off_axis = (nf.x_rot[0] * nf.x_rot[0] + nf.x_rot[1] * nf.x_rot[1]).sqrt();
            // Singular axis is the last rotated coordinate; map it back with o_aᵀ.
            (off_axis <= tol).then(|| nf.o_a.0[2])
        }
        _ => None,
    };
    match direction {
        Some(n) => {
            let residual = dephasing_residual(&p.compose(), n);
            ZeroDiscord {
                zero_discord: residual <= 10.0 * tol,
                rank,
                direction: Some(n),
                dephasing_residual: Some(residual),
            }
        }
        None => ZeroDiscord { zero_discord: false, rank, direction: None, dephasing_residual: None },
    }
}

/// Product iff `‖ρ − ρ_A⊗ρ_B‖_F ≤ tol`.
pub fn is_product(rho: &TwoQubitState, tol: f64) -> (bool, f64) {
    let prod = kron(&rho.reduced_a(), &rho.reduced_b());
    let r = (rho.matrix() - &prod).frob_norm();
    (r <= tol, r)
}

/// Partial-transpose test, exact for two qubits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ppt {
    pub separable: bool,
    /// Sum of the magnitudes of the negative eigenvalues of ρ^{T_B}.
    pub negativity: f64,
    pub min_pt_eigenvalue: f64,
}

pub fn separable_ppt(rho: &TwoQubitState, tol: f64) -> Ppt {
    let pt = partial_transpose_b(rho.matrix()).expect("4x4 by construction");
    let eig = herm_eig(&pt, 1e-8).expect("partial transpose of a Hermitian matrix is Hermitian");
    let negativity = eig.values.iter().filter(|&&w| w < 0.0).map(|w| -w).sum();
    Ppt { separable: eig.min() >= -tol, negativity, min_pt_eigenvalue: eig.min() }
}

/// Purity and, for pure states, Schmidt data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureSchmidt {
    pub is_pure: bool,
    pub purity: f64,
    /// Descending Schmidt coefficients, present only for pure states.
    pub schmidt: Option<[f64; 2]>,
    /// Pure states are lazy exactly when product or maximally entangled.
    pub pure_lazy: Option<bool>,
}

pub fn pure_schmidt(rho: &TwoQubitState, tol: f64) -> PureSchmidt {
    let purity = rho.purity();
    let is_pure = purity >= 1.0 - tol;
    if !is_pure {
        return PureSchmidt { is_pure, purity, schmidt: None, pure_lazy: None };
    }
    let w = herm_eig(&rho.reduced_a(), 1e-8).expect("marginal is Hermitian").values;
    let (hi, lo) = (w[1], w[0]);
    let schmidt = [hi.max(0.0).sqrt(), lo.max(0.0).sqrt()];
    // Compare squared coefficients, which carry full precision near zero.
    let product = (hi - 1.0).abs() <= tol && lo.abs() <= tol;
    let maximal = (hi - 0.5).abs() <= tol && (lo - 0.5).abs() <= tol;
    PureSchmidt { is_pure, purity, schmidt: Some(schmidt), pure_lazy: Some(product || maximal) }
}

/// Numeric evidence behind a [`Verdicts`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witnesses {
    pub commutator_norm: f64,
    pub parallel_residual: f64,
    pub negativity: f64,
    pub min_eigenvalue: f64,
    pub min_pt_eigenvalue: f64,
    pub product_residual: f64,
    pub dephasing_residual: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Verdicts {
    pub pure: bool,
    pub product: bool,
    pub zero_discord_a: bool,
    pub lazy_a: bool,
    pub separable: bool,
    pub schmidt: Option<[f64; 2]>,
    pub discord_direction: Option<[f64; 3]>,
    pub witnesses: Witnesses,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub physical: bool,
    pub physicality: Physicality,
    /// Absent for unphysical input.
    pub verdicts: Option<Verdicts>,
}

impl Classification {
    pub fn verdicts(&self) -> Option<&Verdicts> {
        self.verdicts.as_ref()
    }

    /// The boolean verdicts as a tuple, convenient for comparisons.
    pub fn signature(&self) -> Option<[bool; 5]> {
        self.verdicts.map(|v| [v.pure, v.product, v.zero_discord_a, v.lazy_a, v.separable])
    }
}

/// Run every predicate on `rho`.
///
/// Unphysical input yields `physical = false` with no verdicts. The two
/// laziness routes must agree unless both witnesses are within a small band
/// around `tol`; inside the band the commutator verdict is used.
pub fn classify(rho: &TwoQubitState, tol: f64) -> Result<Classification, ClassifyError> {
    let physicality = fano::validate(rho, tol);
    if !physicality.physical {
        return Ok(Classification { physical: false, physicality, verdicts: None });
    }
    let params = decompose(rho);
    let comm = commutator_norm(rho);
    let (lazy_par, par) = lazy_by_parallelism(&params, tol);
    let lazy_comm = comm <= tol;
    if lazy_comm != lazy_par && comm.max(par) > ROUTE_BAND * tol {
        return Err(ClassifyError::RouteDisagreement { commutator_norm: comm, parallel_residual: par });
    }
    let zd = zero_discord_a(&params, tol);
    let (product, product_residual) = is_product(rho, tol);
    let ppt = separable_ppt(rho, tol);
    let ps = pure_schmidt(rho, tol);
    Ok(Classification {
        physical: true,
        physicality,
        verdicts: Some(Verdicts {
            pure: ps.is_pure,
            product,
            zero_discord_a: zd.zero_discord,
            lazy_a: lazy_comm,
            separable: ppt.separable,
            schmidt: ps.schmidt,
            discord_direction: zd.direction.filter(|_| zd.zero_discord),
            witnesses: Witnesses {
                commutator_norm: comm,
                parallel_residual: par,
                negativity: ppt.negativity,
                min_eigenvalue: physicality.min_eigenvalue,
                min_pt_eigenvalue: ppt.min_pt_eigenvalue,
                product_residual,
                dephasing_residual: zd.dephasing_residual,
            },
        }),
    })
}

/// Pure state `cos θ|00⟩ + sin θ|11⟩`.
pub fn schmidt_state(theta: f64) -> TwoQubitState {
    let z = C64::new(0.0, 0.0);
    TwoQubitState::pure([C64::new(theta.cos(), 0.0), z, z, C64::new(theta.sin(), 0.0)])
}
