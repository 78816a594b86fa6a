//! Two witness families.
//!
//! * Lazy but discordant: ¼(I⊗I + y₁ I⊗σ₁ + λ₂ σ₂⊗σ₂ + λ₃ σ₃⊗σ₃), with
//!   0 < λ₂ < λ₃ and y₁² + (λ₂ + λ₃)² ≤ 1. Here x = 0, so the state is lazy,
//!   while the correlation matrix has two nonzero singular values.
//! * Separable mixtures p|ψ₁⟩⟨ψ₁|⊗ρ₁ + (1−p)|ψ₂⟩⟨ψ₂|⊗ρ₂ with Bloch vectors
//!   ψ₁ = ẑ, ψ₂ = (sin α, 0, cos α), ρ₁ = a ẑ, ρ₂ = b (sin β, 0, cos β).
//!   These are product states when α = 0 or ρ₁ = ρ₂, zero-discord when
//!   α = π, and otherwise not lazy.

use std::f64::consts::PI;

use thiserror::Error;

use crate::fano::{FanoParams, TwoQubitState};
use crate::matcore::{kron, RealMatrix3};

/// Tolerance for the closed-form case analysis of the separable family.
pub const CASE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error("parameters must satisfy 0 < lambda2 < lambda3 (got lambda2 = {lambda2}, lambda3 = {lambda3})")]
    Ordering { lambda2: f64, lambda3: f64 },
    #[error("positivity bound y1^2 + (lambda3 + lambda2)^2 <= 1 violated ({value} > 1)")]
    Positivity { value: f64 },
    #[error("{name} = {value} outside {range}")]
    OutOfRange { name: &'static str, value: f64, range: &'static str },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LazyDiscordantParams {
    y1: f64,
    lambda2: f64,
    lambda3: f64,
}

impl LazyDiscordantParams {
    pub fn new(y1: f64, lambda2: f64, lambda3: f64) -> Result<Self, FamilyError> {
        if !(0.0 < lambda2 && lambda2 < lambda3) {
            return Err(FamilyError::Ordering { lambda2, lambda3 });
        }
        let value = y1 * y1 + (lambda3 + lambda2).powi(2);
        if !(value <= 1.0) {
            return Err(FamilyError::Positivity { value });
        }
        Ok(Self { y1, lambda2, lambda3 })
    }

    /// Skip the validation, e.g. to evaluate the spectrum formula at a boundary.
    pub fn new_unchecked(y1: f64, lambda2: f64, lambda3: f64) -> Self {
        Self { y1, lambda2, lambda3 }
    }

    pub fn y1(&self) -> f64 {
        self.y1
    }

    pub fn lambda2(&self) -> f64 {
        self.lambda2
    }

    pub fn lambda3(&self) -> f64 {
        self.lambda3
    }

    pub fn fano(&self) -> FanoParams {
        FanoParams { x: [0.0; 3], y: [self.y1, 0.0, 0.0], t: RealMatrix3::diag([0.0, self.lambda2, self.lambda3]) }
    }

    pub fn compose(&self) -> TwoQubitState {
        self.fano().compose()
    }

    /// ¼(1 ± √(y₁² + (λ₃ ± λ₂)²)) in the order (+,+), (−,+), (+,−), (−,−).
    pub fn spectrum(&self) -> [f64; 4] {
        let wide = (self.y1 * self.y1 + (self.lambda3 + self.lambda2).powi(2)).sqrt();
        let narrow = (self.y1 * self.y1 + (self.lambda3 - self.lambda2).powi(2)).sqrt();
        [0.25 * (1.0 + wide), 0.25 * (1.0 - wide), 0.25 * (1.0 + narrow), 0.25 * (1.0 - narrow)]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparableFamilyParams {
    pub p: f64,
    pub alpha: f64,
    pub beta: f64,
    pub a: f64,
    pub b: f64,
}

fn check_range(name: &'static str, value: f64, lo: f64, hi: f64, open: bool, range: &'static str) -> Result<(), FamilyError> {
    let ok = if open { lo < value && value < hi } else { lo <= value && value <= hi };
    if ok {
        Ok(())
    } else {
        Err(FamilyError::OutOfRange { name, value, range })
    }
}

/// Label assigned by the closed-form case analysis of the separable family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeparableLabel {
    Product,
    ZeroDiscord,
    NotLazy,
}

impl SeparableLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            SeparableLabel::Product => "product",
            SeparableLabel::ZeroDiscord => "zero_discord",
            SeparableLabel::NotLazy => "not_lazy",
        }
    }
}

impl SeparableFamilyParams {
    pub fn new(p: f64, alpha: f64, beta: f64, a: f64, b: f64) -> Result<Self, FamilyError> {
        check_range("p", p, 0.0, 1.0, true, "(0, 1)")?;
        check_range("alpha", alpha, 0.0, PI, false, "[0, pi]")?;
        check_range("beta", beta, 0.0, PI, false, "[0, pi]")?;
        check_range("a", a, 0.0, 1.0, false, "[0, 1]")?;
        check_range("b", b, 0.0, 1.0, false, "[0, 1]")?;
        Ok(Self { p, alpha, beta, a, b })
    }

    fn bloch(&self) -> ([f64; 3], [f64; 3], [f64; 3], [f64; 3]) {
        let (sa, ca) = self.alpha.sin_cos();
        let (sb, cb) = self.beta.sin_cos();
        ([0.0, 0.0, 1.0], [sa, 0.0, ca], [0.0, 0.0, self.a], [self.b * sb, 0.0, self.b * cb])
    }

    /// The mixture built from its four single-qubit pieces.
    pub fn compose(&self) -> TwoQubitState {
        let (psi1, psi2, r1, r2) = self.bloch();
        let q = |r: [f64; 3]| FanoParams { x: r, ..Default::default() }.compose().reduced_a();
        let first = kron(&q(psi1), &q(r1)).scale_real(self.p);
        let second = kron(&q(psi2), &q(r2)).scale_real(1.0 - self.p);
        TwoQubitState::new(&first + &second).expect("convex mixture of states")
    }

    /// Closed-form Fano parameters.
    pub fn fano(&self) -> FanoParams {
        let Self { p, alpha, beta, a, b } = *self;
        let q = 1.0 - p;
        let (sa, ca) = alpha.sin_cos();
        let (sb, cb) = beta.sin_cos();
        let x = [q * sa, 0.0, p + q * ca];
        let y = [q * b * sb, 0.0, p * a + q * b * cb];
        let col1 = [b * q * sa * sb, 0.0, b * q * ca * sb];
        let col3 = [b * q * sa * cb, 0.0, a * p + b * q * ca * cb];
        FanoParams { x, y, t: RealMatrix3::from_columns([col1, [0.0; 3], col3]) }
    }

    /// Distances to the case boundaries: α = 0, α = π, a = b = 0, b·sin β = 0, a = b·cos β.
    pub fn case_distances(&self) -> [f64; 5] {
        let (sb, cb) = self.beta.sin_cos();
        [self.alpha, PI - self.alpha, self.a.max(self.b), (self.b * sb).abs(), (self.a - self.b * cb).abs()]
    }

    /// Closed-form label, testing each case condition to within `tol`.
    pub fn label(&self, tol: f64) -> SeparableLabel {
        let [alpha0, alpha_pi, ab, b_sin, a_cos] = self.case_distances();
        let same_b_states = b_sin <= tol && a_cos <= tol;
        if alpha0 <= tol || ab <= tol || same_b_states {
            SeparableLabel::Product
        } else if alpha_pi <= tol {
            SeparableLabel::ZeroDiscord
        } else {
            SeparableLabel::NotLazy
        }
    }
}

/// Case-analysis label of a separable-family state.
pub fn separable_classify(s: &SeparableFamilyParams, tol: f64) -> SeparableLabel {
    s.label(tol)
}
