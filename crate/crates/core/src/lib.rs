//! Classification of two-qubit states into the laziness / discord /
//! entanglement hierarchy.
//!
//! * [`matcore`]: small dense complex kernels (Kronecker products, partial
//!   traces and transposes, Jacobi eigensolver, 3×3 SVD, matrix exponential).
//! * [`fano`]: Fano (Pauli-basis) parameters and the local-unitary normal form.
//! * [`classify`]: laziness, zero discord, product, PPT separability, purity.
//! * [`belldiag`]: Bell-diagonal geometry, Monte Carlo census, region slices.
//! * [`families`]: the lazy-but-discordant and separable-but-not-lazy families.
//! * [`dynamics`]: entropy rate of A under random couplings.
//! * [`sampling`]: Ginibre states, Haar local unitaries and other samplers.
//!
//! ```
//! use lazyq::classify::{classify, DEFAULT_TOL};
//! use lazyq::fano::TwoQubitState;
//!
//! let c = classify(&TwoQubitState::bell_phi_plus(), DEFAULT_TOL).unwrap();
//! let v = c.verdicts.unwrap();
//! assert!(v.lazy_a && !v.zero_discord_a && !v.separable);
//! ```

pub mod belldiag;
pub mod classify;
pub mod dynamics;
pub mod families;
pub mod fano;
pub mod matcore;
pub mod sampling;

pub use classify::{classify, Classification, DEFAULT_TOL};
pub use fano::{decompose, normal_form, FanoParams, NormalForm, TwoQubitState};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

// The guide under book/ is compiled as doctests so its snippets cannot rot.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/fano.md")]
    mod fano {}
    #[doc = include_str!("../../../book/src/laziness.md")]
    mod laziness {}
    #[doc = include_str!("../../../book/src/discord.md")]
    mod discord {}
    #[doc = include_str!("../../../book/src/bell_diagonal.md")]
    mod bell_diagonal {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/dynamics.md")]
    mod dynamics {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
