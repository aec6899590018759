//! Exact generalized inverses over the Gaussian rationals ℚ(i).
//!
//! Matrices over ℚ(i) with the conjugate transpose form a *-ring in which
//! every element has a Moore-Penrose inverse, so every identity below can be
//! checked bit-exactly. The crate provides:
//!
//! - [`scalar`]: the exact field ℚ(i) with conjugation and a canonical text form;
//! - [`matrix`]: dense matrices, RREF, exact solving, kernels, full-rank
//!   factorization, subspace comparison and ideal membership;
//! - [`pinv`]: the Moore-Penrose inverse and the projectors `p_a = a·a†`, `q_a = a†·a`;
//! - [`classical`]: group and Drazin inverses, the core/nilpotent split and
//!   the weak Moore-Penrose inverse;
//! - [`hgroup`]: the higher-order group inverse `(a†·a³·a†)†` and its
//!   characterizations;
//! - [`weak_hgroup`]: the weak higher-order group inverse;
//! - [`verify`]: an axiom checker producing exact residuals.
//!
//! Every inverse is verified against its defining equations before it is
//! returned.

pub mod classical;
pub mod error;
pub mod fixtures;
pub mod hgroup;
pub mod matrix;
pub mod pinv;
pub mod scalar;
pub mod verify;
pub mod weak_hgroup;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::GaussianRational;
