//! Principal one-sided ideal membership with reconstructing witnesses.

use super::Matrix;
use crate::error::{dim_err, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `x = a·r`
    XInAR,
    /// `x = s·a`
    XInRA,
    /// `x = b·r·x`
    XInBRX,
    /// `x = x·r·c`
    XInXRC,
}

impl Relation {
    pub fn name(self) -> &'static str {
        match self {
            Relation::XInAR => "x_in_aR",
            Relation::XInRA => "x_in_Ra",
            Relation::XInBRX => "x_in_bRx",
            Relation::XInXRC => "x_in_xRc",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipWitness {
    pub relation: Relation,
    pub holds: bool,
    /// Present exactly when `holds`.
    pub witness: Option<Matrix>,
}

impl MembershipWitness {
    /// Re-derives `x` from the witness; `None` when membership failed.
    pub fn reconstruct(&self, x: &Matrix, generator: &Matrix) -> Option<Matrix> {
        let w = self.witness.as_ref()?;
        Some(match self.relation {
            Relation::XInAR => generator * w,
            Relation::XInRA => w * generator,
            Relation::XInBRX => &(generator * w) * x,
            Relation::XInXRC => &(x * w) * generator,
        })
    }
}

/// Decides whether `x` lies in the ideal named by `relation`, where
/// `generator` plays the role of `a` (for `aR`, `Ra`), `b` (for `bRx`) or
/// `c` (for `xRc`).
///
/// The two-sided forms are linear in the unknown `r` and are decided by the
/// vectorized system `vec(b·r·x) = (xᵀ ⊗ b)·vec(r)`, solved through
/// [`Matrix::solve_sandwich`].
pub fn ideal_membership(relation: Relation, x: &Matrix, generator: &Matrix) -> Result<MembershipWitness> {
    if !x.is_square() || !generator.is_square() || x.rows() != generator.rows() {
        return Err(dim_err(format!(
            "membership needs square operands of one size, got {}x{} and {}x{}",
            x.rows(),
            x.cols(),
            generator.rows(),
            generator.cols()
        )));
    }
    let solved = match relation {
        Relation::XInAR => generator.solve_right(x),
        Relation::XInRA => generator
            .adjoint()
            .solve_right(&x.adjoint())
            .map(|u| u.adjoint()),
        Relation::XInBRX => Matrix::solve_sandwich(generator, x, x),
        Relation::XInXRC => Matrix::solve_sandwich(x, generator, x),
    };
    match solved {
        Ok(w) => Ok(MembershipWitness {
            relation,
            holds: true,
            witness: Some(w),
        }),
        Err(Error::NoSolution) => Ok(MembershipWitness {
            relation,
            holds: false,
            witness: None,
        }),
        Err(e) => Err(e),
    }
}
