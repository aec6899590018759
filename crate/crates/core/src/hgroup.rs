//! The higher-order group inverse and its characterizations.
//!
//! For a square `a` the higher-order group inverse is the unique
//! `x ∈ aR ∩ Ra` with
//!
//! ```text
//! xax = x,  a²xa² = a³,  (a²xa*)* = a²xa*,  (a*xa²)* = a*xa²
//! ```
//!
//! and it equals `(a†·a³·a†)†`. Since every matrix over ℚ(i) has a
//! Moore-Penrose inverse, it always exists here. The same element is
//! recovered as the unique solution of two projector-constrained linear
//! systems, as a (b,c)-inverse, and as a {2}-inverse with prescribed image
//! and kernel; each of those routes is implemented independently below.

use crate::error::{dim_err, Error, Result};
use crate::matrix::{Matrix, SubspaceDescriptor, SubspaceKind};
use crate::pinv::{coimage_projector, image_projector, mp_inverse};
use crate::verify::{check_axioms, InverseKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BcPair {
    pub b: Matrix,
    pub c: Matrix,
}

/// A solution of a constrained system together with the dimension of the
/// homogeneous solution space (per column); `unique ⇔ homogeneous_dimension == 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstrainedSolveResult {
    pub solution: Matrix,
    pub unique: bool,
    pub homogeneous_dimension: usize,
}

impl ConstrainedSolveResult {
    fn new(solution: Matrix, homogeneous_dimension: usize) -> Self {
        ConstrainedSolveResult {
            solution,
            unique: homogeneous_dimension == 0,
            homogeneous_dimension,
        }
    }
}

fn require_square(a: &Matrix, what: &str) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(dim_err(format!(
            "{what} needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )))
    }
}

/// `a†·a³·a†`, whose Moore-Penrose inverse is the higher-order group inverse.
pub fn compressed_cube(a: &Matrix) -> Result<Matrix> {
    require_square(a, "compressed_cube")?;
    let ad = mp_inverse(a)?;
    Ok(&(&ad * &a.pow(3)?) * &ad)
}

/// `(a†·a³·a†)†`, verified against the full defining system (including the
/// memberships `x ∈ aR ∩ Ra`) before it is returned.
pub fn hgroup_inverse(a: &Matrix) -> Result<Matrix> {
    let x = mp_inverse(&compressed_cube(a)?)?;
    let report = check_axioms(&InverseKind::HGroup, a, &x)?;
    if let Some(failed) = report.failed().next() {
        return Err(Error::Internal(format!(
            "higher-order group inverse fails {}",
            failed.name
        )));
    }
    Ok(x)
}

/// Solves `a·x = a·(q_a·a·p_a)†` subject to `im(x) ⊆ im(p_a·a*·q_a)`.
///
/// Unknowns are parametrized as `x = (p_a·a*·q_a)·u`; the homogeneous
/// dimension is `dim(ker(a) ∩ im(p_a·a*·q_a))`.
pub fn solve_projected_system(a: &Matrix) -> Result<ConstrainedSolveResult> {
    require_square(a, "solve_projected_system")?;
    let p = image_projector(a)?;
    let q = coimage_projector(a)?;
    let range = &(&p * &a.adjoint()) * &q;
    let rhs = a * &mp_inverse(&(&(&q * a) * &p))?;

    let system = a * &range;
    let u = system.solve_right(&rhs).map_err(|e| match e {
        Error::NoSolution => Error::Inconsistent("a·x = a·(q_a a p_a)† has no solution in the constrained image".into()),
        other => other,
    })?;
    let x = &range * &u;
    debug_assert_eq!(a * &x, rhs);
    Ok(ConstrainedSolveResult::new(x, range.rank() - system.rank()))
}

/// Solves `p_a·x = (q_a·a·p_a)†` subject to `im(x) ⊆ im(a)`.
///
/// Unknowns are parametrized as `x = a·v`; the homogeneous dimension is
/// `dim(ker(p_a) ∩ im(a))`.
pub fn solve_image_system(a: &Matrix) -> Result<ConstrainedSolveResult> {
    require_square(a, "solve_image_system")?;
    let p = image_projector(a)?;
    let q = coimage_projector(a)?;
    let rhs = mp_inverse(&(&(&q * a) * &p))?;

    let system = &p * a;
    let v = system.solve_right(&rhs).map_err(|e| match e {
        Error::NoSolution => Error::Inconsistent("p_a·x = (q_a a p_a)† has no solution in im(a)".into()),
        other => other,
    })?;
    let x = a * &v;
    Ok(ConstrainedSolveResult::new(x, a.rank() - system.rank()))
}

/// `b = p_a·(a*)²`, `c = (a*)²·q_a`.
pub fn build_bc_pair(a: &Matrix) -> Result<BcPair> {
    require_square(a, "build_bc_pair")?;
    let adj_sq = a.adjoint().pow(2)?;
    Ok(BcPair {
        b: &image_projector(a)? * &adj_sq,
        c: &adj_sq * &coimage_projector(a)?,
    })
}

/// The (b,c)-inverse: `x` with `x·a·b = b`, `c·a·x = c`, `x ∈ bRx ∩ xRc`.
///
/// The candidate `b·(c·a·b)†·c` is returned only if it passes every
/// defining condition.
pub fn bc_inverse(a: &Matrix, pair: &BcPair) -> Result<Matrix> {
    require_square(a, "bc_inverse")?;
    let n = a.rows();
    if pair.b.shape() != (n, n) || pair.c.shape() != (n, n) {
        return Err(dim_err("b and c must match the shape of a"));
    }
    let cab = &(&pair.c * a) * &pair.b;
    let x = &(&pair.b * &mp_inverse(&cab)?) * &pair.c;

    let report = check_axioms(&InverseKind::Bc(pair.clone()), a, &x)?;
    if !report.overall {
        let failed: Vec<&str> = report.failed().map(|c| c.name.as_str()).collect();
        return Err(Error::NotBcInvertible(format!("candidate fails {}", failed.join(", "))));
    }
    Ok(x)
}

/// The {2}-inverse `x = x·a·x` with `im(x) = image` and `ker(x) = kernel`.
pub fn two_inverse_prescribed(a: &Matrix, image: &SubspaceDescriptor, kernel: &SubspaceDescriptor) -> Result<Matrix> {
    require_square(a, "two_inverse_prescribed")?;
    if image.kind != SubspaceKind::Image || kernel.kind != SubspaceKind::Kernel {
        return Err(Error::PreconditionViolated(
            "T must be an image descriptor and S a kernel descriptor".into(),
        ));
    }
    let pair = BcPair {
        b: image.generator.clone(),
        c: kernel.generator.clone(),
    };
    let x = bc_inverse(a, &pair).map_err(|e| match e {
        Error::NotBcInvertible(why) => Error::NotTwoInvertible(why),
        other => other,
    })?;
    let kind = InverseKind::TwoPrescribed {
        image: image.clone(),
        kernel: kernel.clone(),
    };
    let report = check_axioms(&kind, a, &x)?;
    if !report.overall {
        let failed: Vec<&str> = report.failed().map(|c| c.name.as_str()).collect();
        return Err(Error::NotTwoInvertible(format!("candidate fails {}", failed.join(", "))));
    }
    Ok(x)
}
