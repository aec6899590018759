//! The weak higher-order group inverse.
//!
//! Split `a = x + y` with `x*·y = 0`, `y·x = 0`, `y` nilpotent (the
//! core/nilpotent split); the weak higher-order group inverse of `a` is the
//! higher-order group inverse of `x`. With `w` the weak Moore-Penrose
//! inverse of `a`, it also equals `(w·a³·w)†`.

use crate::classical::{core_ep_decompose, weak_mp_inverse};
use crate::error::{dim_err, Error, Result};
use crate::hgroup::{hgroup_inverse, ConstrainedSolveResult};
use crate::matrix::Matrix;
use crate::pinv::mp_inverse;
use crate::verify::{check_axioms, InverseKind};

/// `w·a³·w` for the weak Moore-Penrose inverse `w` of `a`.
fn weak_compressed_cube(a: &Matrix) -> Result<Matrix> {
    let w = weak_mp_inverse(a)?;
    Ok(&(&w * &a.pow(3)?) * &w)
}

/// Higher-order group inverse of the core part, cross-checked against
/// `(w·a³·w)†` and `(core†·core³·core†)†`.
pub fn weak_hgroup_inverse(a: &Matrix) -> Result<Matrix> {
    let d = core_ep_decompose(a)?;
    let via_core = hgroup_inverse(&d.core)?;
    let via_weak_mp = mp_inverse(&weak_compressed_cube(a)?)?;
    let core_dag = mp_inverse(&d.core)?;
    let via_formula = mp_inverse(&(&(&core_dag * &d.core.pow(3)?) * &core_dag))?;

    if via_core != via_weak_mp || via_core != via_formula {
        return Err(Error::Inconsistent(
            "weak higher-order group inverse: computation paths disagree".into(),
        ));
    }
    Ok(via_core)
}

/// `(w·a³·w)†`, accepted only if it satisfies the element-wise system
/// `xax = x`, `(a²xa²)·w = a³·w`, the two Hermitian conditions and
/// `x ∈ (a·w)R ∩ R(w·a)`.
pub fn weak_hgroup_via_system(a: &Matrix) -> Result<Matrix> {
    let x = mp_inverse(&weak_compressed_cube(a)?)?;
    let report = check_axioms(&InverseKind::WeakHGroup, a, &x)?;
    if let Some(failed) = report.failed().next() {
        return Err(Error::Inconsistent(format!(
            "weak higher-order group inverse fails {}",
            failed.name
        )));
    }
    Ok(x)
}

/// Solves `xax = x`, `xa = m†·a`, `ax = a·m†` with `m = w·a³·w`.
///
/// Any solution satisfies `x = (xa)x = m†(ax) = m†·a·m†`, so `m†` is the
/// unique solution exactly when `m†·a·m† = m†`; that certificate is checked.
pub fn solve_weak_system(a: &Matrix) -> Result<ConstrainedSolveResult> {
    let m_dag = mp_inverse(&weak_compressed_cube(a)?)?;
    if &(&m_dag * a) * &m_dag != m_dag {
        return Err(Error::Inconsistent("m†·a·m† ≠ m†".into()));
    }
    Ok(ConstrainedSolveResult {
        solution: m_dag,
        unique: true,
        homogeneous_dimension: 0,
    })
}

/// `(a+b)` inverse as the sum of the parts' inverses, for `a`, `b` with
/// `ab = ba = a*b = b*a = 0`.
pub fn orthogonal_sum(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if !a.is_square() || a.shape() != b.shape() {
        return Err(dim_err("orthogonal_sum needs square matrices of one shape"));
    }
    let products = [
        ("ab=0", a * b),
        ("ba=0", b * a),
        ("a*b=0", &a.adjoint() * b),
        ("b*a=0", &b.adjoint() * a),
    ];
    if let Some((name, _)) = products.iter().find(|(_, p)| !p.is_zero()) {
        return Err(Error::PreconditionViolated(format!("{name} fails")));
    }
    let sum = &weak_hgroup_inverse(a)? + &weak_hgroup_inverse(b)?;
    if sum != weak_hgroup_inverse(&(a + b))? {
        return Err(Error::Internal("inverse of the orthogonal sum is not the sum of inverses".into()));
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{a, n, x, y, z};

    #[test]
    fn weak_hgroup_examples() {
        assert_eq!(weak_hgroup_inverse(&a()).unwrap(), z());
        assert_eq!(weak_hgroup_inverse(&x()).unwrap(), z());
        assert!(weak_hgroup_inverse(&n()).unwrap().is_zero());
        let inv = Matrix::parse_rows(&[&["1", "i"], &["2", "1/2"]]).unwrap();
        assert_eq!(weak_hgroup_inverse(&inv).unwrap(), inv.try_inverse().unwrap());
    }

    #[test]
    fn system_route() {
        assert_eq!(weak_hgroup_via_system(&a()).unwrap(), z());
        assert_eq!(weak_hgroup_via_system(&x()).unwrap(), z());
        assert!(weak_hgroup_via_system(&n()).unwrap().is_zero());
    }

    #[test]
    fn weak_system_solver() {
        for (m, expected) in [(a(), z()), (x(), z()), (Matrix::identity(3), Matrix::identity(3))] {
            let res = solve_weak_system(&m).unwrap();
            assert!(res.unique);
            assert_eq!(res.solution, expected);
        }
    }

    #[test]
    fn orthogonal_sum_examples() {
        assert_eq!(orthogonal_sum(&x(), &y()).unwrap(), z());
        let zero = Matrix::zeros(3, 3);
        assert_eq!(orthogonal_sum(&a(), &zero).unwrap(), weak_hgroup_inverse(&a()).unwrap());
        let id = Matrix::identity(2);
        match orthogonal_sum(&id, &id) {
            Err(Error::PreconditionViolated(msg)) => assert!(msg.contains("ab=0"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejected_when_weak_mp_candidate_fails() {
        // nil·core* ≠ 0 here, so a·(core)† is not Hermitian
        let m = Matrix::parse_rows(&[&["0", "1/2", "-2"], &["0", "0", "-2"], &["0", "0", "2"]]).unwrap();
        let d = core_ep_decompose(&m).unwrap();
        assert!(!(&d.nil * &d.core.adjoint()).is_zero());
        for res in [weak_hgroup_inverse(&m), weak_hgroup_via_system(&m)] {
            match res {
                Err(Error::Inconsistent(msg)) => assert!(msg.contains("(aw)*=aw"), "{msg}"),
                other => panic!("unexpected {other:?}"),
            }
        }
        assert!(matches!(solve_weak_system(&m), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn orthogonal_sum_rejects_adjoint_overlap() {
        // N·N = 0 both ways, but N*·N = e22
        match orthogonal_sum(&n(), &n()) {
            Err(Error::PreconditionViolated(msg)) => assert_eq!(msg, "a*b=0 fails"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
