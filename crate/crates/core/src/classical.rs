//! Group and Drazin inverses, the core/nilpotent split, and the weak
//! Moore-Penrose inverse built from it.

use crate::error::{dim_err, Error, Result};
use crate::matrix::Matrix;
use crate::pinv::mp_inverse;

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

fn pow(a: &Matrix, k: usize) -> Matrix {
    a.pow(k as u32).expect("square")
}

/// `a = core + nil` with `core = P·a`, `nil = (I−P)·a` and `P` the
/// orthogonal projector onto `im(a^k)`, `k` the index of `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreEpDecomposition {
    pub core: Matrix,
    pub nil: Matrix,
    pub index: usize,
    pub projector: Matrix,
}

impl CoreEpDecomposition {
    /// Named invariant checks against the decomposed matrix `a`.
    pub fn invariant_checks(&self, a: &Matrix) -> Vec<(&'static str, bool)> {
        let core_rank = self.core.rank();
        vec![
            ("core+nil=a", &self.core + &self.nil == *a),
            ("core*nil=0", (&self.core.adjoint() * &self.nil).is_zero()),
            ("nil core=0", (&self.nil * &self.core).is_zero()),
            ("nil nilpotent", pow(&self.nil, self.index.max(1)).is_zero()),
            ("rank(core^2)=rank(core)", (&self.core * &self.core).rank() == core_rank),
            (
                "P hermitian idempotent",
                self.projector.is_hermitian() && self.projector.is_idempotent(),
            ),
            ("core=Pa", self.core == &self.projector * a),
        ]
    }
}

/// Group inverse `f·(g·f)⁻²·g`, defined iff `rank(a) = rank(a²)`.
pub fn group_inverse(a: &Matrix) -> Result<Matrix> {
    require_square(a, "group_inverse")?;
    let frf = a.full_rank_factorize();
    let gf_inv = (&frf.g * &frf.f).try_inverse().ok_or(Error::NotGroupInvertible)?;
    let x = &(&(&frf.f * &gf_inv) * &gf_inv) * &frf.g;

    let ax = a * &x;
    if &(&x * a) * &x != x || &ax * a != *a || ax != &x * a {
        return Err(Error::Internal("group inverse failed its axioms".into()));
    }
    Ok(x)
}

/// Drazin inverse `a^k·(a^(2k+1))†·a^k`, `k` the index of `a`.
pub fn drazin_inverse(a: &Matrix) -> Result<Matrix> {
    require_square(a, "drazin_inverse")?;
    let k = a.drazin_index()?;
    let ak = pow(a, k);
    let x = &(&ak * &mp_inverse(&pow(a, 2 * k + 1))?) * &ak;

    let commutes = &x * a == a * &x;
    let absorbs = &pow(a, k + 1) * &x == ak;
    let reflexive = &(&x * a) * &x == x;
    if !(commutes && absorbs && reflexive) {
        return Err(Error::Internal("Drazin inverse failed its axioms".into()));
    }
    Ok(x)
}

pub fn core_ep_decompose(a: &Matrix) -> Result<CoreEpDecomposition> {
    require_square(a, "core_ep_decompose")?;
    let index = a.drazin_index()?;
    let ak = pow(a, index);
    let projector = &ak * &mp_inverse(&ak)?;
    let core = &projector * a;
    let nil = a - &core;
    let d = CoreEpDecomposition {
        core,
        nil,
        index,
        projector,
    };
    if let Some((name, _)) = d.invariant_checks(a).into_iter().find(|(_, ok)| !ok) {
        return Err(Error::Internal(format!("core/nilpotent split violates {name}")));
    }
    Ok(d)
}

/// Weak Moore-Penrose inverse, taken as the Moore-Penrose inverse of the
/// core part.
///
/// The candidate `w` is returned only if it satisfies `w = w·a·w`,
/// `(a·w)* = a·w`, `(w·a)* = w·a` and `a − a·w·a` nilpotent. Those four
/// conditions alone do not pin `w` down: `a†` may satisfy them as well.
///
/// `(a·w)* = a·w` holds exactly when `nil·core* = 0`; when the nilpotent
/// part's row space meets the core's, the candidate is rejected with
/// [`Error::Inconsistent`] naming the failed condition.
pub fn weak_mp_inverse(a: &Matrix) -> Result<Matrix> {
    let d = core_ep_decompose(a)?;
    let w = mp_inverse(&d.core)?;

    let aw = a * &w;
    let wa = &w * a;
    let checks = [
        ("waw=w", &wa * &w == w),
        ("(aw)*=aw", aw.is_hermitian()),
        ("(wa)*=wa", wa.is_hermitian()),
        ("a-awa nilpotent", (a - &(&aw * a)).vanishing_power().is_some()),
    ];
    if let Some((name, _)) = checks.iter().find(|(_, ok)| !ok) {
        return Err(Error::Inconsistent(format!("(core part)† fails {name}")));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{a, n, x, y, z};
    use crate::scalar::GaussianRational;

    #[test]
    fn group_examples() {
        assert_eq!(group_inverse(&x()).unwrap(), z());
        assert_eq!(group_inverse(&n()), Err(Error::NotGroupInvertible));
        assert_eq!(group_inverse(&Matrix::identity(3)).unwrap(), Matrix::identity(3));
        assert_eq!(group_inverse(&a()), Err(Error::NotGroupInvertible));
        assert!(group_inverse(&Matrix::zeros(3, 3)).unwrap().is_zero());
    }

    #[test]
    fn group_inverse_of_non_ep_matrix() {
        // index 1 but not EP: a^# differs from a†
        let m = Matrix::parse_rows(&[&["1", "1"], &["0", "0"]]).unwrap();
        let g = group_inverse(&m).unwrap();
        assert_eq!(g, m);
        assert_ne!(g, mp_inverse(&m).unwrap());
    }

    #[test]
    fn drazin_examples() {
        assert!(drazin_inverse(&n()).unwrap().is_zero());
        assert_eq!(drazin_inverse(&a()).unwrap(), z());
        assert_eq!(drazin_inverse(&Matrix::identity(3)).unwrap(), Matrix::identity(3));
        let inv = Matrix::parse_rows(&[&["2", "i"], &["0", "1/2"]]).unwrap();
        assert_eq!(drazin_inverse(&inv).unwrap(), inv.try_inverse().unwrap());
        assert_eq!(drazin_inverse(&x()).unwrap(), group_inverse(&x()).unwrap());
    }

    #[test]
    fn decomposition_examples() {
        let d = core_ep_decompose(&a()).unwrap();
        assert_eq!(d.core, x());
        assert_eq!(d.nil, y());
        assert_eq!(d.index, 2);
        assert_eq!(d.projector, x().scale(&GaussianRational::ratio(1, 3)));

        let d = core_ep_decompose(&x()).unwrap();
        assert_eq!((d.core, d.index), (x(), 1));
        assert!(d.nil.is_zero());

        let d = core_ep_decompose(&n()).unwrap();
        assert!(d.core.is_zero());
        assert_eq!((d.nil, d.index), (n(), 2));

        let d = core_ep_decompose(&Matrix::zeros(3, 3)).unwrap();
        assert_eq!(d.index, 1);
        assert!(d.core.is_zero() && d.nil.is_zero());

        let d = core_ep_decompose(&Matrix::identity(2)).unwrap();
        assert_eq!((d.index, d.core), (0, Matrix::identity(2)));

        assert!(core_ep_decompose(&Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn weak_mp_examples() {
        assert_eq!(weak_mp_inverse(&a()).unwrap(), z());
        assert_eq!(weak_mp_inverse(&x()).unwrap(), z());
        assert!(weak_mp_inverse(&n()).unwrap().is_zero());
    }

    #[test]
    fn weak_mp_conditions_admit_a_dagger_too() {
        // A† also meets the four weak-MP conditions for A, yet differs from (core)†.
        let a = a();
        let ad = mp_inverse(&a).unwrap();
        let aw = &a * &ad;
        let wa = &ad * &a;
        assert_eq!(&wa * &ad, ad);
        assert!(aw.is_hermitian() && wa.is_hermitian());
        assert!((&a - &(&aw * &a)).vanishing_power().is_some());
        assert_ne!(ad, weak_mp_inverse(&a).unwrap());
    }
}
