//! Moore-Penrose inverse and the range projectors.

use crate::error::{dim_err, Error, Result};
use crate::matrix::Matrix;

/// `a† = g*·(g·g*)⁻¹·(f*·f)⁻¹·f*` from the full-rank factorization `a = f·g`.
///
/// Both Gram matrices are invertible over ℚ(i) because `Σ z̄z = 0` forces
/// every `z = 0`; a singular one is reported as [`Error::Internal`].
pub fn mp_inverse(a: &Matrix) -> Result<Matrix> {
    let frf = a.full_rank_factorize();
    if frf.rank == 0 {
        return Ok(Matrix::zeros(a.cols(), a.rows()));
    }
    let (f_adj, g_adj) = (frf.f.adjoint(), frf.g.adjoint());
    let left_gram = (&f_adj * &frf.f)
        .try_inverse()
        .ok_or_else(|| Error::Internal("f*f is singular".into()))?;
    let right_gram = (&frf.g * &g_adj)
        .try_inverse()
        .ok_or_else(|| Error::Internal("gg* is singular".into()))?;
    Ok(&(&(&g_adj * &right_gram) * &left_gram) * &f_adj)
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

/// `p_a = a·a†`, the orthogonal projector onto `im(a)`.
pub fn image_projector(a: &Matrix) -> Result<Matrix> {
    require_square(a, "image_projector")?;
    Ok(a * &mp_inverse(a)?)
}

/// `q_a = a†·a`, the orthogonal projector onto `im(a*)`.
pub fn coimage_projector(a: &Matrix) -> Result<Matrix> {
    require_square(a, "coimage_projector")?;
    Ok(&mp_inverse(a)? * a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{a, n, x, z};
    use crate::matrix::{subspace_relate, SubspaceDescriptor, SubspaceRelation};
    use crate::scalar::GaussianRational;

    fn penrose_holds(a: &Matrix, x: &Matrix) -> bool {
        let ax = a * x;
        let xa = x * a;
        &(&xa * x) == x && &(&ax * a) == a && ax.is_hermitian() && xa.is_hermitian()
    }

    #[test]
    fn mp_examples() {
        assert_eq!(mp_inverse(&x()).unwrap(), z());
        assert_eq!(mp_inverse(&Matrix::identity(3)).unwrap(), Matrix::identity(3));
        assert_eq!(mp_inverse(&n()).unwrap(), n().adjoint());
        assert!(penrose_holds(&n(), &n().adjoint()));

        // Frozen from an independent symbolic computation; Penrose checked below.
        let a_dag = Matrix::parse_rows(&[
            &["6", "6+6i", "-18"],
            &["6-6i", "12", "9-9i"],
            &["0", "0", "0"],
        ])
        .unwrap()
        .scale(&GaussianRational::ratio(1, 54));
        assert!(penrose_holds(&a(), &a_dag));
        assert_eq!(mp_inverse(&a()).unwrap(), a_dag);
    }

    #[test]
    fn rectangular_and_zero() {
        let r = Matrix::parse_rows(&[&["1", "i", "0"], &["2", "2i", "1/2"]]).unwrap();
        let rd = mp_inverse(&r).unwrap();
        assert_eq!(rd.shape(), (3, 2));
        assert!(penrose_holds(&r, &rd));
        assert_eq!(mp_inverse(&Matrix::zeros(2, 3)).unwrap(), Matrix::zeros(3, 2));
    }

    #[test]
    fn projector_examples() {
        let third_x = x().scale(&GaussianRational::ratio(1, 3));
        assert_eq!(image_projector(&x()).unwrap(), third_x);
        assert_eq!(coimage_projector(&x()).unwrap(), third_x);
        let e11 = Matrix::parse_rows(&[&["1", "0"], &["0", "0"]]).unwrap();
        let e22 = Matrix::parse_rows(&[&["0", "0"], &["0", "1"]]).unwrap();
        assert_eq!(image_projector(&n()).unwrap(), e11);
        assert_eq!(coimage_projector(&n()).unwrap(), e22);
        assert!(image_projector(&Matrix::zeros(3, 3)).unwrap().is_zero());
        assert_eq!(coimage_projector(&Matrix::identity(2)).unwrap(), Matrix::identity(2));
        assert!(image_projector(&Matrix::zeros(2, 3)).is_err());

        let p = image_projector(&a()).unwrap();
        let q = coimage_projector(&a()).unwrap();
        for proj in [&p, &q] {
            assert!(proj.is_hermitian() && proj.is_idempotent());
        }
        let same = |m: &Matrix, s: &Matrix| {
            subspace_relate(
                &SubspaceDescriptor::image(m.clone()),
                &SubspaceDescriptor::image(s.clone()),
                SubspaceRelation::Equals,
            )
            .unwrap()
        };
        assert!(same(&p, &a()));
        assert!(same(&q, &a().adjoint()));
    }

    #[test]
    fn bridge_identity_on_fixture() {
        let a = a();
        let ad = mp_inverse(&a).unwrap();
        let lhs = &(&coimage_projector(&a).unwrap() * &a) * &image_projector(&a).unwrap();
        let rhs = &(&ad * &a.pow(3).unwrap()) * &ad;
        assert_eq!(lhs, rhs);
    }
}
