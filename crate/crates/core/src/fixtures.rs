//! The canonical 3×3 example pair and a few small named matrices.
//!
//! `A = X + Y` with `X` Hermitian of rank 1 (`X² = 3X`), `Y` nilpotent,
//! `X*·Y = Y·X = 0`, and `Z = X/9 = X†`.

use crate::matrix::Matrix;
use crate::scalar::GaussianRational;

pub fn a() -> Matrix {
    Matrix::parse_rows(&[&["1", "1+1i", "0"], &["1-1i", "2", "0"], &["-2", "1+1i", "0"]])
        .expect("valid fixture")
}

pub fn x() -> Matrix {
    Matrix::parse_rows(&[&["1", "1+1i", "0"], &["1-1i", "2", "0"], &["0", "0", "0"]])
        .expect("valid fixture")
}

pub fn y() -> Matrix {
    Matrix::parse_rows(&[&["0", "0", "0"], &["0", "0", "0"], &["-2", "1+1i", "0"]])
        .expect("valid fixture")
}

pub fn z() -> Matrix {
    x().scale(&GaussianRational::ratio(1, 9))
}

/// 2×2 with a single 1 in position (1, 2).
pub fn n() -> Matrix {
    Matrix::parse_rows(&[&["0", "1"], &["0", "0"]]).expect("valid fixture")
}
