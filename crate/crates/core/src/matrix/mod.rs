//! Dense matrices over ℚ(i).
//!
//! The involution of the matrix *-ring is the conjugate transpose
//! ([`Matrix::adjoint`]). Shapes with a zero dimension are allowed so that
//! rank-0 factorizations (`n×0` times `0×m`) compose without special cases.

mod elim;
mod membership;
mod subspace;

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{dim_err, Result};
use crate::scalar::GaussianRational;

pub use elim::{FullRankFactorization, Rref};
pub use membership::{ideal_membership, MembershipWitness, Relation};
pub use subspace::{subspace_relate, SubspaceDescriptor, SubspaceKind, SubspaceRelation};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl Matrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, data: Vec<GaussianRational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(dim_err(format!(
                "{} entries cannot fill a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from a non-empty rectangular grid.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != c) {
            return Err(dim_err(format!(
                "row {i} has {} entries, expected {c}",
                row.len()
            )));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Parses a grid of scalar tokens. Intended for fixtures and tests.
    pub fn parse_rows(rows: &[&[&str]]) -> Result<Self> {
        let grid = rows
            .iter()
            .map(|row| row.iter().map(|t| t.parse()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(grid)
    }

    /// Single column from the given entries.
    pub fn column(entries: Vec<GaussianRational>) -> Self {
        Matrix {
            rows: entries.len(),
            cols: 1,
            data: entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[GaussianRational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussianRational::is_zero)
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.adjoint()
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && &(self * self) == self
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, k: &GaussianRational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * k).collect(),
        }
    }

    pub fn checked_add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_shape(rhs, "add")?;
        Ok(self.zip_with(rhs, |a, b| a + b))
    }

    pub fn checked_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_shape(rhs, "sub")?;
        Ok(self.zip_with(rhs, |a, b| a - b))
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(dim_err(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lhs = &self[(i, k)];
                if lhs.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let r = &rhs[(k, j)];
                    if !r.is_zero() {
                        out.data[i * rhs.cols + j] += &(lhs * r);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self^exp` by repeated squaring; `self^0` is the identity.
    pub fn pow(&self, mut exp: u32) -> Result<Matrix> {
        if !self.is_square() {
            return Err(dim_err(format!(
                "pow needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        let mut result = Matrix::identity(self.rows);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = &result * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows {
            return Err(dim_err(format!(
                "cannot stack {} rows beside {} rows",
                self.rows, rhs.rows
            )));
        }
        Ok(Matrix::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[(i, j - self.cols)].clone()
            }
        }))
    }

    /// Columns `cols` of `self`, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    /// First `n` rows of `self`.
    pub fn top_rows(&self, n: usize) -> Matrix {
        Matrix::from_fn(n, self.cols, |i, j| self[(i, j)].clone())
    }

    pub fn columns(&self) -> Vec<Matrix> {
        (0..self.cols).map(|j| self.select_columns(&[j])).collect()
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        Matrix::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            &self[(i / rhs.rows, j / rhs.cols)] * &rhs[(i % rhs.rows, j % rhs.cols)]
        })
    }

    /// Column-major vectorization, so that `vec(b·r·x) = (xᵀ ⊗ b)·vec(r)`.
    pub fn vectorize(&self) -> Matrix {
        Matrix::column(
            (0..self.cols)
                .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
                .map(|ij| self[ij].clone())
                .collect(),
        )
    }

    /// Inverse of [`Matrix::vectorize`].
    pub fn unvectorize(v: &Matrix, rows: usize, cols: usize) -> Result<Matrix> {
        if v.cols != 1 || v.rows != rows * cols {
            return Err(dim_err(format!(
                "a {}x{} matrix is not vec of a {rows}x{cols} matrix",
                v.rows, v.cols
            )));
        }
        Ok(Matrix::from_fn(rows, cols, |i, j| v.data[j * rows + i].clone()))
    }

    /// Block diagonal `self ⊕ rhs`.
    pub fn direct_sum(&self, rhs: &Matrix) -> Matrix {
        Matrix::from_fn(self.rows + rhs.rows, self.cols + rhs.cols, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self[(i, j)].clone(),
                (false, false) => rhs[(i - self.rows, j - self.cols)].clone(),
                _ => GaussianRational::zero(),
            }
        })
    }

    /// Drazin index and nilpotency of a square matrix.
    ///
    /// The index is the least `k ≥ 0` with `rank(a^k) = rank(a^(k+1))`,
    /// using `a^0 = I`.
    pub fn nilpotency_and_index(&self) -> Result<NilpotencyInfo> {
        if !self.is_square() {
            return Err(dim_err(format!(
                "index needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        let mut power = Matrix::identity(self.rows);
        let mut rank = self.rows;
        let mut index = 0;
        loop {
            let next = &power * self;
            let next_rank = next.rank();
            if next_rank == rank {
                // rank(a^index) is the stable rank; zero means nilpotent.
                return Ok(NilpotencyInfo {
                    is_nilpotent: rank == 0,
                    index,
                });
            }
            power = next;
            rank = next_rank;
            index += 1;
        }
    }

    pub fn drazin_index(&self) -> Result<usize> {
        Ok(self.nilpotency_and_index()?.index)
    }

    /// Smallest `k ≥ 1` with `self^k = 0`, if any (bounded by the dimension).
    pub fn vanishing_power(&self) -> Option<usize> {
        if !self.is_square() {
            return None;
        }
        let mut power = self.clone();
        for k in 1..=self.rows.max(1) {
            if power.is_zero() {
                return Some(k);
            }
            power = &power * self;
        }
        None
    }

    fn same_shape(&self, rhs: &Matrix, op: &str) -> Result<()> {
        if self.shape() != rhs.shape() {
            return Err(dim_err(format!(
                "cannot {op} {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    fn zip_with(&self, rhs: &Matrix, f: impl Fn(&GaussianRational, &GaussianRational) -> GaussianRational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NilpotencyInfo {
    pub is_nilpotent: bool,
    pub index: usize,
}

impl Index<(usize, usize)> for Matrix {
    type Output = GaussianRational;

    fn index(&self, (i, j): (usize, usize)) -> &GaussianRational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussianRational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

// Operator forms panic on shape mismatch; the `checked_*` methods don't.

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}{}", self.rows, self.cols, self)
    }
}
