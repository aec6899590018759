//! Gauss-Jordan elimination and everything built on it.

use super::Matrix;
use crate::error::{dim_err, Error, Result};
use crate::scalar::GaussianRational;

/// Reduced row-echelon form with its rank and pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// `a = f·g` with `f` of full column rank and `g` of full row rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullRankFactorization {
    pub f: Matrix,
    pub g: Matrix,
    pub rank: usize,
}

impl Matrix {
    /// Reduced row-echelon form. Pivots are the first nonzero entry in each
    /// column, so the result is deterministic.
    pub fn rref(&self) -> Rref {
        self.rref_limited(self.cols)
    }

    /// Gauss-Jordan elimination that only pivots in the first `limit` columns.
    fn rref_limited(&self, limit: usize) -> Rref {
        let mut m = self.clone();
        let (rows, cols) = m.shape();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = m[(r, c)].checked_inv().expect("nonzero pivot");
            for j in c..cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            let pivot_row: Vec<GaussianRational> = m.row(r).to_vec();
            for i in 0..rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..cols {
                    if !pivot_row[j].is_zero() {
                        m[(i, j)] -= &(&factor * &pivot_row[j]);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            reduced: m,
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// The RREF together with an invertible `p` such that `p·self` is it.
    pub fn rref_transform(&self) -> (Rref, Matrix) {
        let aug = self.hstack(&Matrix::identity(self.rows)).expect("same row count");
        let Rref { reduced, rank, pivots } = aug.rref_limited(self.cols);
        let left: Vec<usize> = (0..self.cols).collect();
        let right: Vec<usize> = (self.cols..aug.cols).collect();
        let rref = Rref {
            reduced: reduced.select_columns(&left),
            rank,
            pivots,
        };
        (rref, reduced.select_columns(&right))
    }

    /// Canonical solution `r` of `b·r·c = y`.
    ///
    /// This is the solution of the vectorized system `(cᵀ⊗b)·vec(r) = vec(y)`
    /// with free variables set to zero, obtained without forming the
    /// Kronecker product: the RREF of `cᵀ⊗b` is `rref(cᵀ)⊗rref(b)` up to row
    /// order, so the system decouples into `r[qₖ, pᵢ] = (P_b·y·P_cᵀ)[k, i]`
    /// over the pivots `pᵢ` of `cᵀ` and `qₖ` of `b`, with every other entry
    /// of the transformed right-hand side required to vanish.
    pub fn solve_sandwich(b: &Matrix, c: &Matrix, y: &Matrix) -> Result<Matrix> {
        if b.rows != y.rows || c.cols != y.cols {
            return Err(dim_err(format!(
                "b·r·c = y needs rows(b) = rows(y) and cols(c) = cols(y), got {}x{}, {}x{}, {}x{}",
                b.rows, b.cols, c.rows, c.cols, y.rows, y.cols
            )));
        }
        let (rb, pb) = b.rref_transform();
        let (rc, pc) = c.transpose().rref_transform();
        let rhs = &(&pb * y) * &pc.transpose();

        let mut r = Matrix::zeros(b.cols, c.rows);
        for k in 0..rhs.rows {
            for i in 0..rhs.cols {
                let v = &rhs[(k, i)];
                if k < rb.rank && i < rc.rank {
                    r[(rb.pivots[k], rc.pivots[i])] = v.clone();
                } else if !v.is_zero() {
                    return Err(Error::NoSolution);
                }
            }
        }
        Ok(r)
    }

    /// Canonical particular solution `u` of `self·u = rhs`: free variables of
    /// the RREF parametrization are set to zero.
    pub fn solve_right(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows {
            return Err(dim_err(format!(
                "system has {} equations but right-hand side has {} rows",
                self.rows, rhs.rows
            )));
        }
        let aug = self.hstack(rhs)?;
        let Rref { reduced, rank, pivots } = aug.rref_limited(self.cols);
        // Consistency: zero rows of the coefficient part must be zero on the right.
        for i in rank..reduced.rows {
            if (self.cols..aug.cols).any(|j| !reduced[(i, j)].is_zero()) {
                return Err(Error::NoSolution);
            }
        }
        let mut u = Matrix::zeros(self.cols, rhs.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                u[(p, j)] = reduced[(r, self.cols + j)].clone();
            }
        }
        Ok(u)
    }

    /// Exact kernel basis, one column per free variable.
    pub fn nullspace_basis(&self) -> Vec<Matrix> {
        let Rref { reduced, pivots, .. } = self.rref();
        let free = (0..self.cols).filter(|c| !pivots.contains(c));
        free.map(|f| {
            let mut v = vec![GaussianRational::zero(); self.cols];
            v[f] = GaussianRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&reduced[(r, f)];
            }
            Matrix::column(v)
        })
        .collect()
    }

    /// Kernel basis packed as the columns of one `cols × nullity` matrix.
    pub fn nullspace_matrix(&self) -> Matrix {
        self.nullspace_basis()
            .iter()
            .fold(Matrix::zeros(self.cols, 0), |acc, v| acc.hstack(v).expect("same height"))
    }

    /// `f` = pivot columns of `self`, `g` = nonzero rows of its RREF.
    pub fn full_rank_factorize(&self) -> FullRankFactorization {
        let Rref { reduced, rank, pivots } = self.rref();
        FullRankFactorization {
            f: self.select_columns(&pivots),
            g: reduced.top_rows(rank),
            rank,
        }
    }

    /// Two-sided inverse, or `None` for singular and non-square input.
    pub fn try_inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let Rref { reduced, rank, .. } = self.hstack(&Matrix::identity(n)).ok()?.rref_limited(n);
        (rank == n).then(|| Matrix::from_fn(n, n, |i, j| reduced[(i, n + j)].clone()))
    }
}
