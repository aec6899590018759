//! Test support: a deterministic corpus of small matrices over ℚ(i) and an
//! oracle for the Moore-Penrose inverse that shares no code path with the
//! full-rank-factorization route in `ginv_core::pinv`.

use ginv_core::{GaussianRational, Matrix};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x6769_6e76;

/// Entry pool `{0, ±1, ±2, ±1/2, 1±i}`.
pub fn entry_pool() -> Vec<GaussianRational> {
    ["0", "1", "-1", "2", "-2", "1/2", "-1/2", "1+1i", "1-1i"]
        .iter()
        .map(|t| t.parse().expect("pool token"))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Fixture,
    Generic,
    LowRank,
    Nilpotent,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub label: String,
    pub family: Family,
    pub matrix: Matrix,
}

struct Generator {
    rng: ChaCha8Rng,
    pool: Vec<GaussianRational>,
}

impl Generator {
    fn entry(&mut self) -> GaussianRational {
        self.pool.choose(&mut self.rng).expect("non-empty pool").clone()
    }

    fn nonzero_entry(&mut self) -> GaussianRational {
        loop {
            let e = self.entry();
            if !e.is_zero() {
                return e;
            }
        }
    }

    fn dense(&mut self, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| self.entry())
    }

    /// `b·c` with inner dimension below `n`, so the product is singular.
    fn low_rank(&mut self, n: usize) -> Matrix {
        let r = self.rng.gen_range(0..n.max(1)).max(if n > 1 { 1 } else { 0 });
        let b = self.dense(n, r);
        let c = self.dense(r, n);
        if r == 0 {
            return Matrix::zeros(n, n);
        }
        &b * &c
    }

    /// Strictly upper triangular, or upper triangular with some zero
    /// diagonal entries so that a nonzero core sits beside a nilpotent block.
    fn nilpotent_enriched(&mut self, n: usize) -> Matrix {
        let mixed = self.rng.gen_bool(0.5);
        let diag: Vec<bool> = (0..n).map(|_| mixed && self.rng.gen_bool(0.5)).collect();
        Matrix::from_fn(n, n, |i, j| {
            if j > i {
                self.entry()
            } else if i == j && diag[i] {
                self.nonzero_entry()
            } else {
                GaussianRational::zero()
            }
        })
    }
}

/// The named fixtures A, X, Y, Z, N and small identities.
pub fn fixtures() -> Vec<CorpusEntry> {
    use ginv_core::fixtures as f;
    [
        ("A", f::a()),
        ("X", f::x()),
        ("Y", f::y()),
        ("Z", f::z()),
        ("N", f::n()),
        ("I1", Matrix::identity(1)),
        ("I3", Matrix::identity(3)),
        ("O3", Matrix::zeros(3, 3)),
    ]
    .into_iter()
    .map(|(label, matrix)| CorpusEntry {
        label: label.to_string(),
        family: Family::Fixture,
        matrix,
    })
    .collect()
}

/// Deterministic corpus of `count` generated square matrices (dimensions
/// 1–5), cycling through generic, low-rank and nilpotent-enriched families,
/// preceded by [`fixtures`].
pub fn corpus(count: usize) -> Vec<CorpusEntry> {
    let mut g = Generator {
        rng: ChaCha8Rng::seed_from_u64(CORPUS_SEED),
        pool: entry_pool(),
    };
    let mut out = fixtures();
    for k in 0..count {
        let n = g.rng.gen_range(1..=5);
        let (family, matrix) = match k % 3 {
            0 => (Family::Generic, g.dense(n, n)),
            1 => (Family::LowRank, g.low_rank(n)),
            _ => (Family::Nilpotent, g.nilpotent_enriched(n)),
        };
        out.push(CorpusEntry {
            label: format!("gen{k:03}"),
            family,
            matrix,
        });
    }
    out
}

/// Moore-Penrose inverse by Greville's column recursion.
pub fn greville_pinv(a: &Matrix) -> Matrix {
    let (m, n) = a.shape();
    let column_pinv = |c: &Matrix| -> Matrix {
        // c† = c*/(c*c) for a nonzero column
        let c_adj = c.adjoint();
        let gram = (&c_adj * c)[(0, 0)].clone();
        match gram.checked_inv() {
            Ok(inv) => c_adj.scale(&inv),
            Err(_) => Matrix::zeros(1, m),
        }
    };
    let cols = a.columns();
    let mut current = cols[0].clone();
    let mut pinv = column_pinv(&current);
    for col in &cols[1..] {
        let d = &pinv * col;
        let c = col - &(&current * &d);
        let b = if c.is_zero() {
            let denom = GaussianRational::one() + (&d.adjoint() * &d)[(0, 0)].clone();
            (&d.adjoint() * &pinv).scale(&denom.checked_inv().expect("1 + |d|² > 0"))
        } else {
            column_pinv(&c)
        };
        let top = &pinv - &(&d * &b);
        pinv = Matrix::from_fn(top.rows() + 1, m, |i, j| {
            if i < top.rows() {
                top[(i, j)].clone()
            } else {
                b[(0, j)].clone()
            }
        });
        current = current.hstack(col).expect("same height");
    }
    debug_assert_eq!(pinv.shape(), (n, m));
    pinv
}
