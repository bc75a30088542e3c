//! Exact square matrices with a band above the diagonal.
//!
//! Indices are zero-based: entry `(i, j)` of a one-based textbook matrix is
//! `get(i - 1, j - 1)` here.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ExactRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,
    #[error("expected {expected} entries in row {row}, found {found}")]
    RaggedRow { row: usize, expected: usize, found: usize },
    #[error("entry ({row}, {col}) lies above band {band} but is nonzero")]
    NonzeroAboveBand { row: usize, col: usize, band: usize },
    #[error("operation requires band {required}, matrix has band {actual}")]
    BandTooWide { required: usize, actual: usize },
    #[error("zero diagonal entry at index {0}")]
    ZeroDiagonal(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

/// Square exact matrix whose entries with `col > row + band` are zero.
///
/// Band 0 is lower triangular, band 1 is lower Hessenberg, and band
/// `dim - 1` imposes no structure at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerTriangularMatrix {
    dim: usize,
    band: usize,
    entries: Vec<ExactRational>,
}

impl LowerTriangularMatrix {
    pub fn new(band: usize, rows: Vec<Vec<ExactRational>>) -> Result<Self, MatrixError> {
        let dim = rows.len();
        if dim == 0 {
            return Err(MatrixError::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for (row, values) in rows.into_iter().enumerate() {
            if values.len() != dim {
                return Err(MatrixError::RaggedRow { row, expected: dim, found: values.len() });
            }
            for (col, value) in values.into_iter().enumerate() {
                if col > row + band && !value.is_zero() {
                    return Err(MatrixError::NonzeroAboveBand { row, col, band });
                }
                entries.push(value);
            }
        }
        Ok(Self { dim, band: band.min(dim - 1), entries })
    }

    /// Builds a matrix from `entry(row, col)`; positions above the band are
    /// zero and `entry` is never called for them.
    pub fn from_fn(
        dim: usize,
        band: usize,
        mut entry: impl FnMut(usize, usize) -> ExactRational,
    ) -> Result<Self, MatrixError> {
        if dim == 0 {
            return Err(MatrixError::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in 0..dim {
            for col in 0..dim {
                entries.push(if col > row + band { ExactRational::zero() } else { entry(row, col) });
            }
        }
        Ok(Self { dim, band: band.min(dim - 1), entries })
    }

    pub fn identity(dim: usize) -> Result<Self, MatrixError> {
        Self::from_fn(dim, 0, |r, c| if r == c { ExactRational::one() } else { ExactRational::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn band(&self) -> usize {
        self.band
    }

    pub fn get(&self, row: usize, col: usize) -> &ExactRational {
        &self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ExactRational]> {
        self.entries.chunks(self.dim)
    }

    /// Leading `k x k` principal submatrix.
    pub fn leading(&self, k: usize) -> Result<Self, MatrixError> {
        Self::from_fn(k, self.band, |r, c| self.get(r, c).clone())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.dim != other.dim {
            return Err(MatrixError::DimensionMismatch(self.dim, other.dim));
        }
        let band = (self.band + other.band).min(self.dim - 1);
        Self::from_fn(self.dim, band, |r, c| {
            let mut acc = ExactRational::zero();
            for k in 0..self.dim {
                let a = self.get(r, k);
                let b = other.get(k, c);
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            acc
        })
    }
}

/// Exact inverse of a lower-triangular matrix by forward substitution.
pub fn invert_unit_lower_triangular(
    m: &LowerTriangularMatrix,
) -> Result<LowerTriangularMatrix, MatrixError> {
    if m.band != 0 && m.dim > 1 {
        return Err(MatrixError::BandTooWide { required: 0, actual: m.band });
    }
    let n = m.dim;
    if let Some(i) = (0..n).find(|&i| m.get(i, i).is_zero()) {
        return Err(MatrixError::ZeroDiagonal(i));
    }
    let mut inv = alloc::vec![ExactRational::zero(); n * n];
    for col in 0..n {
        inv[col * n + col] = m.get(col, col).recip();
        for row in col + 1..n {
            let mut acc = ExactRational::zero();
            for k in col..row {
                let l = m.get(row, k);
                if !l.is_zero() {
                    acc += l * &inv[k * n + col];
                }
            }
            inv[row * n + col] = -acc / m.get(row, row);
        }
    }
    Ok(LowerTriangularMatrix { dim: n, band: 0, entries: inv })
}

/// Determinant of a square exact matrix.
///
/// Hessenberg (band <= 1) input goes through the O(n^2) leading-minor
/// recurrence; wider bands fall back to fraction-free elimination.
pub fn determinant(m: &LowerTriangularMatrix) -> ExactRational {
    if m.band <= 1 {
        hessenberg_leading_minors(m).pop().unwrap_or_else(ExactRational::one)
    } else {
        bareiss_determinant(m)
    }
}

/// Determinants `D_0 = 1, D_1, ..., D_n` of all leading principal
/// submatrices of a lower Hessenberg matrix.
///
/// With `h` the (zero-based) entries,
/// `D_k = sum_{j<k} (-1)^(k-1-j) h[k-1][j] h[j][j+1] ... h[k-2][k-1] D_j`.
///
/// # Panics
///
/// If the band exceeds 1.
pub fn hessenberg_leading_minors(m: &LowerTriangularMatrix) -> Vec<ExactRational> {
    assert!(m.band <= 1, "leading-minor recurrence needs a Hessenberg matrix");
    let n = m.dim;
    let mut minors = Vec::with_capacity(n + 1);
    minors.push(ExactRational::one());
    for k in 1..=n {
        let row = k - 1;
        let mut acc = ExactRational::zero();
        // superdiagonal product h[j][j+1] ... h[k-2][k-1], built from j = k-1 down
        let mut chain = ExactRational::one();
        for j in (0..k).rev() {
            if j + 1 < k {
                chain *= m.get(j, j + 1);
            }
            if chain.is_zero() {
                break;
            }
            let h = m.get(row, j);
            if !h.is_zero() {
                let term = h * &chain * &minors[j];
                if (k - 1 - j) % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
        }
        minors.push(acc);
    }
    minors
}

/// Fraction-free (Bareiss) determinant.
///
/// Each row is first cleared of denominators, so the elimination itself only
/// performs exact integer divisions.
pub fn bareiss_determinant(m: &LowerTriangularMatrix) -> ExactRational {
    let n = m.dim;
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .rows()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &lcm;
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return ExactRational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = if negate { -prev } else { prev };
    let result = ExactRational::new(det, scale);
    debug_assert!(result.denom().is_positive());
    result
}
