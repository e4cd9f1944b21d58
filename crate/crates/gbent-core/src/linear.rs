//! Small binary matrices for the affine action on function domains.
//!
//! An `n x n` matrix over `F_2` is stored one row per `u32` bitmask, and a
//! point of `F_2^n` is a `u32` whose bit `i` is coordinate `i+1` (matching
//! the point-index convention of the crate). Vectors act on the left:
//! `x * M` XORs together the rows of `M` selected by the bits of `x`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// A square matrix over `F_2`, at most 20 columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinMatrix {
    n: usize,
    rows: Vec<u32>,
}

impl BinMatrix {
    /// The identity matrix.
    pub fn identity(n: usize) -> Self {
        assert!(
            (1..=crate::MAX_VARS).contains(&n),
            "unsupported matrix size"
        );
        BinMatrix {
            n,
            rows: (0..n).map(|i| 1 << i).collect(),
        }
    }

    /// Builds a matrix from row bitmasks; the row count sets `n`.
    pub fn from_rows(rows: Vec<u32>) -> Result<Self, Error> {
        let n = rows.len();
        if n == 0 || n > crate::MAX_VARS {
            return Err(Error::TooManyVariables {
                n,
                max: crate::MAX_VARS,
            });
        }
        let mask = (1u32 << n) - 1;
        if let Some(&row) = rows.iter().find(|&&r| r & !mask != 0) {
            return Err(Error::InvalidRow { row, n });
        }
        Ok(BinMatrix { n, rows })
    }

    /// Identity plus a single off-diagonal one at `(i, j)` (a transvection).
    pub fn elementary(n: usize, i: usize, j: usize) -> Self {
        assert!(i < n && j < n && i != j);
        let mut m = Self::identity(n);
        m.rows[i] |= 1 << j;
        m
    }

    /// The full-cycle coordinate permutation `e_i -> e_(i+1 mod n)`.
    pub fn cycle(n: usize) -> Self {
        let mut m = Self::identity(n);
        for i in 0..n {
            m.rows[i] = 1 << ((i + 1) % n);
        }
        m
    }

    /// Matrix size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Row `i` as a bitmask.
    pub fn row(&self, i: usize) -> u32 {
        self.rows[i]
    }

    /// Entry at row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.rows[i] >> j) & 1 == 1
    }

    /// The row vector `x * M`.
    pub fn apply_to_point(&self, x: u32) -> u32 {
        let mut acc = 0;
        let mut rest = x;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            acc ^= self.rows[i];
            rest &= rest - 1;
        }
        acc
    }

    /// Matrix product `self * rhs` (so `x * (self * rhs) = (x * self) * rhs`).
    pub fn multiply(&self, rhs: &BinMatrix) -> Result<Self, Error> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch);
        }
        Ok(BinMatrix {
            n: self.n,
            rows: self.rows.iter().map(|&r| rhs.apply_to_point(r)).collect(),
        })
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        let rows = (0..self.n)
            .map(|j| {
                let mut row = 0;
                for i in 0..self.n {
                    if self.get(i, j) {
                        row |= 1 << i;
                    }
                }
                row
            })
            .collect();
        BinMatrix { n: self.n, rows }
    }

    /// Inverse by Gauss-Jordan elimination on `[M | I]`.
    pub fn inverse(&self) -> Result<Self, Error> {
        let n = self.n;
        // Augmented rows: low n bits hold M, high n bits hold the identity.
        let mut aug: Vec<u64> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, &r)| (r as u64) | (1u64 << (n + i)))
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| (aug[r] >> col) & 1 == 1)
                .ok_or(Error::SingularMatrix)?;
            aug.swap(col, pivot);
            for r in 0..n {
                if r != col && (aug[r] >> col) & 1 == 1 {
                    aug[r] ^= aug[col];
                }
            }
        }
        let rows = aug.iter().map(|&r| (r >> n) as u32).collect();
        Ok(BinMatrix { n, rows })
    }

    /// True when the matrix is invertible over `F_2`.
    pub fn is_invertible(&self) -> bool {
        self.inverse().is_ok()
    }
}

impl fmt::Debug for BinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinMatrix(n={}, rows={:?})", self.n, self.rows)
    }
}
