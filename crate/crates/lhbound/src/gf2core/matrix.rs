//! Dense GF(2) matrices with row-reduction, rank, and nullspace.
//!
//! Rows share the [`BitVector`] packing: column 1 is the most significant
//! bit of the row payload. Column indices in the public API are 1-based.

use crate::error::{Error, Result};
use crate::gf2core::bitvec::BitVector;

/// A binary matrix with up to 128 columns.
#[derive(Clone, PartialEq, Eq)]
pub struct GF2Matrix {
    cols: usize,
    rows: Vec<u128>,
}

/// Result of reduced row echelon form computation.
pub struct Rref {
    pub matrix: GF2Matrix,
    pub rank: usize,
    /// 1-based pivot column indices, ascending.
    pub pivot_cols: Vec<usize>,
}

impl GF2Matrix {
    pub fn new(cols: usize, row_bits: Vec<u128>) -> Self {
        assert!(cols >= 1 && cols <= 128);
        let m = if cols == 128 { u128::MAX } else { (1u128 << cols) - 1 };
        GF2Matrix {
            cols,
            rows: row_bits.into_iter().map(|r| r & m).collect(),
        }
    }

    pub fn from_rows(rows: &[BitVector]) -> Result<Self> {
        let cols = rows
            .first()
            .map(|r| r.len())
            .ok_or_else(|| Error::Parse("cannot infer column count of empty matrix".into()))?;
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    left: cols,
                    right: r.len(),
                });
            }
        }
        Ok(GF2Matrix::new(
            cols,
            rows.iter().map(|r| r.numeric_value()).collect(),
        ))
    }

    pub fn from_strings(rows: &[&str]) -> Result<Self> {
        let parsed: Vec<BitVector> = rows
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(&parsed)
    }

    pub fn empty(cols: usize) -> Self {
        GF2Matrix::new(cols, Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        GF2Matrix::new(n, (0..n).map(|i| 1u128 << (n - 1 - i)).collect())
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    /// Row `i`, 0-based.
    pub fn row(&self, i: usize) -> BitVector {
        BitVector::from_value(self.cols, self.rows[i])
    }

    pub fn rows(&self) -> impl Iterator<Item = BitVector> + '_ {
        (0..self.rows.len()).map(move |i| self.row(i))
    }

    fn col_bit(&self, col: usize) -> u128 {
        1u128 << (self.cols - col)
    }

    /// Entry at 0-based row `i`, 1-based column `j`.
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] & self.col_bit(j) != 0
    }

    /// Reduced row echelon form; the row space is preserved.
    pub fn rref(&self) -> Rref {
        let mut rows = self.rows.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for col in 1..=self.cols {
            let bit = self.col_bit(col);
            let Some(p) = (r..rows.len()).find(|&i| rows[i] & bit != 0) else {
                continue;
            };
            rows.swap(r, p);
            let pivot_row = rows[r];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && *row & bit != 0 {
                    *row ^= pivot_row;
                }
            }
            pivot_cols.push(col);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        Rref {
            matrix: GF2Matrix::new(self.cols, rows),
            rank: r,
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A full-rank matrix whose rows span `{v : M·vᵀ = 0}`.
    ///
    /// From rref with pivot columns P and free columns F: for each free
    /// column f the basis vector has a 1 at f and, at each pivot column
    /// p_i, the rref entry (i, f). This is the systematic-form
    /// construction with the column permutation folded back in.
    pub fn nullspace(&self) -> GF2Matrix {
        let Rref {
            matrix, pivot_cols, ..
        } = self.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols + 1];
            for &p in &pivot_cols {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for f in 1..=self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut row = self.col_bit(f);
            for (i, &p) in pivot_cols.iter().enumerate() {
                if matrix.get(i, f) {
                    row |= self.col_bit(p);
                }
            }
            basis.push(row);
        }
        GF2Matrix::new(self.cols, basis)
    }

    /// `self · otherᵀ`; entry (i, j) is the GF(2) inner product of row i with
    /// row j of `other`.
    pub fn times_transpose(&self, other: &GF2Matrix) -> Result<GF2Matrix> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch {
                left: self.cols,
                right: other.cols,
            });
        }
        let out_cols = other.rows.len().max(1);
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                let mut bits = 0u128;
                for (j, &o) in other.rows.iter().enumerate() {
                    if (r & o).count_ones() % 2 == 1 {
                        bits |= 1u128 << (out_cols - 1 - j);
                    }
                }
                bits
            })
            .collect();
        Ok(GF2Matrix::new(out_cols, rows))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }
}

impl std::fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "GF2Matrix {}x{}", self.rows.len(), self.cols)?;
        for r in self.rows() {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rref_identity() {
        let id = GF2Matrix::identity(4);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 4);
        assert_eq!(r.pivot_cols, vec![1, 2, 3, 4]);
    }

    #[test]
    fn rref_dependent_rows() {
        let m = GF2Matrix::from_strings(&["11", "11"]).unwrap();
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix, GF2Matrix::new(2, vec![0b11, 0]));
    }

    #[test]
    fn rref_zero_matrix() {
        let m = GF2Matrix::new(3, vec![0, 0]);
        let r = m.rref();
        assert_eq!(r.rank, 0);
        assert!(r.matrix.is_zero());
    }

    #[test]
    fn nullspace_repetition() {
        let g = GF2Matrix::from_strings(&["111"]).unwrap();
        let h = g.nullspace();
        assert_eq!(h.rank(), 2);
        assert!(g.times_transpose(&h).unwrap().is_zero());
    }

    #[test]
    fn nullspace_of_identity_is_empty() {
        let g = GF2Matrix::identity(5);
        let h = g.nullspace();
        assert_eq!(h.num_rows(), 0);
    }

    proptest! {
        #[test]
        fn rref_idempotent(rows in proptest::collection::vec(0u128..256, 1..6)) {
            let m = GF2Matrix::new(8, rows);
            let once = m.rref().matrix;
            let twice = once.rref().matrix;
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn nullspace_orthogonal(rows in proptest::collection::vec(0u128..1024, 1..7)) {
            let m = GF2Matrix::new(10, rows);
            let ns = m.nullspace();
            prop_assert_eq!(ns.num_rows(), 10 - m.rank());
            if ns.num_rows() > 0 {
                prop_assert!(m.times_transpose(&ns).unwrap().is_zero());
                prop_assert_eq!(ns.rank(), ns.num_rows());
            }
        }
    }
}
