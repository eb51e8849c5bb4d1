//! Matrices over GF(2), with rows stored as machine-word bitsets.

use alloc::vec;
use alloc::vec::Vec;

use super::{bit_positions, LabelIndex};
use crate::chord::EdgeLabel;
use crate::delta::SetSystem;
use crate::error::Error;
use crate::Result;

/// A square GF(2) matrix indexed by edge labels. Row `i` is the bitset of
/// columns holding a 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    index: LabelIndex,
    rows: Vec<u64>,
}

impl Gf2Matrix {
    pub fn new(labels: Vec<EdgeLabel>, rows: Vec<Vec<u8>>) -> Result<Self> {
        let index = LabelIndex::new(labels)?;
        let n = index.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::IndexMismatch);
        }
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, &v)| acc | (u64::from(v & 1) << j))
            })
            .collect();
        Ok(Gf2Matrix { index, rows })
    }

    pub(crate) fn from_rows(labels: Vec<EdgeLabel>, rows: Vec<u64>) -> Self {
        let index = LabelIndex::new(labels).expect("caller guarantees unique labels");
        debug_assert_eq!(index.len(), rows.len());
        Gf2Matrix { index, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn labels(&self) -> &[EdgeLabel] {
        self.index.labels()
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        (self.rows[i] >> j & 1) as u8
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim()).all(|i| (i + 1..self.dim()).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    /// GF(2) rank of the principal submatrix on `subset`.
    pub fn rank(&self, subset: &[EdgeLabel]) -> Result<usize> {
        Ok(self.rank_mask(self.index.mask_of(subset)?))
    }

    pub fn rank_mask(&self, mask: u64) -> usize {
        let mut basis: Vec<u64> = Vec::new();
        for i in bit_positions(mask) {
            let mut row = self.rows[i] & mask;
            for &b in &basis {
                let pivot = 1u64 << (63 - b.leading_zeros());
                if row & pivot != 0 {
                    row ^= b;
                }
            }
            if row != 0 {
                basis.push(row);
            }
        }
        basis.len()
    }

    /// Whether the principal submatrix on `mask` is nonsingular.
    pub fn nonsingular(&self, mask: u64) -> bool {
        self.rank_mask(mask) == mask.count_ones() as usize
    }

    /// The represented set system: all label subsets whose principal
    /// submatrix is nonsingular. The empty set is always feasible.
    pub fn represented_system(&self, limit: usize) -> Result<SetSystem> {
        let n = self.dim();
        if n > limit {
            return Err(Error::SizeLimitExceeded {
                requested: n,
                limit,
            });
        }
        let feasible: Vec<u64> = (0..1u64 << n).filter(|&m| self.nonsingular(m)).collect();
        SetSystem::from_masks(self.index.labels().to_vec(), feasible)
    }

    /// Reindexes the matrix by the given label order.
    pub fn permuted(&self, order: &[EdgeLabel]) -> Result<Gf2Matrix> {
        let n = self.dim();
        if order.len() != n {
            return Err(Error::IndexMismatch);
        }
        let perm: Result<alloc::vec::Vec<usize>> =
            order.iter().map(|l| self.index.position(l)).collect();
        let perm = perm?;
        let rows = (0..n)
            .map(|i| {
                (0..n).fold(0u64, |acc, j| {
                    acc | (u64::from(self.entry(perm[i], perm[j])) << j)
                })
            })
            .collect();
        Ok(Gf2Matrix::from_rows(order.to_vec(), rows))
    }

    /// Integer lift with the same 0/1 entries.
    pub fn to_int(&self) -> super::int::IntMatrix {
        let n = self.dim();
        let mut entries = vec![0i128; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = i128::from(self.entry(i, j));
            }
        }
        super::int::IntMatrix::from_entries(self.index.labels().to_vec(), entries)
            .expect("dimensions agree")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<EdgeLabel> {
        (1..=n).map(EdgeLabel::numeric).collect()
    }

    #[test]
    fn rank_of_zero_matrix_is_zero() {
        let m = Gf2Matrix::new(labels(3), vec![vec![0, 0, 0]; 3]).unwrap();
        assert_eq!(m.rank_mask(0b111), 0);
        assert_eq!(m.rank_mask(0), 0);
    }

    #[test]
    fn intro_matrix_ranks() {
        // diagonal (1,0,0), edge 1 interlacing 2 and 3
        let m =
            Gf2Matrix::new(labels(3), vec![vec![1, 1, 1], vec![1, 0, 0], vec![1, 0, 0]]).unwrap();
        assert_eq!(m.rank_mask(0b001), 1);
        assert_eq!(m.rank_mask(0b010), 0);
        assert!(m.nonsingular(0b011));
        assert!(!m.nonsingular(0b110));
        assert!(!m.nonsingular(0b111));
    }

    #[test]
    fn represented_system_of_intro_matrix() {
        let m =
            Gf2Matrix::new(labels(3), vec![vec![1, 1, 1], vec![1, 0, 0], vec![1, 0, 0]]).unwrap();
        let sys = m.represented_system(16).unwrap();
        assert_eq!(sys.feasible_masks(), &[0b000, 0b001, 0b011, 0b101]);
    }
}
