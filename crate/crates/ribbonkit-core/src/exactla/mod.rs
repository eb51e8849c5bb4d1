//! Exact linear algebra over GF(2), the integers, and the rationals.
//!
//! Matrices are square and indexed by edge labels; principal submatrices are
//! addressed by label subsets. The convention throughout is
//! `det(A[empty]) = 1`.

pub mod gf2;
pub mod int;
pub mod rat;

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::chord::EdgeLabel;
use crate::error::Error;
use crate::Result;

/// Shared label-index bookkeeping for the matrix types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct LabelIndex {
    labels: Vec<EdgeLabel>,
}

impl LabelIndex {
    pub(crate) fn new(labels: Vec<EdgeLabel>) -> Result<Self> {
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::LabelClash(a.as_str().to_string()));
            }
        }
        if labels.len() > 64 {
            return Err(Error::SizeLimitExceeded {
                requested: labels.len(),
                limit: 64,
            });
        }
        Ok(LabelIndex { labels })
    }

    pub(crate) fn len(&self) -> usize {
        self.labels.len()
    }

    pub(crate) fn labels(&self) -> &[EdgeLabel] {
        &self.labels
    }

    pub(crate) fn position(&self, label: &EdgeLabel) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.as_str().to_string()))
    }

    /// Converts a label subset to a bitmask.
    pub(crate) fn mask_of(&self, subset: &[EdgeLabel]) -> Result<u64> {
        let mut mask = 0u64;
        for l in subset {
            mask |= 1 << self.position(l)?;
        }
        Ok(mask)
    }
}

/// Positions of the set bits of `mask`, in increasing order.
pub(crate) fn bit_positions(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}
