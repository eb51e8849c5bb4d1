//! Exact integer matrices: Bareiss determinants, principal unimodularity,
//! Smith normal form, represented set systems, and the bordered skew form.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{bit_positions, LabelIndex};
use crate::chord::EdgeLabel;
use crate::delta::SetSystem;
use crate::error::Error;
use crate::Result;

/// A square integer matrix indexed by edge labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    index: LabelIndex,
    entries: Vec<i128>,
}

/// Smith normal form diagonal: nonnegative integers with `d1 | d2 | ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_entries(labels: Vec<EdgeLabel>, entries: Vec<i128>) -> Result<Self> {
        let index = LabelIndex::new(labels)?;
        if entries.len() != index.len() * index.len() {
            return Err(Error::IndexMismatch);
        }
        Ok(IntMatrix { index, entries })
    }

    pub fn from_rows(labels: Vec<EdgeLabel>, rows: Vec<Vec<i128>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::IndexMismatch);
        }
        IntMatrix::from_entries(labels, rows.into_iter().flatten().collect())
    }

    pub fn zero(labels: Vec<EdgeLabel>) -> Result<Self> {
        let n = labels.len();
        IntMatrix::from_entries(labels, vec![0; n * n])
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn labels(&self) -> &[EdgeLabel] {
        self.index.labels()
    }

    pub fn entry(&self, i: usize, j: usize) -> i128 {
        self.entries[i * self.dim() + j]
    }

    pub fn rows(&self) -> Vec<Vec<i128>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            self.entry(i, i) == 0 && (i + 1..n).all(|j| self.entry(i, j) == -self.entry(j, i))
        })
    }

    /// `I + M`.
    pub fn plus_identity(&self) -> IntMatrix {
        let mut out = self.clone();
        let n = out.dim();
        for i in 0..n {
            out.entries[i * n + i] += 1;
        }
        out
    }

    /// Exact determinant of the principal submatrix on `subset`;
    /// `det(A[empty]) = 1`.
    pub fn det(&self, subset: &[EdgeLabel]) -> Result<BigInt> {
        Ok(self.det_mask(self.index.mask_of(subset)?))
    }

    pub fn det_mask(&self, mask: u64) -> BigInt {
        let idx = bit_positions(mask);
        let sub: Vec<i128> = idx
            .iter()
            .flat_map(|&i| idx.iter().map(move |&j| self.entry(i, j)))
            .collect();
        match bareiss_det_i128(&sub, idx.len()) {
            Some(d) => BigInt::from(d),
            None => bareiss_det_big(
                &sub.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>(),
                idx.len(),
            ),
        }
    }

    /// Whole-matrix determinant.
    pub fn det_full(&self) -> BigInt {
        self.det_mask(if self.dim() == 0 {
            0
        } else {
            (1u64 << self.dim()) - 1
        })
    }

    /// Whether every principal minor lies in `{0, 1, -1}`.
    pub fn is_pu(&self, limit: usize) -> Result<bool> {
        let n = self.dim();
        if n > limit {
            return Err(Error::SizeLimitExceeded {
                requested: n,
                limit,
            });
        }
        let one = BigInt::one();
        Ok((0..1u64 << n).all(|m| self.det_mask(m).abs() <= one))
    }

    /// The set system of nonsingular principal index sets.
    pub fn represented_system(&self, limit: usize) -> Result<SetSystem> {
        let n = self.dim();
        if n > limit {
            return Err(Error::SizeLimitExceeded {
                requested: n,
                limit,
            });
        }
        let feasible: Vec<u64> = (0..1u64 << n)
            .filter(|&m| !self.det_mask(m).is_zero())
            .collect();
        SetSystem::from_masks(self.index.labels().to_vec(), feasible)
    }

    /// The rank-one shift `A + v v^T` of a skew-symmetric matrix.
    pub fn rank_one_shift(skew: &IntMatrix, v: &[i128]) -> Result<IntMatrix> {
        if !skew.is_skew_symmetric() {
            return Err(Error::NotSkewSymmetric);
        }
        let n = skew.dim();
        if v.len() != n {
            return Err(Error::IndexMismatch);
        }
        let mut entries = skew.entries.clone();
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] += v[i] * v[j];
            }
        }
        IntMatrix::from_entries(skew.labels().to_vec(), entries)
    }

    /// The bordered skew form: `A` extended by a final row `-v^T` and
    /// column `v`, indexed by a fresh label.
    pub fn bordered(skew: &IntMatrix, v: &[i128], hat: EdgeLabel) -> Result<IntMatrix> {
        if !skew.is_skew_symmetric() {
            return Err(Error::NotSkewSymmetric);
        }
        let n = skew.dim();
        if v.len() != n {
            return Err(Error::IndexMismatch);
        }
        let mut labels = skew.labels().to_vec();
        labels.push(hat);
        let m = n + 1;
        let mut entries = vec![0i128; m * m];
        for i in 0..n {
            for j in 0..n {
                entries[i * m + j] = skew.entry(i, j);
            }
            entries[i * m + n] = v[i];
            entries[n * m + i] = -v[i];
        }
        IntMatrix::from_entries(labels, entries)
    }

    /// Reindexes the matrix by the given label order.
    pub fn permuted(&self, order: &[EdgeLabel]) -> Result<IntMatrix> {
        let n = self.dim();
        if order.len() != n {
            return Err(Error::IndexMismatch);
        }
        let perm: Result<Vec<usize>> = order.iter().map(|l| self.index.position(l)).collect();
        let perm = perm?;
        let entries = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.entry(perm[i], perm[j]))
            .collect();
        IntMatrix::from_entries(order.to_vec(), entries)
    }

    /// Smith normal form diagonal of the matrix.
    pub fn smith_normal_form(&self) -> SnfResult {
        let n = self.dim();
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(self.entry(i, j))).collect())
            .collect();
        let mut diag = smith_diagonal(&mut a);
        diag.resize(n, BigInt::zero());
        SnfResult { diagonal: diag }
    }
}

/// Verifies `det((A + v v^T)[I]) = det(A_v[α(I)])` for every index subset,
/// where `α` appends the border index to odd-sized subsets. `A` must be
/// skew-symmetric.
pub fn bordered_identity_check(skew: &IntMatrix, v: &[i128], limit: usize) -> Result<bool> {
    let n = skew.dim();
    if n > limit {
        return Err(Error::SizeLimitExceeded {
            requested: n,
            limit,
        });
    }
    let shifted = IntMatrix::rank_one_shift(skew, v)?;
    let hat = crate::delta::fresh_label(skew.labels());
    let bordered = IntMatrix::bordered(skew, v, hat)?;
    let hat_bit = 1u64 << n;
    for mask in 0..1u64 << n {
        let alpha = if mask.count_ones() % 2 == 1 {
            mask | hat_bit
        } else {
            mask
        };
        if shifted.det_mask(mask) != bordered.det_mask(alpha) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Bareiss fraction-free determinant over `i128` with overflow detection.
fn bareiss_det_i128(entries: &[i128], n: usize) -> Option<i128> {
    if n == 0 {
        return Some(1);
    }
    let mut a = entries.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k * n + k] == 0 {
            let swap = (k + 1..n).find(|&r| a[r * n + k] != 0)?;
            // A zero pivot column below the diagonal means the determinant
            // is zero; find() above only fails in that case.
            for j in 0..n {
                a.swap(k * n + j, swap * n + j);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t1 = a[i * n + j].checked_mul(a[k * n + k])?;
                let t2 = a[i * n + k].checked_mul(a[k * n + j])?;
                a[i * n + j] = t1.checked_sub(t2)? / prev;
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    Some(sign * a[(n - 1) * n + (n - 1)])
}

fn bareiss_det_big(entries: &[BigInt], n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut a = entries.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, swap * n + j);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = t / &prev;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = a[k * n + k].clone();
    }
    sign * a[(n - 1) * n + (n - 1)].clone()
}

/// Reduces `a` to its Smith normal form diagonal (nonzero part only).
fn smith_diagonal(a: &mut [Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    let mut diag: Vec<BigInt> = Vec::new();
    let mut top = 0usize;
    while top < n {
        // Find a nonzero entry in the remaining block.
        let mut pivot = None;
        'found: for i in top..n {
            for j in top..n {
                if !a[i][j].is_zero() {
                    pivot = Some((i, j));
                    break 'found;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(top, pi);
        for row in a.iter_mut() {
            row.swap(top, pj);
        }
        loop {
            // Clear column `top` by row operations.
            let mut dirty = false;
            for i in top + 1..n {
                while !a[i][top].is_zero() {
                    let q = &a[i][top] / &a[top][top];
                    if !q.is_zero() {
                        for j in top..n {
                            let t = &a[top][j] * &q;
                            a[i][j] -= t;
                        }
                    }
                    if !a[i][top].is_zero() {
                        a.swap(top, i);
                        dirty = true;
                    }
                }
            }
            // Clear row `top` by column operations.
            for j in top + 1..n {
                while !a[top][j].is_zero() {
                    let q = &a[top][j] / &a[top][top];
                    if !q.is_zero() {
                        for row in a.iter_mut().skip(top) {
                            let t = &row[top] * &q;
                            row[j] -= t;
                        }
                    }
                    if !a[top][j].is_zero() {
                        for row in a.iter_mut() {
                            row.swap(top, j);
                        }
                        dirty = true;
                    }
                }
            }
            if !dirty && (top + 1..n).all(|i| a[i][top].is_zero()) {
                break;
            }
        }
        diag.push(a[top][top].abs());
        top += 1;
    }
    // Enforce the divisibility chain d1 | d2 | ... by gcd/lcm exchanges.
    let k = diag.len();
    if k > 1 {
        loop {
            let mut changed = false;
            for i in 0..k - 1 {
                if (&diag[i + 1] % &diag[i]).is_zero() {
                    continue;
                }
                let g = num_integer::Integer::gcd(&diag[i], &diag[i + 1]);
                let l = &diag[i] / &g * &diag[i + 1];
                diag[i] = g;
                diag[i + 1] = l;
                changed = true;
            }
            if !changed {
                break;
            }
        }
    }
    diag
}
