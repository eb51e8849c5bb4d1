//! Exact rational matrices: determinants, principal pivot transforms, and
//! represented set systems.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{bit_positions, LabelIndex};
use crate::chord::EdgeLabel;
use crate::delta::SetSystem;
use crate::error::Error;
use crate::Result;

/// A square matrix over the rationals indexed by edge labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    index: LabelIndex,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn from_entries(labels: Vec<EdgeLabel>, entries: Vec<BigRational>) -> Result<Self> {
        let index = LabelIndex::new(labels)?;
        if entries.len() != index.len() * index.len() {
            return Err(Error::IndexMismatch);
        }
        Ok(RatMatrix { index, entries })
    }

    pub fn from_rows(labels: Vec<EdgeLabel>, rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::IndexMismatch);
        }
        RatMatrix::from_entries(labels, rows.into_iter().flatten().collect())
    }

    pub fn from_int(m: &super::int::IntMatrix) -> RatMatrix {
        let n = m.dim();
        let entries = (0..n)
            .flat_map(|i| (0..n).map(move |j| BigRational::from(BigInt::from(m.entry(i, j)))))
            .collect();
        RatMatrix {
            index: LabelIndex::new(m.labels().to_vec()).expect("labels already validated"),
            entries,
        }
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn labels(&self) -> &[EdgeLabel] {
        self.index.labels()
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.dim() + j]
    }

    /// Exact determinant of the principal submatrix on `subset`.
    pub fn det(&self, subset: &[EdgeLabel]) -> Result<BigRational> {
        Ok(self.det_mask(self.index.mask_of(subset)?))
    }

    pub fn det_mask(&self, mask: u64) -> BigRational {
        let idx = bit_positions(mask);
        let k = idx.len();
        let mut a: Vec<BigRational> = idx
            .iter()
            .flat_map(|&i| idx.iter().map(move |&j| self.entry(i, j).clone()))
            .collect();
        gauss_det(&mut a, k)
    }

    pub fn det_full(&self) -> BigRational {
        self.det_mask(if self.dim() == 0 {
            0
        } else {
            (1u64 << self.dim()) - 1
        })
    }

    /// `I + M`.
    pub fn plus_identity(&self) -> RatMatrix {
        let mut out = self.clone();
        let n = out.dim();
        for i in 0..n {
            let d = i * n + i;
            out.entries[d] += BigRational::one();
        }
        out
    }

    /// Tucker's principal pivot transform at `subset`.
    ///
    /// With the matrix written in block form over the pivot set `X` and its
    /// complement, the result is
    /// `[[M1^-1, -M1^-1 M2], [M3 M1^-1, M4 - M3 M1^-1 M2]]`,
    /// and it satisfies `det((M*X)[Y]) = det(M[X △ Y]) / det(M[X])`.
    pub fn principal_pivot(&self, subset: &[EdgeLabel]) -> Result<RatMatrix> {
        let mask = self.index.mask_of(subset)?;
        let n = self.dim();
        let p = bit_positions(mask);
        let q: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
        let k = p.len();
        let m1: Vec<BigRational> = p
            .iter()
            .flat_map(|&i| p.iter().map(move |&j| self.entry(i, j).clone()))
            .collect();
        let inv = invert(&m1, k).ok_or(Error::SingularPivotBlock)?;
        let get_inv = |i: usize, j: usize| &inv[i * k + j];
        // M1^{-1} M2 and M3 M1^{-1}.
        let mut inv_m2 = vec![BigRational::zero(); k * q.len()];
        for i in 0..k {
            for (jj, &j) in q.iter().enumerate() {
                let mut acc = BigRational::zero();
                for (tt, &t) in p.iter().enumerate() {
                    acc += get_inv(i, tt) * self.entry(t, j);
                }
                inv_m2[i * q.len() + jj] = acc;
            }
        }
        let mut m3_inv = vec![BigRational::zero(); q.len() * k];
        for (ii, &i) in q.iter().enumerate() {
            for j in 0..k {
                let mut acc = BigRational::zero();
                for (tt, &t) in p.iter().enumerate() {
                    acc += self.entry(i, t) * get_inv(tt, j);
                }
                m3_inv[ii * k + j] = acc;
            }
        }
        let mut out = vec![BigRational::zero(); n * n];
        for (ii, &i) in p.iter().enumerate() {
            for (jj, &j) in p.iter().enumerate() {
                out[i * n + j] = get_inv(ii, jj).clone();
            }
            for (jj, &j) in q.iter().enumerate() {
                out[i * n + j] = -inv_m2[ii * q.len() + jj].clone();
            }
        }
        for (ii, &i) in q.iter().enumerate() {
            for (jj, &j) in p.iter().enumerate() {
                out[i * n + j] = m3_inv[ii * k + jj].clone();
            }
            for &j in &q {
                let mut acc = self.entry(i, j).clone();
                for (tt, &t) in p.iter().enumerate() {
                    acc -= &m3_inv[ii * k + tt] * self.entry(t, j);
                }
                out[i * n + j] = acc;
            }
        }
        RatMatrix::from_entries(self.index.labels().to_vec(), out)
    }

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
}

/// In-place Gaussian elimination determinant of a `k x k` rational matrix.
fn gauss_det(a: &mut [BigRational], k: usize) -> BigRational {
    let mut det = BigRational::one();
    for col in 0..k {
        let Some(pivot) = (col..k).find(|&r| !a[r * k + col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            for j in 0..k {
                a.swap(col * k + j, pivot * k + j);
            }
            det = -det;
        }
        let p = a[col * k + col].clone();
        det *= &p;
        for r in col + 1..k {
            if a[r * k + col].is_zero() {
                continue;
            }
            let factor = &a[r * k + col] / &p;
            for j in col..k {
                let t = &a[col * k + j] * &factor;
                a[r * k + j] -= t;
            }
        }
    }
    det
}

/// Inverse of a `k x k` rational matrix, if nonsingular.
fn invert(m: &[BigRational], k: usize) -> Option<Vec<BigRational>> {
    let mut a = m.to_vec();
    let mut inv: Vec<BigRational> = (0..k * k)
        .map(|t| {
            if t / k == t % k {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !a[r * k + col].is_zero())?;
        if pivot != col {
            for j in 0..k {
                a.swap(col * k + j, pivot * k + j);
                inv.swap(col * k + j, pivot * k + j);
            }
        }
        let p = a[col * k + col].clone();
        for j in 0..k {
            a[col * k + j] /= &p;
            inv[col * k + j] /= &p;
        }
        for r in 0..k {
            if r == col || a[r * k + col].is_zero() {
                continue;
            }
            let factor = a[r * k + col].clone();
            for j in 0..k {
                let t1 = &a[col * k + j] * &factor;
                a[r * k + j] -= t1;
                let t2 = &inv[col * k + j] * &factor;
                inv[r * k + j] -= t2;
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<EdgeLabel> {
        (1..=n).map(EdgeLabel::numeric).collect()
    }

    fn rat(v: i64) -> BigRational {
        BigRational::from(BigInt::from(v))
    }

    #[test]
    fn pivot_of_scalar_one() {
        let m = RatMatrix::from_rows(labels(1), vec![vec![rat(1)]]).unwrap();
        let p = m.principal_pivot(&[EdgeLabel::numeric(1)]).unwrap();
        assert_eq!(p.entry(0, 0), &rat(1));
    }

    #[test]
    fn pivot_of_skew_two_by_two() {
        let m = RatMatrix::from_rows(labels(2), vec![vec![rat(0), rat(1)], vec![rat(-1), rat(0)]])
            .unwrap();
        let x = labels(2);
        let p = m.principal_pivot(&x).unwrap();
        assert_eq!(p.entry(0, 1), &rat(-1));
        assert_eq!(p.entry(1, 0), &rat(1));
        assert_eq!(p.entry(0, 0), &rat(0));
    }

    #[test]
    fn pivot_determinant_ratio_law() {
        let m = RatMatrix::from_rows(
            labels(3),
            vec![
                vec![rat(1), rat(2), rat(0)],
                vec![rat(-1), rat(1), rat(1)],
                vec![rat(3), rat(0), rat(2)],
            ],
        )
        .unwrap();
        let x = vec![EdgeLabel::numeric(1), EdgeLabel::numeric(2)];
        let xm = 0b011u64;
        let p = m.principal_pivot(&x).unwrap();
        let dx = m.det_mask(xm);
        for y in 0..8u64 {
            assert_eq!(p.det_mask(y), m.det_mask(xm ^ y) / dx.clone(), "Y = {y:b}");
        }
    }

    #[test]
    fn pivot_twice_is_identity() {
        let m = RatMatrix::from_rows(labels(2), vec![vec![rat(2), rat(1)], vec![rat(1), rat(1)]])
            .unwrap();
        let x = labels(2);
        let p = m.principal_pivot(&x).unwrap().principal_pivot(&x).unwrap();
        assert_eq!(p, m);
    }

    #[test]
    fn singular_pivot_block_rejected() {
        let m = RatMatrix::from_rows(labels(2), vec![vec![rat(0), rat(1)], vec![rat(1), rat(1)]])
            .unwrap();
        let err = m.principal_pivot(&[EdgeLabel::numeric(1)]).unwrap_err();
        assert_eq!(err, Error::SingularPivotBlock);
    }
}
