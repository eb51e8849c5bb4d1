//! Generating polynomials, exact Hurwitz stability, and log-concavity.

pub mod stability;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chord::EdgeLabel;
use crate::delta::SetSystem;
use crate::dual::AnchoredRibbon;
use crate::error::Error;
use crate::Result;

/// A univariate polynomial with exact integer coefficients, index = degree.
/// Trailing zeros are trimmed; the zero polynomial is the empty sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPolynomial {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Coefficient sum, i.e. the value at 1.
    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Degree-reversal: coefficients read backwards.
    pub fn reversed(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().rev().cloned().collect())
    }
}

impl core::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "x")?,
                1 => write!(f, "{c}x")?,
                _ if c.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Tag for what a count sequence counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountKind {
    /// Quasi-tree counts paired by size `2i-1` or `2i`.
    QSequence,
    /// Histogram of feasible-set sizes.
    BasisSizeHistogram,
    /// Partition counts from the regular delta-matroid counting theorem.
    StanleyCounts,
}

/// A finite sequence of nonnegative counts with a declared starting index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSequence {
    pub values: Vec<u64>,
    pub offset: i64,
    pub kind: CountKind,
}

/// Mode for [`check_log_concavity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConcavityMode {
    /// `a_i^2 >= a_{i-1} a_{i+1}` on the raw sequence.
    LC,
    /// Log-concavity of `a_i / C(u-l, i-l)` over the support span.
    ULC,
}

/// Outcome of a log-concavity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcavityVerdict {
    pub passes: bool,
    /// Indices (absolute, offset applied) of internal zeros.
    pub internal_zeros: Vec<i64>,
    /// First index violating the cross-multiplied inequality, if any.
    pub first_violation: Option<i64>,
}

impl ConcavityVerdict {
    pub fn clean(&self) -> bool {
        self.passes && self.internal_zeros.is_empty()
    }
}

/// The univariate quasi-tree generating polynomial: the coefficient of
/// `x^k` counts quasi-trees with `k` edges.
pub fn qt_poly(g: &AnchoredRibbon) -> Result<IntPolynomial> {
    qt_poly_with_limit(g, crate::DEFAULT_ENUM_LIMIT)
}

pub fn qt_poly_with_limit(g: &AnchoredRibbon, limit: usize) -> Result<IntPolynomial> {
    let masks = g.quasi_tree_masks_with_limit(limit)?;
    let n = g.edges().len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for m in masks {
        coeffs[m.count_ones() as usize] += 1;
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Exact multivariate evaluation of the quasi-tree generating polynomial
/// at a rational point.
pub fn qt_poly_eval(
    g: &AnchoredRibbon,
    point: &BTreeMap<EdgeLabel, BigRational>,
) -> Result<BigRational> {
    for e in g.edges() {
        if !point.contains_key(e) {
            return Err(Error::MissingVariable(e.as_str().into()));
        }
    }
    let values: Vec<&BigRational> = g.edges().iter().map(|e| &point[e]).collect();
    let mut acc = BigRational::zero();
    for mask in g.quasi_tree_masks()? {
        let mut term = BigRational::one();
        for (i, v) in values.iter().enumerate() {
            if mask >> i & 1 == 1 {
                term *= *v;
            }
        }
        acc += term;
    }
    Ok(acc)
}

/// Univariate restriction of the quasi-tree polynomial with some edges
/// pinned to rational constants and all remaining edges set to `x`.
///
/// Returns the coefficient sequence in `x`; exact rational coefficients.
pub fn qt_poly_restricted(
    g: &AnchoredRibbon,
    pinned: &BTreeMap<EdgeLabel, BigRational>,
) -> Result<Vec<BigRational>> {
    for e in pinned.keys() {
        g.base().edge_index(e)?;
    }
    let n = g.edges().len();
    let pin: Vec<Option<&BigRational>> = g.edges().iter().map(|e| pinned.get(e)).collect();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for mask in g.quasi_tree_masks()? {
        let mut c = BigRational::one();
        let mut deg = 0usize;
        for (i, p) in pin.iter().enumerate() {
            if mask >> i & 1 == 1 {
                match p {
                    Some(v) => c *= *v,
                    None => deg += 1,
                }
            }
        }
        coeffs[deg] += c;
    }
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    Ok(coeffs)
}

/// Counts quasi-trees `X` with `|Q △ X| = 2i-1` or `2i`; the `i = 0` entry
/// counts only `|Q △ X| = 0`.
pub fn q_sequence(g: &AnchoredRibbon, q: &[EdgeLabel]) -> Result<CountSequence> {
    q_sequence_with_limit(g, q, crate::DEFAULT_ENUM_LIMIT)
}

pub fn q_sequence_with_limit(
    g: &AnchoredRibbon,
    q: &[EdgeLabel],
    limit: usize,
) -> Result<CountSequence> {
    let qmask = g.base().mask_of(q)?;
    let masks = g.quasi_tree_masks_with_limit(limit)?;
    let n = g.edges().len();
    let mut values = vec![0u64; n / 2 + 2];
    for m in masks {
        let k = (m ^ qmask).count_ones() as usize;
        values[k.div_ceil(2)] += 1;
    }
    while values.last() == Some(&0) {
        values.pop();
    }
    Ok(CountSequence {
        values,
        offset: 0,
        kind: CountKind::QSequence,
    })
}

/// Exact log-concavity test with internal-zero reporting.
pub fn check_log_concavity(s: &CountSequence, mode: ConcavityMode) -> ConcavityVerdict {
    let a = &s.values;
    let nz: Vec<usize> = (0..a.len()).filter(|&i| a[i] != 0).collect();
    let (Some(&lo), Some(&hi)) = (nz.first(), nz.last()) else {
        return ConcavityVerdict {
            passes: true,
            internal_zeros: Vec::new(),
            first_violation: None,
        };
    };
    let internal_zeros: Vec<i64> = (lo..=hi)
        .filter(|&i| a[i] == 0)
        .map(|i| i as i64 + s.offset)
        .collect();
    let span = (hi - lo) as u64;
    let binom = |k: i64| -> BigInt {
        if k < 0 || k as u64 > span {
            BigInt::zero()
        } else {
            binomial(span, k as u64)
        }
    };
    let mut first_violation = None;
    for i in lo.saturating_add(1)..hi {
        let (am, ai, ap) = (
            BigInt::from(a[i - 1]),
            BigInt::from(a[i]),
            BigInt::from(a[i + 1]),
        );
        let ok = match mode {
            ConcavityMode::LC => &ai * &ai >= &am * &ap,
            ConcavityMode::ULC => {
                let k = i as i64 - lo as i64;
                &ai * &ai * binom(k - 1) * binom(k + 1) >= &am * &ap * binom(k) * binom(k)
            }
        };
        if !ok {
            first_violation = Some(i as i64 + s.offset);
            break;
        }
    }
    ConcavityVerdict {
        passes: first_violation.is_none(),
        internal_zeros,
        first_violation,
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Parameters of a partition-count query: a free part `R` drawn with
/// varying size `i`, and fixed-size parts `S_j` of size `a_j`.
#[derive(Debug, Clone)]
pub struct StanleyQuery {
    pub free_part: Vec<EdgeLabel>,
    pub fixed_parts: Vec<(Vec<EdgeLabel>, usize)>,
}

/// Counts, for each `i`, the feasible sets that split as a disjoint union
/// of an `i`-subset of the free part and an `a_j`-subset of each fixed
/// part. The parts must be pairwise disjoint; feasible sets reaching
/// outside their union contribute nothing.
pub fn stanley_counts(d: &SetSystem, query: &StanleyQuery, limit: usize) -> Result<CountSequence> {
    if d.ground().len() > limit {
        return Err(Error::SizeLimitExceeded {
            requested: d.ground().len(),
            limit,
        });
    }
    let rmask = d.mask_of(&query.free_part)?;
    let mut smasks = Vec::new();
    let mut union = rmask;
    for (part, size) in &query.fixed_parts {
        let m = d.mask_of(part)?;
        if m & union != 0 {
            let clash = union & m;
            let i = clash.trailing_zeros() as usize;
            return Err(Error::OverlappingParts(d.ground()[i].as_str().into()));
        }
        union |= m;
        smasks.push((m, *size));
    }
    let mut values = vec![0u64; query.free_part.len() + 1];
    for &b in d.feasible_masks() {
        if b & !union != 0 {
            continue;
        }
        if smasks
            .iter()
            .any(|&(m, size)| (b & m).count_ones() as usize != size)
        {
            continue;
        }
        values[(b & rmask).count_ones() as usize] += 1;
    }
    Ok(CountSequence {
        values,
        offset: 0,
        kind: CountKind::StanleyCounts,
    })
}

/// Splits a count sequence into its even- and odd-index subsequences.
pub fn parity_classes(s: &CountSequence) -> (CountSequence, CountSequence) {
    let pick = |parity: usize| CountSequence {
        values: s
            .values
            .iter()
            .enumerate()
            .filter(|(i, _)| (*i as i64 + s.offset).rem_euclid(2) == parity as i64)
            .map(|(_, &v)| v)
            .collect(),
        offset: 0,
        kind: s.kind,
    };
    (pick(0), pick(1))
}

/// Human-readable rendering of a count sequence.
pub fn format_sequence(s: &CountSequence) -> String {
    alloc::format!("{:?} (from index {})", s.values, s.offset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord::ChordDiagram;

    fn diagram(word: &str, twisted: &str) -> ChordDiagram {
        ChordDiagram::from_tokens(word.split_whitespace(), twisted.split_whitespace()).unwrap()
    }

    fn intro() -> AnchoredRibbon {
        AnchoredRibbon::bouquet(diagram("2 1 2 3 1 3", "1"))
    }

    #[test]
    fn qt_poly_of_intro_bouquet() {
        let p = qt_poly(&intro()).unwrap();
        assert_eq!(p, IntPolynomial::from_i64(&[1, 1, 2]));
    }

    #[test]
    fn qt_poly_eval_all_ones_counts_quasi_trees() {
        let g = intro();
        let point: BTreeMap<_, _> = g
            .edges()
            .iter()
            .map(|e| (e.clone(), BigRational::one()))
            .collect();
        assert_eq!(
            qt_poly_eval(&g, &point).unwrap(),
            BigRational::from(BigInt::from(4))
        );
    }

    #[test]
    fn qt_poly_eval_indicator_point() {
        // x_1 = 1, x_2 = x_3 = 0 keeps only quasi-trees inside {1}.
        let g = intro();
        let mut point = BTreeMap::new();
        for e in g.edges() {
            point.insert(
                e.clone(),
                if e.as_str() == "1" {
                    BigRational::one()
                } else {
                    BigRational::zero()
                },
            );
        }
        assert_eq!(
            qt_poly_eval(&g, &point).unwrap(),
            BigRational::from(BigInt::from(2))
        );
    }

    #[test]
    fn qt_poly_eval_requires_all_variables() {
        let g = intro();
        let point = BTreeMap::new();
        assert!(matches!(
            qt_poly_eval(&g, &point),
            Err(Error::MissingVariable(_))
        ));
    }

    #[test]
    fn q_sequence_of_intro_bouquet() {
        let s = q_sequence(&intro(), &[]).unwrap();
        assert_eq!(s.values, [1, 3]);
    }

    #[test]
    fn q_sequence_at_quasi_tree_anchor_counts_self() {
        let g = intro();
        let q = [crate::chord::EdgeLabel::numeric(1)];
        let s = q_sequence(&g, &q).unwrap();
        assert!(s.values[0] >= 1);
    }

    #[test]
    fn ulc_examples() {
        let seq = |values: &[u64]| CountSequence {
            values: values.to_vec(),
            offset: 0,
            kind: CountKind::QSequence,
        };
        let v = check_log_concavity(&seq(&[1, 2, 1]), ConcavityMode::ULC);
        assert!(v.clean());
        let v = check_log_concavity(&seq(&[1, 1, 0, 1]), ConcavityMode::ULC);
        assert_eq!(v.internal_zeros, [2]);
        let v = check_log_concavity(&seq(&[1, 10, 10, 1]), ConcavityMode::ULC);
        assert!(v.clean());
        // (1, 1, 1) normalized by (1, 2, 1) fails ULC in the middle.
        let v = check_log_concavity(&seq(&[1, 1, 1]), ConcavityMode::ULC);
        assert!(!v.passes);
        assert!(check_log_concavity(&seq(&[1, 1, 1]), ConcavityMode::LC).passes);
    }

    #[test]
    fn stanley_counts_on_interlaced_pair() {
        // Bases of the interlaced orientable pair: {} and {1,2}.
        let g = AnchoredRibbon::bouquet(diagram("1 2 1 2", ""));
        let d = g.delta_matroid().unwrap();
        let query = StanleyQuery {
            free_part: d.ground().to_vec(),
            fixed_parts: alloc::vec![],
        };
        let c = stanley_counts(&d, &query, 14).unwrap();
        assert_eq!(c.values, [1, 0, 1]);
        let (even, odd) = parity_classes(&c);
        assert_eq!(even.values, [1, 1]);
        assert!(odd.values.iter().all(|&v| v == 0));
        assert!(check_log_concavity(&even, ConcavityMode::ULC).clean());
    }

    #[test]
    fn stanley_counts_reject_overlap() {
        let g = AnchoredRibbon::bouquet(diagram("1 2 1 2", ""));
        let d = g.delta_matroid().unwrap();
        let e1 = crate::chord::EdgeLabel::numeric(1);
        let query = StanleyQuery {
            free_part: alloc::vec![e1.clone()],
            fixed_parts: alloc::vec![(alloc::vec![e1], 1)],
        };
        assert!(matches!(
            stanley_counts(&d, &query, 14),
            Err(Error::OverlappingParts(_))
        ));
    }

    #[test]
    fn oversized_fixed_part_requests_zero_everything() {
        let g = AnchoredRibbon::bouquet(diagram("1 2 1 2", ""));
        let d = g.delta_matroid().unwrap();
        let e1 = crate::chord::EdgeLabel::numeric(1);
        let query = StanleyQuery {
            free_part: alloc::vec![],
            fixed_parts: alloc::vec![(alloc::vec![e1], 2)],
        };
        let c = stanley_counts(&d, &query, 14).unwrap();
        assert!(c.values.iter().all(|&v| v == 0));
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(
            alloc::format!("{}", IntPolynomial::from_i64(&[1, 6, 9, 8, 12])),
            "12x^4 + 8x^3 + 9x^2 + 6x + 1"
        );
        assert_eq!(alloc::format!("{}", IntPolynomial::from_i64(&[])), "0");
    }
}
