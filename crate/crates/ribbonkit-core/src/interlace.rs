//! Interlacing matrices of bouquets and Matrix–Quasi-tree verification.
//!
//! Three constructions are provided: the binary interlacing matrix `M2`
//! (symmetric over GF(2), diagonal = twist flags), the real interlacing
//! matrix of an orientable bouquet (skew-symmetric with `0, ±1` entries),
//! and the adjusted interlacing matrix of a pseudo-orientable bouquet with
//! a certificate. For the latter two, a principal minor is 1 exactly on
//! quasi-trees and 0 otherwise, so `det(I + M)` counts quasi-trees.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chord::{ChordDiagram, EdgeLabel};
use crate::error::Error;
use crate::exactla::gf2::Gf2Matrix;
use crate::exactla::int::IntMatrix;
use crate::exactla::rat::RatMatrix;
use crate::pseudo::Certificate;
use crate::Result;

/// Per-edge head choices for reading off signed interlacement entries.
///
/// The circle is traversed in word order (optionally reversed); each edge
/// designates one of its two word occurrences as the head.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    /// `heads[i]` is true when the head of edge `i` (first-occurrence
    /// order) is its first occurrence in the word.
    heads: Vec<bool>,
    /// Traverse the circle against word order.
    pub reverse_circle: bool,
}

impl Orientation {
    /// Heads at first occurrences, circle in word order.
    pub fn canonical(d: &ChordDiagram) -> Orientation {
        Orientation {
            heads: vec![true; d.edge_count()],
            reverse_circle: false,
        }
    }

    /// Explicit head slots: for each edge, the slot of its head.
    pub fn from_head_slots(
        d: &ChordDiagram,
        head_slots: &BTreeMap<EdgeLabel, usize>,
        reverse_circle: bool,
    ) -> Result<Orientation> {
        let mut heads = vec![true; d.edge_count()];
        for (label, &slot) in head_slots {
            let idx = d.edge_index(label)?;
            let (a, b) = d.slot_pair(idx);
            if slot == a {
                heads[idx] = true;
            } else if slot == b {
                heads[idx] = false;
            } else {
                return Err(Error::UnknownEdge(label.as_str().to_string()));
            }
        }
        Ok(Orientation {
            heads,
            reverse_circle,
        })
    }

    pub(crate) fn head_slot(&self, d: &ChordDiagram, idx: usize) -> usize {
        let (a, b) = d.slot_pair(idx);
        if self.heads[idx] {
            a
        } else {
            b
        }
    }
}

/// The binary interlacing matrix: diagonal entries are twist flags,
/// off-diagonal entries are interlacement indicators. Its nonsingular
/// principal submatrices are exactly the quasi-trees.
pub fn m2(d: &ChordDiagram) -> Gf2Matrix {
    d.m2_rows()
}

/// The skew-symmetric GF(2) matrix representing the parity lift of the
/// system represented by a symmetric GF(2) matrix `m`.
///
/// Entries: zero diagonal, `a_ij + a_ii a_jj` off the diagonal, and a
/// border row/column holding the original diagonal.
pub fn hat_matrix(m: &Gf2Matrix, hat_label: EdgeLabel) -> Result<Gf2Matrix> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if m.labels().contains(&hat_label) {
        return Err(Error::LabelClash(hat_label.as_str().to_string()));
    }
    let n = m.dim();
    let mut rows = vec![vec![0u8; n + 1]; n + 1];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                rows[i][j] = (m.entry(i, j) + m.entry(i, i) * m.entry(j, j)) & 1;
            }
        }
        rows[i][n] = m.entry(i, i);
        rows[n][i] = m.entry(i, i);
    }
    let mut labels = m.labels().to_vec();
    labels.push(hat_label);
    Gf2Matrix::new(labels, rows)
}

/// Sign of the interlacement of oriented edges `e`, `f` read along the
/// circle: `+1` for the cyclic pattern `e+ f+ e- f-`, `-1` for
/// `e+ f- e- f+`, `0` when they do not interlace.
fn signed_entry(d: &ChordDiagram, o: &Orientation, e: usize, f: usize) -> i128 {
    if !d.interlace_idx(e, f) {
        return 0;
    }
    let m = d.slot_count();
    let he = o.head_slot(d, e);
    let hf = o.head_slot(d, f);
    let (a, b) = d.slot_pair(e);
    let te = if he == a { b } else { a };
    // Does f's head lie on the arc from e's head to e's tail in word order?
    let in_arc = (hf + m - he) % m < (te + m - he) % m;
    let mut sign = if in_arc { 1 } else { -1 };
    if o.reverse_circle {
        sign = -sign;
    }
    sign
}

/// The real interlacing matrix of an orientable bouquet: skew-symmetric
/// with entries `0, ±1`. Principal minors are 1 on quasi-trees and 0
/// otherwise; changing the orientation only rescales rows and columns by
/// `-1` and leaves all principal minors unchanged.
pub fn mpm(d: &ChordDiagram, o: &Orientation) -> Result<IntMatrix> {
    if !d.is_orientable() {
        return Err(Error::NotOrientable);
    }
    let n = d.edge_count();
    let mut entries = vec![0i128; n * n];
    for e in 0..n {
        for f in 0..n {
            if e != f {
                entries[e * n + f] = signed_entry(d, o, e, f);
            }
        }
    }
    IntMatrix::from_entries(d.edges().to_vec(), entries)
}

/// The adjusted interlacing matrix of a pseudo-orientable bouquet with a
/// certificate.
///
/// Non-orientable loops are oriented with the head in the first
/// certificate arc; for a pair of non-orientable loops the entry is 1 when
/// they are equal or interlace, 2 when they do not interlace and the row
/// edge's head precedes the column edge's head along the first arc, and 0
/// otherwise. Entries involving an orientable loop carry the signed
/// interlacement pattern. `det(M[X])` is 1 exactly on quasi-trees.
///
/// Sign patterns are read in the cyclic order of the adjusted bouquet
/// (the second arc reversed): that order makes the matrix the rank-one
/// shift `A + v v^T` of the adjustment's skew interlacing matrix, which is
/// what the detection property rests on. Reading the pattern of two
/// orientable loops confined to the second arc on the un-adjusted circle
/// would flip that sign irrecoverably.
pub fn adjusted_matrix(d: &ChordDiagram, cert: &Certificate, o: &Orientation) -> Result<IntMatrix> {
    cert.validate(d)?;
    let m = d.slot_count();
    let n = d.edge_count();
    // Cyclic position of each slot after reversing the second arc,
    // starting at the first cut.
    let len1 = if m == 0 || cert.cut_a == cert.cut_b {
        m
    } else {
        (cert.cut_b + m - cert.cut_a) % m
    };
    let mut pos = vec![0usize; m];
    for i in 0..m {
        let slot = (cert.cut_a + i) % m;
        pos[slot] = if i < len1 { i } else { len1 + (m - 1 - i) };
    }
    // Heads: twisted chords point into the first arc; orientable chords
    // follow the supplied orientation.
    let head_pos = |idx: usize| -> usize {
        let (a, b) = d.slot_pair(idx);
        if d.twist_mask() >> idx & 1 == 1 {
            if cert.slot_in_first_arc(d, a) {
                pos[a]
            } else {
                pos[b]
            }
        } else {
            pos[o.head_slot(d, idx)]
        }
    };
    let tail_pos = |idx: usize| -> usize {
        let (a, b) = d.slot_pair(idx);
        let h = head_pos(idx);
        if pos[a] == h {
            pos[b]
        } else {
            pos[a]
        }
    };
    // Skew part: signed interlacement in the transformed cyclic order.
    let skew_entry = |e: usize, f: usize| -> i128 {
        let (he, te) = (head_pos(e), tail_pos(e));
        let (hf, tf) = (head_pos(f), tail_pos(f));
        let in_arc = |x: usize| (x + m - he) % m < (te + m - he) % m && x != he;
        if in_arc(hf) == in_arc(tf) {
            return 0;
        }
        let mut sign = if in_arc(hf) { 1 } else { -1 };
        if o.reverse_circle {
            sign = -sign;
        }
        sign
    };
    let mut entries = vec![0i128; n * n];
    for e in 0..n {
        for f in 0..n {
            let et = i128::from(d.twist_mask() >> e & 1);
            let ft = i128::from(d.twist_mask() >> f & 1);
            let a = if e == f { 0 } else { skew_entry(e, f) };
            entries[e * n + f] = a + et * ft;
        }
    }
    IntMatrix::from_entries(d.edges().to_vec(), entries)
}

/// Verdict of an exhaustive detection check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetectionReport {
    pub detects: bool,
    /// `det(I + M)` compared against the quasi-tree count.
    pub det_plus_identity: BigRational,
    pub quasi_tree_count: u64,
    /// First failing subset, if any, as a bitmask over the matrix order.
    pub witness: Option<u64>,
}

/// Checks that `det(m[X]) = 1` exactly when `X` is a quasi-tree of `d` and
/// 0 otherwise, over every subset, and that `det(I + m)` equals the
/// quasi-tree count.
pub fn verify_detection(d: &ChordDiagram, m: &RatMatrix, limit: usize) -> Result<DetectionReport> {
    let n = d.edge_count();
    if n > limit {
        return Err(Error::SizeLimitExceeded {
            requested: n,
            limit,
        });
    }
    // The matrix must be indexed by the diagram's edges (any order).
    if m.dim() != n {
        return Err(Error::IndexMismatch);
    }
    let mut pos = Vec::with_capacity(n);
    for label in m.labels() {
        pos.push(d.edge_index(label).map_err(|_| Error::IndexMismatch)?);
    }
    let one = BigRational::one();
    let mut witness = None;
    let mut qt_count = 0u64;
    for mask in 0..1u64 << n {
        // Translate the matrix-order mask to diagram edge order.
        let dmask = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .fold(0u64, |acc, i| acc | (1 << pos[i]));
        let qt = d.is_quasi_tree_mask(dmask);
        qt_count += u64::from(qt);
        let det = m.det_mask(mask);
        let good = if qt { det == one } else { det.is_zero() };
        if !good && witness.is_none() {
            witness = Some(mask);
        }
    }
    let det_plus = m.plus_identity().det_full();
    let count_ok = det_plus == BigRational::from(BigInt::from(qt_count));
    Ok(DetectionReport {
        detects: witness.is_none() && count_ok,
        det_plus_identity: det_plus,
        quasi_tree_count: qt_count,
        witness,
    })
}

/// Integer-matrix convenience wrapper for [`verify_detection`].
pub fn verify_detection_int(
    d: &ChordDiagram,
    m: &IntMatrix,
    limit: usize,
) -> Result<DetectionReport> {
    verify_detection(d, &RatMatrix::from_int(m), limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(word: &str, twisted: &str) -> ChordDiagram {
        ChordDiagram::from_tokens(word.split_whitespace(), twisted.split_whitespace()).unwrap()
    }

    fn intro() -> ChordDiagram {
        diagram("2 1 2 3 1 3", "1")
    }

    #[test]
    fn m2_of_intro_bouquet() {
        let m = m2(&intro());
        // edge order: 2, 1, 3
        let expect = [
            [0, 1, 0], // 2: untwisted, interlaces 1
            [1, 1, 1], // 1: twisted, interlaces 2 and 3
            [0, 1, 0],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.entry(i, j), expect[i][j], "({i},{j})");
            }
        }
    }

    #[test]
    fn m2_of_empty_diagram() {
        let d = diagram("", "");
        assert_eq!(m2(&d).dim(), 0);
    }

    #[test]
    fn m2_represents_quasi_trees() {
        let d = intro();
        let sys = m2(&d).represented_system(16).unwrap();
        assert!(sys.same_family(
            &crate::dual::AnchoredRibbon::bouquet(d)
                .delta_matroid()
                .unwrap()
        ));
    }

    #[test]
    fn hat_of_one_by_one() {
        let m = Gf2Matrix::new(vec![EdgeLabel::numeric(1)], vec![vec![1]]).unwrap();
        let h = hat_matrix(&m, EdgeLabel::numeric(2)).unwrap();
        assert_eq!(h.entry(0, 0), 0);
        assert_eq!(h.entry(0, 1), 1);
        assert_eq!(h.entry(1, 0), 1);
        assert_eq!(h.entry(1, 1), 0);
    }

    #[test]
    fn hat_represents_the_lift() {
        let d = intro();
        let m = m2(&d);
        let hat = EdgeLabel::new("ehat").unwrap();
        let h = hat_matrix(&m, hat.clone()).unwrap();
        let lifted = m.represented_system(16).unwrap().lift(hat).unwrap();
        assert!(h
            .represented_system(16)
            .unwrap()
            .same_family(lifted.inner()));
    }

    #[test]
    fn hat_requires_symmetry() {
        let m = Gf2Matrix::new(
            vec![EdgeLabel::numeric(1), EdgeLabel::numeric(2)],
            vec![vec![0, 1], vec![0, 0]],
        )
        .unwrap();
        assert!(matches!(
            hat_matrix(&m, EdgeLabel::numeric(3)),
            Err(Error::NotSymmetric)
        ));
    }

    #[test]
    fn mpm_of_interlaced_pair() {
        let d = diagram("1 2 1 2", "");
        let m = mpm(&d, &Orientation::canonical(&d)).unwrap();
        assert_eq!(m.entry(0, 1), 1);
        assert_eq!(m.entry(1, 0), -1);
        assert_eq!(
            m.det(&[EdgeLabel::numeric(1), EdgeLabel::numeric(2)])
                .unwrap(),
            BigInt::one()
        );
    }

    #[test]
    fn mpm_of_nested_pair_is_zero() {
        let d = diagram("1 1 2 2", "");
        let m = mpm(&d, &Orientation::canonical(&d)).unwrap();
        assert!(m.rows().iter().flatten().all(|&v| v == 0));
    }

    #[test]
    fn mpm_requires_orientable() {
        let d = intro();
        assert!(matches!(
            mpm(&d, &Orientation::canonical(&d)),
            Err(Error::NotOrientable)
        ));
    }

    #[test]
    fn mpm_detects_quasi_trees() {
        let d = diagram("1 2 1 3 2 4 3 4", "");
        let m = mpm(&d, &Orientation::canonical(&d)).unwrap();
        let report = verify_detection_int(&d, &m, 16).unwrap();
        assert!(report.detects, "witness: {:?}", report.witness);
        assert!(m.is_pu(16).unwrap());
    }

    #[test]
    fn orientation_choice_preserves_principal_minors() {
        let d = diagram("1 2 1 3 2 4 3 4", "");
        let a = mpm(&d, &Orientation::canonical(&d)).unwrap();
        let mut heads = BTreeMap::new();
        let (_, snd) = d.slots_of(&EdgeLabel::numeric(2)).unwrap();
        heads.insert(EdgeLabel::numeric(2), snd);
        let o2 = Orientation::from_head_slots(&d, &heads, true).unwrap();
        let b = mpm(&d, &o2).unwrap();
        for mask in 0..1u64 << 4 {
            assert_eq!(a.det_mask(mask), b.det_mask(mask), "mask {mask:b}");
        }
    }

    #[test]
    fn binary_matrix_read_as_integers_fails_detection() {
        let d = crate::corpus::make_cn(5).unwrap();
        let m = m2(&d).to_int();
        let report = verify_detection_int(&d, &m, 16).unwrap();
        assert!(!report.detects);
    }

    #[test]
    fn adjusted_matrix_of_intro_bouquet_matches_published_form() {
        let d = intro();
        let cert = crate::pseudo::find_certificate(&d).unwrap();
        let mut heads = BTreeMap::new();
        for lab in ["2", "3"] {
            let e = EdgeLabel::new(lab).unwrap();
            let (_, snd) = d.slots_of(&e).unwrap();
            heads.insert(e, snd);
        }
        let o = Orientation::from_head_slots(&d, &heads, false).unwrap();
        let m = adjusted_matrix(&d, &cert, &o).unwrap();
        let order: Vec<EdgeLabel> = (1..=3).map(EdgeLabel::numeric).collect();
        let m = m.permuted(&order).unwrap();
        assert_eq!(
            m.rows(),
            vec![vec![1, 1, 1], vec![-1, 0, 0], vec![-1, 0, 0]]
        );
        assert_eq!(m.plus_identity().det_full(), BigInt::from(4));
        let report = verify_detection_int(&d, &m, 16).unwrap();
        assert!(report.detects);
    }

    #[test]
    fn adjusted_matrices_of_six_loop_fixture() {
        let d = crate::corpus::fixture("ex316").unwrap();
        let (s, t) = crate::corpus::ex316_certificates();
        let o = Orientation::canonical(&d);
        let order: Vec<EdgeLabel> = (1..=6).map(EdgeLabel::numeric).collect();
        let ms = adjusted_matrix(&d, &s, &o)
            .unwrap()
            .permuted(&order)
            .unwrap();
        let mt = adjusted_matrix(&d, &t, &o)
            .unwrap()
            .permuted(&order)
            .unwrap();
        assert_eq!(
            ms.rows(),
            vec![
                vec![0, 1, 0, 0, 0, 0],
                vec![-1, 1, 2, 0, 1, 1],
                vec![0, 0, 1, 0, 1, 1],
                vec![0, 0, 0, 0, 1, 0],
                vec![0, 1, 1, -1, 1, 2],
                vec![0, 1, 1, 0, 0, 1],
            ]
        );
        assert_eq!(
            mt.rows(),
            vec![
                vec![0, 1, 0, 0, 0, 0],
                vec![-1, 1, 2, 0, 1, 1],
                vec![0, 0, 1, 0, 1, 1],
                vec![0, 0, 0, 0, 1, 0],
                vec![0, 1, 1, -1, 1, 0],
                vec![0, 1, 1, 0, 2, 1],
            ]
        );
        for m in [&ms, &mt] {
            assert_eq!(m.plus_identity().det_full(), BigInt::from(27));
            assert!(m.is_pu(16).unwrap());
            assert!(verify_detection_int(&d, m, 16).unwrap().detects);
        }
        let snf_s = ms.plus_identity().smith_normal_form().diagonal;
        let snf_t = mt.plus_identity().smith_normal_form().diagonal;
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(snf_s, ints(&[1, 1, 1, 1, 3, 9]));
        assert_eq!(snf_t, ints(&[1, 1, 1, 1, 1, 27]));
    }
}
