//! Pseudo-orientability: certificate search, the adjustment operation, and
//! the lift correspondence.
//!
//! A certificate splits the vertex-boundary circle into two closed arcs so
//! that every untwisted chord has both ends inside one arc and every
//! twisted chord has one end inside each. Cutting along the second arc,
//! regluing with a half-twist, and adding a fresh chord across the cuts
//! produces an orientable bouquet whose delta-matroid is the parity lift
//! of the original one.

use alloc::string::String;
use alloc::vec::Vec;

use crate::chord::{ChordDiagram, EdgeLabel};
use crate::delta;
use crate::dual::AnchoredRibbon;
use crate::error::Error;
use crate::Result;

/// A certificate of pseudo-orientability: two cut gaps on the circle.
///
/// Gap `g` sits immediately before slot `g`. The first arc holds the slots
/// `cut_a, cut_a+1, ..., cut_b-1` cyclically; the second arc holds the
/// rest. `cut_a = cut_b` is the degenerate split whose second arc has
/// empty interior, which certifies exactly the fully orientable bouquets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Certificate {
    pub cut_a: usize,
    pub cut_b: usize,
}

impl Certificate {
    pub fn new(cut_a: usize, cut_b: usize) -> Certificate {
        Certificate { cut_a, cut_b }
    }

    /// Whether `slot` lies in the first arc.
    pub fn slot_in_first_arc(&self, d: &ChordDiagram, slot: usize) -> bool {
        let m = d.slot_count();
        if self.cut_a == self.cut_b {
            return true;
        }
        (slot + m - self.cut_a) % m < (self.cut_b + m - self.cut_a) % m
    }

    /// Checks the defining conditions against a diagram.
    pub fn validate(&self, d: &ChordDiagram) -> Result<()> {
        let m = d.slot_count();
        if m == 0 {
            return if d.edge_count() == 0 {
                Ok(())
            } else {
                Err(Error::InvalidCertificate("cuts out of range".into()))
            };
        }
        if self.cut_a >= m || self.cut_b >= m {
            return Err(Error::InvalidCertificate("cuts out of range".into()));
        }
        for idx in 0..d.edge_count() {
            let (a, b) = d.slot_pair(idx);
            let (ia, ib) = (self.slot_in_first_arc(d, a), self.slot_in_first_arc(d, b));
            let twisted = d.twist_mask() >> idx & 1 == 1;
            if twisted && ia == ib {
                return Err(Error::InvalidCertificate(alloc::format!(
                    "twisted chord `{}` is not split by the cuts",
                    d.edges()[idx]
                )));
            }
            if !twisted && ia != ib {
                return Err(Error::InvalidCertificate(alloc::format!(
                    "untwisted chord `{}` is split by the cuts",
                    d.edges()[idx]
                )));
            }
        }
        Ok(())
    }

    /// The set of slots in each arc, first arc first.
    pub fn end_partition(&self, d: &ChordDiagram) -> (Vec<usize>, Vec<usize>) {
        let mut first = Vec::new();
        let mut second = Vec::new();
        for s in 0..d.slot_count() {
            if self.slot_in_first_arc(d, s) {
                first.push(s);
            } else {
                second.push(s);
            }
        }
        (first, second)
    }
}

/// Scans all cut pairs in lexicographic order, including the degenerate
/// same-gap splits, and returns the first valid certificate.
pub fn find_certificate(d: &ChordDiagram) -> Option<Certificate> {
    let m = d.slot_count();
    if m == 0 {
        return Some(Certificate::new(0, 0));
    }
    for cut_a in 0..m {
        for cut_b in 0..m {
            let cert = Certificate::new(cut_a, cut_b);
            if cert.validate(d).is_ok() {
                return Some(cert);
            }
        }
    }
    None
}

/// Every valid certificate, in scan order. Equivalent certificates (same
/// end partition) are not deduplicated.
pub fn all_certificates(d: &ChordDiagram) -> Vec<Certificate> {
    let m = d.slot_count();
    if m == 0 {
        return alloc::vec![Certificate::new(0, 0)];
    }
    let mut out = Vec::new();
    for cut_a in 0..m {
        for cut_b in 0..m {
            let cert = Certificate::new(cut_a, cut_b);
            if cert.validate(d).is_ok() {
                out.push(cert);
            }
        }
    }
    out
}

/// The adjustment of a pseudo-orientable bouquet at a certificate.
///
/// Reverses the slots of the second arc, clears every twist flag, and
/// inserts the fresh chord `hat_label` with one end at each cut. The
/// result is orientable, has one more chord, and its delta-matroid is the
/// parity lift of the input's.
pub fn adjust(d: &ChordDiagram, cert: &Certificate, hat_label: EdgeLabel) -> Result<ChordDiagram> {
    cert.validate(d)?;
    if d.contains(&hat_label) {
        return Err(Error::LabelClash(hat_label.as_str().into()));
    }
    let m = d.slot_count();
    let mut word: Vec<EdgeLabel> = Vec::with_capacity(m + 2);
    word.push(hat_label.clone());
    if m > 0 {
        let len1 = if cert.cut_a == cert.cut_b {
            m
        } else {
            (cert.cut_b + m - cert.cut_a) % m
        };
        for i in 0..len1 {
            word.push(d.word()[(cert.cut_a + i) % m].clone());
        }
        word.push(hat_label);
        for i in 0..m - len1 {
            word.push(d.word()[(cert.cut_a + m - 1 - i) % m].clone());
        }
    } else {
        word.push(hat_label);
    }
    ChordDiagram::new(word, [])
}

/// Report of a pseudo-orientability test on an anchored ribbon graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoReport {
    pub pseudo: bool,
    pub certificate: Option<Certificate>,
    pub anchor_used: Vec<EdgeLabel>,
    pub adjusted: Option<AnchoredRibbon>,
}

/// The adjustment of an anchored ribbon graph.
///
/// The base is adjusted at the certificate; the anchor picks up the fresh
/// chord exactly when its size is odd, so that the represented
/// delta-matroid is the parity lift of the input's.
pub fn adjust_anchored(
    g: &AnchoredRibbon,
    cert: &Certificate,
    hat_label: EdgeLabel,
) -> Result<AnchoredRibbon> {
    let base = adjust(g.base(), cert, hat_label.clone())?;
    let mut anchor = g.anchor_vec();
    if anchor.len() % 2 == 1 {
        anchor.push(hat_label);
    }
    AnchoredRibbon::new(base, anchor)
}

/// Tests pseudo-orientability of the represented ribbon graph.
///
/// By minor closure, a single bouquet presentation decides the question:
/// the certificate scan runs on the base only. When a certificate exists
/// the report carries the adjusted presentation, with the fresh chord
/// named by the smallest free numeric label.
pub fn is_pseudo_orientable(g: &AnchoredRibbon) -> PseudoReport {
    let certificate = find_certificate(g.base());
    let adjusted = certificate.as_ref().map(|c| {
        let hat = delta::fresh_label(g.base().edges());
        adjust_anchored(g, c, hat).expect("certificate was just validated")
    });
    PseudoReport {
        pseudo: certificate.is_some(),
        certificate,
        anchor_used: g.anchor_vec(),
        adjusted,
    }
}

/// Fresh numeric hat label for a diagram.
pub fn fresh_hat_label(d: &ChordDiagram) -> EdgeLabel {
    delta::fresh_label(d.edges())
}

/// Checks `D(adjusted) = lift(D(g))` by exhaustive enumeration of both
/// sides, with aligned labels.
pub fn verify_lift_correspondence(g: &AnchoredRibbon, limit: usize) -> Result<bool> {
    let n = g.edges().len();
    if n > limit {
        return Err(Error::SizeLimitExceeded {
            requested: n,
            limit,
        });
    }
    let cert = find_certificate(g.base()).ok_or(Error::NotPseudoOrientable)?;
    let hat = delta::fresh_label(g.base().edges());
    let adjusted = adjust_anchored(g, &cert, hat.clone())?;
    let lhs = adjusted.delta_matroid()?;
    let rhs = g.delta_matroid()?.lift(hat)?;
    Ok(lhs.same_family(rhs.inner()))
}

impl core::fmt::Display for Certificate {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({}, {})", self.cut_a, self.cut_b)
    }
}

/// Formats the two arcs of a certificate as slot lists, for diagnostics.
pub fn describe_certificate(d: &ChordDiagram, cert: &Certificate) -> String {
    let (a, b) = cert.end_partition(d);
    alloc::format!("first arc slots {a:?}, second arc slots {b:?}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::partial_dual;

    fn diagram(word: &str, twisted: &str) -> ChordDiagram {
        ChordDiagram::from_tokens(word.split_whitespace(), twisted.split_whitespace()).unwrap()
    }

    fn label(s: &str) -> EdgeLabel {
        EdgeLabel::new(s).unwrap()
    }

    fn intro() -> ChordDiagram {
        diagram("2 1 2 3 1 3", "1")
    }

    #[test]
    fn intro_bouquet_first_certificate() {
        let cert = find_certificate(&intro()).unwrap();
        assert_eq!((cert.cut_a, cert.cut_b), (0, 3));
    }

    #[test]
    fn fully_orientable_bouquet_gets_degenerate_certificate() {
        let d = diagram("1 2 1 2", "");
        let cert = find_certificate(&d).unwrap();
        assert_eq!((cert.cut_a, cert.cut_b), (0, 0));
    }

    #[test]
    fn empty_diagram_is_pseudo_orientable() {
        let d = diagram("", "");
        assert!(find_certificate(&d).is_some());
    }

    #[test]
    fn certificate_validation_rejects_bad_splits() {
        let d = intro();
        // (0, 2) splits the untwisted chord 2.
        assert!(Certificate::new(0, 2).validate(&d).is_err());
        // (0, 0) leaves the twisted chord 1 unsplit.
        assert!(Certificate::new(0, 0).validate(&d).is_err());
        assert!(Certificate::new(0, 3).validate(&d).is_ok());
    }

    #[test]
    fn adjust_intro_bouquet() {
        let d = intro();
        let cert = find_certificate(&d).unwrap();
        let out = adjust(&d, &cert, label("4")).unwrap();
        assert!(out.is_orientable());
        assert_eq!(out.edge_count(), 4);
        // Quasi-trees of the adjusted bouquet = lift of {∅,1,12,13}.
        let sys = AnchoredRibbon::bouquet(out).delta_matroid().unwrap();
        let expect = crate::delta::SetSystem::new(
            ["1", "2", "3", "4"].map(label).to_vec(),
            [
                alloc::vec![],
                alloc::vec![label("1"), label("4")],
                alloc::vec![label("1"), label("2")],
                alloc::vec![label("1"), label("3")],
            ],
        )
        .unwrap();
        assert!(sys.same_family(&expect));
    }

    #[test]
    fn adjust_single_twisted_chord() {
        let d = diagram("e e", "e");
        let cert = find_certificate(&d).unwrap();
        let out = adjust(&d, &cert, label("h")).unwrap();
        let tokens: Vec<&str> = out.word().iter().map(|e| e.as_str()).collect();
        // An interlaced untwisted pair.
        assert_eq!(tokens, ["h", "e", "h", "e"]);
        assert!(out.is_orientable());
    }

    #[test]
    fn adjust_with_degenerate_certificate_adds_isolated_chord() {
        let d = diagram("1 2 1 2", "");
        let cert = find_certificate(&d).unwrap();
        let out = adjust(&d, &cert, label("h")).unwrap();
        let h = label("h");
        assert!(!out
            .edges()
            .iter()
            .any(|e| out.interlace(e, &h).unwrap_or(false)));
        let lifted = AnchoredRibbon::bouquet(d)
            .delta_matroid()
            .unwrap()
            .lift(h)
            .unwrap();
        let sys = AnchoredRibbon::bouquet(out).delta_matroid().unwrap();
        assert!(sys.same_family(lifted.inner()));
    }

    #[test]
    fn adjust_rejects_label_clash() {
        let d = intro();
        let cert = find_certificate(&d).unwrap();
        assert!(matches!(
            adjust(&d, &cert, label("2")),
            Err(Error::LabelClash(_))
        ));
    }

    #[test]
    fn lift_correspondence_on_intro_bouquet() {
        let g = AnchoredRibbon::bouquet(intro());
        assert!(verify_lift_correspondence(&g, 12).unwrap());
    }

    #[test]
    fn lift_correspondence_with_odd_anchor() {
        let g = AnchoredRibbon::bouquet(intro());
        let h = g.reanchor(&[label("1")]).unwrap();
        assert_eq!(h.anchor_vec(), [label("1")]);
        let report = is_pseudo_orientable(&h);
        assert!(report.pseudo);
        let adjusted = report.adjusted.unwrap();
        assert_eq!(adjusted.anchor().len(), 2);
        assert!(verify_lift_correspondence(&h, 12).unwrap());
    }

    #[test]
    fn certificate_transport_under_elementary_dual() {
        let d = intro();
        let dual = partial_dual(&d, &[label("1")]).unwrap();
        assert!(find_certificate(&dual).is_some());
    }

    #[test]
    fn equivalent_certificates_give_identical_adjustments() {
        let d = diagram("1 2 1 2", "");
        let canon = |x: &ChordDiagram| x.canonicalize(true);
        let certs = all_certificates(&d);
        assert!(certs.len() > 1);
        let h = label("h");
        let (first, second) = certs[0].end_partition(&d);
        for c in &certs {
            let (f2, s2) = c.end_partition(&d);
            let same_partition = (f2 == first && s2 == second) || (f2 == second && s2 == first);
            if same_partition {
                assert_eq!(
                    canon(&adjust(&d, c, h.clone()).unwrap()),
                    canon(&adjust(&d, &certs[0], h.clone()).unwrap())
                );
            }
        }
    }
}
