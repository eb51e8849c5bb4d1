//! Signed chord diagrams (bouquets).
//!
//! A bouquet with `n` loops is encoded as a double-occurrence word of length
//! `2n` read clockwise around the vertex-disc boundary, plus the set of
//! twisted (non-orientable) loops. The word is cyclic; slot `0` is a stored
//! start position used for canonical serialization. All geometric operations
//! work on slot indices `0..2n`.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::exactla::gf2::Gf2Matrix;
use crate::{Result, DEFAULT_ENUM_LIMIT};

/// An edge name: a nonempty token without whitespace, unique per diagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeLabel(String);

impl EdgeLabel {
    pub fn new(token: impl Into<String>) -> Result<Self> {
        let token = token.into();
        if token.is_empty() || token.chars().any(char::is_whitespace) {
            return Err(Error::InvalidLabel(token));
        }
        Ok(EdgeLabel(token))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Numeric labels `1..=n`, as used by the built-in families.
    pub fn numeric(i: usize) -> Self {
        EdgeLabel(i.to_string())
    }
}

impl core::fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.0)
    }
}

impl core::str::FromStr for EdgeLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        EdgeLabel::new(s)
    }
}

/// One directed arc of the vertex-boundary circle, between two consecutive
/// chord ends of the traced spanning sub-bouquet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DirectedArc {
    /// Arc index in circular order of the traced subset's slots.
    pub arc: usize,
    /// `true` when traversed in word direction.
    pub forward: bool,
}

/// Outcome of a boundary-component trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryReport {
    pub component_count: usize,
    /// Partition of all directed arcs into closed walks; two walks per
    /// boundary component, one per traversal direction.
    pub directed_cycles: Vec<Vec<DirectedArc>>,
}

/// A bouquet as a signed chord diagram.
///
/// Immutable after construction; all operations return new values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordDiagram {
    word: Vec<EdgeLabel>,
    /// Edges in first-occurrence order; this is the canonical index order
    /// used by matrices and set systems derived from the diagram.
    edges: Vec<EdgeLabel>,
    /// Per edge index, its two slots in increasing order.
    slot_pairs: Vec<(usize, usize)>,
    /// Per slot, the index of its edge.
    slot_edge: Vec<usize>,
    /// Bit `i` set when `edges[i]` is twisted.
    twist_mask: u64,
}

impl ChordDiagram {
    /// Builds a diagram from a double-occurrence word and a twist set.
    pub fn new<I, T>(word: I, twisted: T) -> Result<Self>
    where
        I: IntoIterator<Item = EdgeLabel>,
        T: IntoIterator<Item = EdgeLabel>,
    {
        let word: Vec<EdgeLabel> = word.into_iter().collect();
        let mut edges: Vec<EdgeLabel> = Vec::new();
        let mut slot_edge = Vec::with_capacity(word.len());
        let mut slots: Vec<Vec<usize>> = Vec::new();
        for (slot, label) in word.iter().enumerate() {
            let idx = match edges.iter().position(|e| e == label) {
                Some(i) => i,
                None => {
                    edges.push(label.clone());
                    slots.push(Vec::new());
                    edges.len() - 1
                }
            };
            slots[idx].push(slot);
            slot_edge.push(idx);
        }
        if edges.len() > 64 {
            return Err(Error::SizeLimitExceeded {
                requested: edges.len(),
                limit: 64,
            });
        }
        let mut slot_pairs = Vec::with_capacity(edges.len());
        for (idx, s) in slots.iter().enumerate() {
            if s.len() != 2 {
                return Err(Error::MalformedWord(
                    edges[idx].as_str().to_string(),
                    s.len(),
                ));
            }
            slot_pairs.push((s[0], s[1]));
        }
        let mut twist_mask = 0u64;
        for t in twisted {
            let idx = edges
                .iter()
                .position(|e| *e == t)
                .ok_or_else(|| Error::UnknownTwistLabel(t.as_str().to_string()))?;
            twist_mask |= 1 << idx;
        }
        Ok(ChordDiagram {
            word,
            edges,
            slot_pairs,
            slot_edge,
            twist_mask,
        })
    }

    /// Convenience constructor from string tokens.
    pub fn from_tokens<'a, I, T>(word: I, twisted: T) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
        T: IntoIterator<Item = &'a str>,
    {
        let w: Result<Vec<_>> = word.into_iter().map(EdgeLabel::new).collect();
        let t: Result<Vec<_>> = twisted.into_iter().map(EdgeLabel::new).collect();
        ChordDiagram::new(w?, t?)
    }

    /// Number of loops.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of word slots (`2n`).
    pub fn slot_count(&self) -> usize {
        self.word.len()
    }

    /// Edge labels in first-occurrence order.
    pub fn edges(&self) -> &[EdgeLabel] {
        &self.edges
    }

    /// The stored word, starting at the canonical start slot.
    pub fn word(&self) -> &[EdgeLabel] {
        &self.word
    }

    pub fn twisted(&self) -> BTreeSet<EdgeLabel> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(i, _)| self.twist_mask >> i & 1 == 1)
            .map(|(_, e)| e.clone())
            .collect()
    }

    pub fn contains(&self, e: &EdgeLabel) -> bool {
        self.edges.iter().any(|x| x == e)
    }

    /// Index of `e` in first-occurrence order.
    pub fn edge_index(&self, e: &EdgeLabel) -> Result<usize> {
        self.edges
            .iter()
            .position(|x| x == e)
            .ok_or_else(|| Error::UnknownEdge(e.as_str().to_string()))
    }

    /// The two slots of `e`, in increasing order.
    pub fn slots_of(&self, e: &EdgeLabel) -> Result<(usize, usize)> {
        Ok(self.slot_pairs[self.edge_index(e)?])
    }

    /// Edge occupying the given slot.
    pub fn edge_at_slot(&self, slot: usize) -> &EdgeLabel {
        &self.edges[self.slot_edge[slot]]
    }

    pub fn is_twisted(&self, e: &EdgeLabel) -> Result<bool> {
        Ok(self.twist_mask >> self.edge_index(e)? & 1 == 1)
    }

    pub(crate) fn twist_mask(&self) -> u64 {
        self.twist_mask
    }

    pub(crate) fn slot_pair(&self, idx: usize) -> (usize, usize) {
        self.slot_pairs[idx]
    }

    /// Converts a label slice to an internal bitmask, rejecting unknowns.
    pub(crate) fn mask_of(&self, subset: &[EdgeLabel]) -> Result<u64> {
        let mut mask = 0u64;
        for e in subset {
            mask |= 1 << self.edge_index(e)?;
        }
        Ok(mask)
    }

    pub(crate) fn labels_of_mask(&self, mask: u64) -> Vec<EdgeLabel> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e.clone())
            .collect()
    }

    /// Whether chords `e` and `f` interlace: exactly one end of `f` lies
    /// strictly inside one of the two arcs cut out by the ends of `e`.
    pub fn interlace(&self, e: &EdgeLabel, f: &EdgeLabel) -> Result<bool> {
        let ie = self.edge_index(e)?;
        let jf = self.edge_index(f)?;
        Ok(self.interlace_idx(ie, jf))
    }

    pub(crate) fn interlace_idx(&self, i: usize, j: usize) -> bool {
        if i == j {
            return false;
        }
        let (a, b) = self.slot_pairs[i];
        let (c, d) = self.slot_pairs[j];
        (a < c && c < b) != (a < d && d < b)
    }

    /// Whether the bouquet is orientable, i.e. has no twisted loop.
    pub fn is_orientable(&self) -> bool {
        self.twist_mask == 0
    }

    /// The partial Petrial: toggles the twist flag of every edge in `subset`.
    pub fn petrial(&self, subset: &[EdgeLabel]) -> Result<ChordDiagram> {
        let mask = self.mask_of(subset)?;
        let mut out = self.clone();
        out.twist_mask ^= mask;
        Ok(out)
    }

    /// Traces the boundary walks of the spanning sub-bouquet on `subset`.
    ///
    /// The chord ends of `subset` split the circle into arcs. A walk
    /// traverses arcs with a direction; on reaching a chord end it jumps to
    /// the chord's other end, keeping direction for an untwisted chord and
    /// reversing it for a twisted one. Every directed arc lies on exactly
    /// one closed walk, and each boundary component is traced twice, once
    /// per direction.
    pub fn boundary_components(&self, subset: &[EdgeLabel]) -> Result<BoundaryReport> {
        let mask = self.mask_of(subset)?;
        Ok(self.boundary_components_mask(mask))
    }

    pub(crate) fn boundary_components_mask(&self, mask: u64) -> BoundaryReport {
        let slots: Vec<usize> = (0..self.word.len())
            .filter(|&s| mask >> self.slot_edge[s] & 1 == 1)
            .collect();
        let k = slots.len();
        if k == 0 {
            // The untouched circle: one component, traced once per direction.
            return BoundaryReport {
                component_count: 1,
                directed_cycles: vec![
                    vec![DirectedArc {
                        arc: 0,
                        forward: true,
                    }],
                    vec![DirectedArc {
                        arc: 0,
                        forward: false,
                    }],
                ],
            };
        }
        let mut pos_of_slot = vec![usize::MAX; self.word.len()];
        for (i, &s) in slots.iter().enumerate() {
            pos_of_slot[s] = i;
        }
        let partner = |s: usize| -> usize {
            let (a, b) = self.slot_pairs[self.slot_edge[s]];
            if s == a {
                b
            } else {
                a
            }
        };
        // Arc `i` runs from slots[i] to slots[(i+1)%k] in word direction.
        // State: (arc, forward). Forward traversal ends at slots[(i+1)%k],
        // backward at slots[i].
        let step = |arc: usize, forward: bool| -> (usize, bool) {
            let s = if forward {
                slots[(arc + 1) % k]
            } else {
                slots[arc]
            };
            let twisted = self.twist_mask >> self.slot_edge[s] & 1 == 1;
            let p = pos_of_slot[partner(s)];
            match (forward, twisted) {
                (true, false) => (p, true),
                (true, true) => ((p + k - 1) % k, false),
                (false, false) => ((p + k - 1) % k, false),
                (false, true) => (p, true),
            }
        };
        let mut seen = vec![false; 2 * k];
        let state_id = |arc: usize, forward: bool| arc * 2 + usize::from(forward);
        let mut cycles = Vec::new();
        for arc0 in 0..k {
            for forward0 in [true, false] {
                if seen[state_id(arc0, forward0)] {
                    continue;
                }
                let mut cycle = Vec::new();
                let (mut arc, mut forward) = (arc0, forward0);
                while !seen[state_id(arc, forward)] {
                    seen[state_id(arc, forward)] = true;
                    cycle.push(DirectedArc { arc, forward });
                    let next = step(arc, forward);
                    arc = next.0;
                    forward = next.1;
                }
                cycles.push(cycle);
            }
        }
        debug_assert_eq!(cycles.len() % 2, 0);
        BoundaryReport {
            component_count: cycles.len() / 2,
            directed_cycles: cycles,
        }
    }

    /// Whether `subset` spans a quasi-tree (exactly one boundary component).
    ///
    /// Decided through the GF(2) rank of the binary interlacing submatrix;
    /// [`ChordDiagram::boundary_components`] is the independent geometric
    /// route and the two must agree.
    pub fn is_quasi_tree(&self, subset: &[EdgeLabel]) -> Result<bool> {
        let mask = self.mask_of(subset)?;
        Ok(self.is_quasi_tree_mask(mask))
    }

    pub(crate) fn is_quasi_tree_mask(&self, mask: u64) -> bool {
        self.m2_rows().nonsingular(mask)
    }

    pub(crate) fn m2_rows(&self) -> Gf2Matrix {
        let n = self.edges.len();
        let mut rows = vec![0u64; n];
        for i in 0..n {
            if self.twist_mask >> i & 1 == 1 {
                rows[i] |= 1 << i;
            }
            for j in i + 1..n {
                if self.interlace_idx(i, j) {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
        }
        Gf2Matrix::from_rows(self.edges.clone(), rows)
    }

    /// All quasi-trees, as bitmasks over [`ChordDiagram::edges`] order.
    pub fn quasi_tree_masks(&self) -> Result<Vec<u64>> {
        self.quasi_tree_masks_with_limit(DEFAULT_ENUM_LIMIT)
    }

    pub fn quasi_tree_masks_with_limit(&self, limit: usize) -> Result<Vec<u64>> {
        let n = self.edges.len();
        if n > limit {
            return Err(Error::SizeLimitExceeded {
                requested: n,
                limit,
            });
        }
        let m2 = self.m2_rows();
        Ok((0..1u64 << n).filter(|&m| m2.nonsingular(m)).collect())
    }

    /// All quasi-trees as label sets.
    pub fn quasi_trees(&self) -> Result<Vec<BTreeSet<EdgeLabel>>> {
        Ok(self
            .quasi_tree_masks()?
            .into_iter()
            .map(|m| self.labels_of_mask(m).into_iter().collect())
            .collect())
    }

    /// Canonical form of the diagram.
    ///
    /// With `labeled` the word is minimized over rotations and reflection
    /// while keeping labels; otherwise edges are additionally relabeled
    /// `1, 2, ...` by first occurrence, minimizing over all readings.
    pub fn canonicalize(&self, labeled: bool) -> ChordDiagram {
        if self.word.is_empty() {
            return self.clone();
        }
        if labeled {
            self.canonicalize_labeled()
        } else {
            self.canonicalize_unlabeled()
        }
    }

    fn readings(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        // Every rotation of the word, in both directions, as slot orders.
        let m = self.word.len();
        (0..m).flat_map(move |start| {
            let fwd: Vec<usize> = (0..m).map(|i| (start + i) % m).collect();
            let rev: Vec<usize> = (0..m).map(|i| (start + m - i % m) % m).collect();
            [fwd, rev]
        })
    }

    fn canonicalize_labeled(&self) -> ChordDiagram {
        let best = self
            .readings()
            .map(|order| {
                order
                    .iter()
                    .map(|&s| self.word[s].clone())
                    .collect::<Vec<_>>()
            })
            .min()
            .expect("nonempty word");
        ChordDiagram::new(best, self.twisted()).expect("canonical reading is valid")
    }

    fn canonicalize_unlabeled(&self) -> ChordDiagram {
        let m = self.word.len();
        let mut best: Option<(Vec<usize>, Vec<bool>)> = None;
        for order in self.readings() {
            // Relabel by first occurrence along this reading.
            let mut new_index = vec![usize::MAX; self.edges.len()];
            let mut next = 0usize;
            let mut relabeled = Vec::with_capacity(m);
            for &s in &order {
                let old = self.slot_edge[s];
                if new_index[old] == usize::MAX {
                    new_index[old] = next;
                    next += 1;
                }
                relabeled.push(new_index[old]);
            }
            let mut twists = vec![false; self.edges.len()];
            for (old, &ni) in new_index.iter().enumerate() {
                twists[ni] = self.twist_mask >> old & 1 == 1;
            }
            let cand = (relabeled, twists);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        let (relabeled, twists) = best.expect("nonempty word");
        let word: Vec<EdgeLabel> = relabeled
            .iter()
            .map(|&i| EdgeLabel::numeric(i + 1))
            .collect();
        let twisted: Vec<EdgeLabel> = twists
            .iter()
            .enumerate()
            .filter(|(_, &t)| t)
            .map(|(i, _)| EdgeLabel::numeric(i + 1))
            .collect();
        ChordDiagram::new(word, twisted).expect("canonical relabeling is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(word: &str, twisted: &str) -> ChordDiagram {
        ChordDiagram::from_tokens(word.split_whitespace(), twisted.split_whitespace()).unwrap()
    }

    /// Three loops: `1` twisted and interlacing both `2` and `3`, which do
    /// not interlace each other.
    fn intro_bouquet() -> ChordDiagram {
        diagram("2 1 2 3 1 3", "1")
    }

    #[test]
    fn double_occurrence_enforced() {
        let err = ChordDiagram::from_tokens(["1", "2", "1"], []).unwrap_err();
        assert!(matches!(err, Error::MalformedWord(e, 1) if e == "2"));
    }

    #[test]
    fn unknown_twist_label_rejected() {
        let err = ChordDiagram::from_tokens(["1", "1"], ["9"]).unwrap_err();
        assert!(matches!(err, Error::UnknownTwistLabel(e) if e == "9"));
    }

    #[test]
    fn empty_diagram_allowed() {
        let d = ChordDiagram::from_tokens([], []).unwrap();
        assert_eq!(d.edge_count(), 0);
        assert_eq!(d.quasi_tree_masks().unwrap(), vec![0]);
    }

    #[test]
    fn interlacement_of_intro_bouquet() {
        let d = intro_bouquet();
        let e = |s: &str| EdgeLabel::new(s).unwrap();
        assert!(d.interlace(&e("1"), &e("2")).unwrap());
        assert!(d.interlace(&e("1"), &e("3")).unwrap());
        assert!(!d.interlace(&e("2"), &e("3")).unwrap());
        assert!(!d.interlace(&e("2"), &e("2")).unwrap());
    }

    #[test]
    fn disjoint_chords_do_not_interlace() {
        let d = diagram("1 1 2 2", "");
        let e = |s: &str| EdgeLabel::new(s).unwrap();
        assert!(!d.interlace(&e("1"), &e("2")).unwrap());
    }

    #[test]
    fn single_chord_boundary_counts() {
        let ann = diagram("e e", "");
        let e = EdgeLabel::new("e").unwrap();
        assert_eq!(
            ann.boundary_components(core::slice::from_ref(&e))
                .unwrap()
                .component_count,
            2
        );
        let moebius = diagram("e e", "e");
        assert_eq!(
            moebius.boundary_components(&[e]).unwrap().component_count,
            1
        );
    }

    #[test]
    fn torus_with_hole_has_one_boundary() {
        let d = diagram("1 2 1 2", "");
        let x: Vec<_> = d.edges().to_vec();
        assert_eq!(d.boundary_components(&x).unwrap().component_count, 1);
    }

    #[test]
    fn empty_subset_is_a_disc() {
        let d = intro_bouquet();
        let report = d.boundary_components(&[]).unwrap();
        assert_eq!(report.component_count, 1);
        assert_eq!(report.directed_cycles.len(), 2);
        assert!(d.is_quasi_tree(&[]).unwrap());
    }

    #[test]
    fn intro_bouquet_quasi_trees() {
        let d = intro_bouquet();
        let mut qts: Vec<Vec<String>> = d
            .quasi_trees()
            .unwrap()
            .into_iter()
            .map(|s| s.iter().map(|e| e.as_str().to_string()).collect())
            .collect();
        qts.sort();
        let expect: Vec<Vec<String>> = [vec![], vec!["1"], vec!["1", "2"], vec!["1", "3"]]
            .into_iter()
            .map(|v: Vec<&str>| v.into_iter().map(String::from).collect())
            .collect();
        let mut expect = expect;
        expect.sort();
        assert_eq!(qts, expect);
    }

    #[test]
    fn petrial_is_an_involution_and_keeps_word() {
        let d = intro_bouquet();
        let x: Vec<_> = d.edges()[..2].to_vec();
        let p = d.petrial(&x).unwrap();
        assert_eq!(p.word(), d.word());
        assert_eq!(p.petrial(&x).unwrap(), d);
    }

    #[test]
    fn petrial_toggles_orientability() {
        let d = diagram("e e", "");
        assert!(d.is_orientable());
        let e = EdgeLabel::new("e").unwrap();
        let p = d.petrial(core::slice::from_ref(&e)).unwrap();
        assert!(!p.is_orientable());
        assert!(p.is_twisted(&e).unwrap());
    }

    #[test]
    fn canonicalize_relabels_by_first_occurrence() {
        let d = diagram("2 1 2 1", "");
        let c = d.canonicalize(false);
        let tokens: Vec<_> = c.word().iter().map(|e| e.as_str()).collect();
        assert_eq!(tokens, ["1", "2", "1", "2"]);
    }

    #[test]
    fn canonicalize_is_idempotent() {
        for labeled in [true, false] {
            let c = intro_bouquet().canonicalize(labeled);
            assert_eq!(c.canonicalize(labeled), c);
        }
    }

    #[test]
    fn reflection_and_rotation_share_canonical_form() {
        let d = diagram("1 2 3 1 2 3", "2");
        let rotated = diagram("2 3 1 2 3 1", "2");
        let reflected = diagram("3 2 1 3 2 1", "2");
        assert_eq!(d.canonicalize(false), rotated.canonicalize(false),);
        assert_eq!(d.canonicalize(false), reflected.canonicalize(false),);
    }
}
