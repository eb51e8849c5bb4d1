//! Partial duality on bouquets and the anchored presentation of general
//! ribbon graphs.
//!
//! Arbitrary partial duals at quasi-trees are composed from two elementary
//! arc surgeries: the dual at a single twisted chord and the dual at an
//! interlacing pair of untwisted chords. Correctness is pinned by the
//! transfer law `Q(d^X) = { X △ B : B ∈ Q(d) }`.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::chord::{ChordDiagram, EdgeLabel};
use crate::delta::SetSystem;
use crate::error::Error;
use crate::Result;

/// A ribbon graph presented as a partial dual of a bouquet: the pair
/// `(base, anchor)` stands for `base^anchor`, so its quasi-trees are
/// `{ anchor △ B : B ∈ Q(base) }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchoredRibbon {
    base: ChordDiagram,
    anchor: BTreeSet<EdgeLabel>,
}

impl AnchoredRibbon {
    pub fn new(base: ChordDiagram, anchor: impl IntoIterator<Item = EdgeLabel>) -> Result<Self> {
        let anchor: BTreeSet<EdgeLabel> = anchor.into_iter().collect();
        for e in &anchor {
            if !base.contains(e) {
                return Err(Error::UnknownEdge(e.as_str().to_string()));
            }
        }
        Ok(AnchoredRibbon { base, anchor })
    }

    /// A bouquet presented as itself.
    pub fn bouquet(base: ChordDiagram) -> Self {
        AnchoredRibbon {
            base,
            anchor: BTreeSet::new(),
        }
    }

    pub fn base(&self) -> &ChordDiagram {
        &self.base
    }

    pub fn anchor(&self) -> &BTreeSet<EdgeLabel> {
        &self.anchor
    }

    pub fn anchor_vec(&self) -> Vec<EdgeLabel> {
        self.anchor.iter().cloned().collect()
    }

    pub fn edges(&self) -> &[EdgeLabel] {
        self.base.edges()
    }

    /// Quasi-trees of the represented ribbon graph, as bitmasks over the
    /// base's edge order.
    pub fn quasi_tree_masks(&self) -> Result<Vec<u64>> {
        self.quasi_tree_masks_with_limit(crate::DEFAULT_ENUM_LIMIT)
    }

    pub fn quasi_tree_masks_with_limit(&self, limit: usize) -> Result<Vec<u64>> {
        let anchor_mask = self.base.mask_of(&self.anchor_vec())?;
        let mut masks: Vec<u64> = self
            .base
            .quasi_tree_masks_with_limit(limit)?
            .into_iter()
            .map(|m| m ^ anchor_mask)
            .collect();
        masks.sort_unstable();
        Ok(masks)
    }

    /// The delta-matroid of the represented ribbon graph.
    pub fn delta_matroid(&self) -> Result<SetSystem> {
        SetSystem::from_masks(self.base.edges().to_vec(), self.quasi_tree_masks()?)
    }

    pub fn is_quasi_tree(&self, subset: &[EdgeLabel]) -> Result<bool> {
        let m = self.base.mask_of(subset)?;
        let anchor_mask = self.base.mask_of(&self.anchor_vec())?;
        Ok(self.base.is_quasi_tree_mask(m ^ anchor_mask))
    }

    /// Re-presents the same ribbon graph anchored at `subset`.
    ///
    /// Requires `anchor △ subset` to be a quasi-tree of the base, so that
    /// the new base is again a bouquet. The represented delta-matroid is
    /// unchanged.
    pub fn reanchor(&self, subset: &[EdgeLabel]) -> Result<AnchoredRibbon> {
        let x = self.base.mask_of(subset)?;
        let anchor_mask = self.base.mask_of(&self.anchor_vec())?;
        let step = x ^ anchor_mask;
        let new_base = partial_dual_mask(&self.base, step)?;
        AnchoredRibbon::new(new_base, self.base.labels_of_mask(x))
    }

    /// Deletes the edges in `subset` from the base presentation.
    ///
    /// Deletion is only available on un-anchored edges; callers re-anchor
    /// first when needed.
    pub fn delete_edges(&self, subset: &[EdgeLabel]) -> Result<AnchoredRibbon> {
        for e in subset {
            if self.anchor.contains(e) {
                return Err(Error::AnchoredEdgeDeletion(e.as_str().to_string()));
            }
            self.base.edge_index(e)?;
        }
        let drop: BTreeSet<&EdgeLabel> = subset.iter().collect();
        let word: Vec<EdgeLabel> = self
            .base
            .word()
            .iter()
            .filter(|t| !drop.contains(t))
            .cloned()
            .collect();
        let twisted: Vec<EdgeLabel> = self
            .base
            .twisted()
            .into_iter()
            .filter(|t| !drop.contains(t))
            .collect();
        let base = ChordDiagram::new(word, twisted)?;
        AnchoredRibbon::new(base, self.anchor.iter().cloned())
    }
}

/// The partial dual of `d` at a single twisted chord `e`.
///
/// One of the two open arcs between the ends of `e` is reversed in place;
/// every chord with exactly one end inside the reversed arc has its twist
/// flag toggled, while `e` itself stays twisted. Which arc is reversed is
/// normalized to the arc following `e`'s first occurrence; both choices
/// give isomorphic diagrams.
pub fn elementary_dual_twisted(d: &ChordDiagram, e: &EdgeLabel) -> Result<ChordDiagram> {
    if !d.is_twisted(e)? {
        return Err(Error::EdgeNotTwisted(e.as_str().to_string()));
    }
    let (p, q) = d.slots_of(e)?;
    // Reverse the open arc (p, q).
    let m = d.slot_count();
    let mut order: Vec<usize> = (0..m).collect();
    order[p + 1..q].reverse();
    let word: Vec<EdgeLabel> = order.iter().map(|&s| d.word()[s].clone()).collect();
    let mut twisted = d.twisted();
    for idx in 0..d.edge_count() {
        let (a, b) = d.slot_pair(idx);
        let inside = |s: usize| p < s && s < q;
        if inside(a) != inside(b) && d.edges()[idx] != *e {
            let label = &d.edges()[idx];
            if !twisted.remove(label) {
                twisted.insert(label.clone());
            }
        }
    }
    ChordDiagram::new(word, twisted)
}

/// The partial dual of `d` at an interlacing pair of untwisted chords.
///
/// The four ends cut the circle into arcs `T1..T4` in cyclic order; the
/// contents of one opposite pair of arcs are exchanged by order-preserving
/// translation. Twist flags are unchanged.
pub fn elementary_dual_pair(
    d: &ChordDiagram,
    f: &EdgeLabel,
    f2: &EdgeLabel,
) -> Result<ChordDiagram> {
    for e in [f, f2] {
        if d.is_twisted(e)? {
            return Err(Error::EdgeTwisted(e.as_str().to_string()));
        }
    }
    if !d.interlace(f, f2)? {
        return Err(Error::NotInterlacing(
            f.as_str().to_string(),
            f2.as_str().to_string(),
        ));
    }
    let (a, c) = d.slots_of(f)?;
    let (b, dd) = d.slots_of(f2)?;
    let (a, b, c, dd) = if a < b { (a, b, c, dd) } else { (b, a, dd, c) };
    debug_assert!(a < b && b < c && c < dd);
    // word = ..prefix.. a T1 b T2 c T3 d T4tail; swap T1 and T3.
    let word_of = |r: core::ops::Range<usize>| d.word()[r].to_vec();
    let mut word: Vec<EdgeLabel> = d.word()[..a].to_vec();
    word.push(d.word()[a].clone());
    word.extend(word_of(c + 1..dd)); // T3
    word.push(d.word()[b].clone());
    word.extend(word_of(b + 1..c)); // T2
    word.push(d.word()[c].clone());
    word.extend(word_of(a + 1..b)); // T1
    word.push(d.word()[dd].clone());
    word.extend(word_of(dd + 1..d.slot_count()));
    ChordDiagram::new(word, d.twisted())
}

/// The partial dual `d^X` for a quasi-tree `X`, computed by a maximal
/// chain of elementary duals.
///
/// Greedy chain selection: take any twisted chord of the remaining part of
/// `X` (a size-1 step), else an interlacing untwisted pair inside it (a
/// size-2 step). Feasibility of `X` guarantees the chain completes.
pub fn partial_dual(d: &ChordDiagram, subset: &[EdgeLabel]) -> Result<ChordDiagram> {
    partial_dual_mask(d, d.mask_of(subset)?)
}

pub(crate) fn partial_dual_mask(d: &ChordDiagram, mask: u64) -> Result<ChordDiagram> {
    if !d.is_quasi_tree_mask(mask) {
        return Err(Error::NotAQuasiTree);
    }
    let mut current = d.clone();
    let mut remaining: Vec<EdgeLabel> = d.labels_of_mask(mask);
    while !remaining.is_empty() {
        if let Some(pos) = remaining
            .iter()
            .position(|e| current.is_twisted(e).expect("edge present"))
        {
            let e = remaining.swap_remove(pos);
            current = elementary_dual_twisted(&current, &e)?;
            continue;
        }
        let mut pair = None;
        'outer: for i in 0..remaining.len() {
            for j in i + 1..remaining.len() {
                if current
                    .interlace(&remaining[i], &remaining[j])
                    .expect("edges present")
                {
                    pair = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = pair else {
            // Unreachable for feasible X: the exchange axiom always yields
            // a twisted chord or an interlacing untwisted pair.
            return Err(Error::NotAQuasiTree);
        };
        let (f, f2) = (remaining[i].clone(), remaining[j].clone());
        remaining.swap_remove(j);
        remaining.swap_remove(i);
        current = elementary_dual_pair(&current, &f, &f2)?;
    }
    Ok(current)
}
