//! Signed rotation systems and their bouquet presentations.
//!
//! A ribbon graph on several vertices is described by cyclic half-edge
//! rotations plus a twist sign per edge. Choosing a spanning tree `Q` (a
//! quasi-tree of the underlying graph) and walking the single boundary
//! component of `(V, Q)` yields the chord-diagram word of the partial dual
//! at `Q`, so the graph is returned as that bouquet anchored at `Q`.
//!
//! The walk machinery doubles as an independent quasi-tree oracle: a
//! subset is a quasi-tree exactly when its spanning subgraph is connected
//! and has a single boundary walk.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::chord::{ChordDiagram, EdgeLabel};
use crate::dual::AnchoredRibbon;
use crate::error::Error;
use crate::Result;

/// A signed rotation system: cyclic half-edge orders around each vertex,
/// a pairing of half-edges into edges, and a twist sign per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rotations: Vec<Vec<usize>>,
    half_names: Vec<String>,
    partner: Vec<usize>,
    half_edge: Vec<usize>,
    half_vertex: Vec<usize>,
    half_pos: Vec<usize>,
    labels: Vec<EdgeLabel>,
    twisted: Vec<bool>,
}

impl RotationSystem {
    /// Builds and validates a rotation system.
    ///
    /// Every edge names exactly two half-edge tokens; every token must
    /// appear in exactly one vertex rotation and belong to exactly one
    /// edge.
    pub fn new(
        vertices: Vec<Vec<String>>,
        edges: Vec<(EdgeLabel, String, String)>,
        twisted_edges: &[EdgeLabel],
    ) -> Result<RotationSystem> {
        let mut half_names: Vec<String> = Vec::new();
        let mut half_vertex = Vec::new();
        let mut half_pos = Vec::new();
        let mut rotations = Vec::with_capacity(vertices.len());
        let mut by_name: BTreeMap<String, usize> = BTreeMap::new();
        for (v, rot) in vertices.iter().enumerate() {
            let mut ids = Vec::with_capacity(rot.len());
            for (pos, name) in rot.iter().enumerate() {
                if by_name.contains_key(name) {
                    return Err(Error::InvalidRotation(alloc::format!(
                        "half-edge `{name}` listed twice"
                    )));
                }
                let id = half_names.len();
                by_name.insert(name.clone(), id);
                half_names.push(name.clone());
                half_vertex.push(v);
                half_pos.push(pos);
                ids.push(id);
            }
            rotations.push(ids);
        }
        let mut labels = Vec::with_capacity(edges.len());
        let mut partner = vec![usize::MAX; half_names.len()];
        let mut half_edge = vec![usize::MAX; half_names.len()];
        for (idx, (label, a, b)) in edges.iter().enumerate() {
            if labels.contains(label) {
                return Err(Error::LabelClash(label.as_str().to_string()));
            }
            let ia = *by_name.get(a).ok_or_else(|| {
                Error::InvalidRotation(alloc::format!(
                    "edge `{label}` names unknown half-edge `{a}`"
                ))
            })?;
            let ib = *by_name.get(b).ok_or_else(|| {
                Error::InvalidRotation(alloc::format!(
                    "edge `{label}` names unknown half-edge `{b}`"
                ))
            })?;
            if ia == ib {
                return Err(Error::InvalidRotation(alloc::format!(
                    "edge `{label}` uses the same half-edge twice"
                )));
            }
            if half_edge[ia] != usize::MAX || half_edge[ib] != usize::MAX {
                return Err(Error::InvalidRotation(alloc::format!(
                    "half-edge of `{label}` already claimed by another edge"
                )));
            }
            half_edge[ia] = idx;
            half_edge[ib] = idx;
            partner[ia] = ib;
            partner[ib] = ia;
            labels.push(label.clone());
        }
        if let Some(h) = (0..half_names.len()).find(|&h| half_edge[h] == usize::MAX) {
            return Err(Error::InvalidRotation(alloc::format!(
                "half-edge `{}` belongs to no edge",
                half_names[h]
            )));
        }
        let mut twisted = vec![false; labels.len()];
        for t in twisted_edges {
            let idx = labels
                .iter()
                .position(|l| l == t)
                .ok_or_else(|| Error::UnknownTwistLabel(t.as_str().to_string()))?;
            twisted[idx] = true;
        }
        Ok(RotationSystem {
            rotations,
            half_names,
            partner,
            half_edge,
            half_vertex,
            half_pos,
            labels,
            twisted,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[EdgeLabel] {
        &self.labels
    }

    fn next_in_rotation(&self, h: usize, sense: i8) -> usize {
        let rot = &self.rotations[self.half_vertex[h]];
        let len = rot.len();
        let i = self.half_pos[h];
        if sense > 0 {
            rot[(i + 1) % len]
        } else {
            rot[(i + len - 1) % len]
        }
    }

    /// Union-find connectivity of the spanning subgraph on `edge_mask`.
    fn spans_connected(&self, edge_mask: u64) -> bool {
        let nv = self.vertex_count();
        if nv <= 1 {
            return true;
        }
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for h in 0..self.half_names.len() {
            let e = self.half_edge[h];
            if edge_mask >> e & 1 == 1 {
                let a = find(&mut parent, self.half_vertex[h]);
                let b = find(&mut parent, self.half_vertex[self.partner[h]]);
                parent[a] = b;
            }
        }
        let root = find(&mut parent, 0);
        (1..nv).all(|v| find(&mut parent, v) == root)
    }

    /// Steps the boundary walk: traverse the edge of `h`, then scan the
    /// arrival vertex's rotation for the next subgraph half-edge,
    /// reporting the skipped half-edges.
    fn walk_step(
        &self,
        h: usize,
        sense: i8,
        edge_mask: u64,
        skipped: &mut Vec<(usize, i8)>,
    ) -> (usize, i8) {
        let arrive = self.partner[h];
        let s2 = if self.twisted[self.half_edge[h]] {
            -sense
        } else {
            sense
        };
        let mut k = self.next_in_rotation(arrive, s2);
        while edge_mask >> self.half_edge[k] & 1 == 0 {
            skipped.push((k, s2));
            k = self.next_in_rotation(k, s2);
        }
        (k, s2)
    }

    /// Number of boundary components of the spanning subgraph on
    /// `edge_mask`, counting full vertex circles at isolated vertices.
    pub fn boundary_component_count(&self, edge_mask: u64) -> usize {
        let mut active: Vec<usize> = (0..self.half_names.len())
            .filter(|&h| edge_mask >> self.half_edge[h] & 1 == 1)
            .collect();
        let isolated = self
            .rotations
            .iter()
            .filter(|rot| rot.iter().all(|&h| edge_mask >> self.half_edge[h] & 1 == 0))
            .count();
        if active.is_empty() {
            return isolated;
        }
        let mut seen: BTreeMap<(usize, i8), bool> = BTreeMap::new();
        let mut orbits = 0usize;
        let mut scratch = Vec::new();
        while let Some(h0) = active.pop() {
            for s0 in [1i8, -1] {
                if seen.contains_key(&(h0, s0)) {
                    continue;
                }
                orbits += 1;
                let (mut h, mut s) = (h0, s0);
                while !seen.contains_key(&(h, s)) {
                    seen.insert((h, s), true);
                    scratch.clear();
                    let next = self.walk_step(h, s, edge_mask, &mut scratch);
                    h = next.0;
                    s = next.1;
                }
            }
        }
        debug_assert_eq!(orbits % 2, 0);
        orbits / 2 + isolated
    }

    /// Whether `edge_mask` spans a quasi-tree: connected with exactly one
    /// boundary component.
    pub fn is_quasi_tree_mask(&self, edge_mask: u64) -> bool {
        self.spans_connected(edge_mask) && self.boundary_component_count(edge_mask) == 1
    }

    /// All quasi-trees by direct face tracing, as bitmasks over the edge
    /// order. Independent of the chord-diagram route.
    pub fn quasi_tree_masks_direct(&self, limit: usize) -> Result<Vec<u64>> {
        let n = self.edge_count();
        if n > limit {
            return Err(Error::SizeLimitExceeded {
                requested: n,
                limit,
            });
        }
        Ok((0..1u64 << n)
            .filter(|&m| self.is_quasi_tree_mask(m))
            .collect())
    }

    /// A spanning tree of the underlying graph, by breadth-first search.
    fn spanning_tree(&self) -> Result<u64> {
        let nv = self.vertex_count();
        let mut visited = vec![false; nv];
        let mut queue = vec![0usize];
        visited[0] = true;
        let mut tree = 0u64;
        while let Some(v) = queue.pop() {
            for &h in &self.rotations[v] {
                let w = self.half_vertex[self.partner[h]];
                if !visited[w] {
                    visited[w] = true;
                    tree |= 1 << self.half_edge[h];
                    queue.push(w);
                }
            }
        }
        if visited.iter().all(|&v| v) {
            Ok(tree)
        } else {
            Err(Error::DisconnectedInput)
        }
    }

    /// Presents the ribbon graph as a bouquet anchored at a spanning tree.
    ///
    /// The boundary of the spanning tree subgraph is one circle; walking
    /// it records a word slot per non-tree half-edge passed and per tree
    /// ribbon side traversed. A non-tree chord is twisted in the bouquet
    /// when its two passings disagree in sense, toggling its original
    /// sign; a tree chord is twisted when both its traversals leave the
    /// same half-edge.
    pub fn to_anchored(&self) -> Result<AnchoredRibbon> {
        let tree = self.spanning_tree()?;
        if tree == 0 {
            // Single vertex: already a bouquet.
            let word: Vec<EdgeLabel> = self.rotations[0]
                .iter()
                .map(|&h| self.labels[self.half_edge[h]].clone())
                .collect();
            let twisted: Vec<EdgeLabel> = self
                .labels
                .iter()
                .enumerate()
                .filter(|(i, _)| self.twisted[*i])
                .map(|(_, l)| l.clone())
                .collect();
            return AnchoredRibbon::new(ChordDiagram::new(word, twisted)?, []);
        }
        let start = (0..self.half_names.len())
            .find(|&h| tree >> self.half_edge[h] & 1 == 1)
            .expect("tree is nonempty");
        let mut word: Vec<EdgeLabel> = Vec::with_capacity(2 * self.edge_count());
        let mut passings: BTreeMap<usize, Vec<i8>> = BTreeMap::new();
        let mut departures: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let (mut h, mut s) = (start, 1i8);
        let mut skipped = Vec::new();
        loop {
            word.push(self.labels[self.half_edge[h]].clone());
            departures.entry(self.half_edge[h]).or_default().push(h);
            skipped.clear();
            let next = self.walk_step(h, s, tree, &mut skipped);
            for &(k, sense) in &skipped {
                word.push(self.labels[self.half_edge[k]].clone());
                passings.entry(k).or_default().push(sense);
            }
            h = next.0;
            s = next.1;
            if (h, s) == (start, 1) {
                break;
            }
        }
        debug_assert_eq!(word.len(), 2 * self.edge_count());
        let mut twisted: Vec<EdgeLabel> = Vec::new();
        for (e, label) in self.labels.iter().enumerate() {
            let t = if tree >> e & 1 == 1 {
                let d = &departures[&e];
                debug_assert_eq!(d.len(), 2);
                d[0] == d[1]
            } else {
                let halves: Vec<usize> = (0..self.half_names.len())
                    .filter(|&h| self.half_edge[h] == e)
                    .collect();
                let mut senses: Vec<i8> = Vec::new();
                for h in halves {
                    senses.extend(passings.get(&h).into_iter().flatten().copied());
                }
                debug_assert_eq!(senses.len(), 2);
                let flipped = senses[0] != senses[1];
                self.twisted[e] != flipped
            };
            if t {
                twisted.push(label.clone());
            }
        }
        let anchor: Vec<EdgeLabel> = self
            .labels
            .iter()
            .enumerate()
            .filter(|(e, _)| tree >> e & 1 == 1)
            .map(|(_, l)| l.clone())
            .collect();
        AnchoredRibbon::new(ChordDiagram::new(word, twisted)?, anchor)
    }
}
