//! Set systems and delta-matroids: exchange axioms, twists, minors, the
//! parity lift, and isomorphism search.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::chord::EdgeLabel;
use crate::error::Error;
use crate::Result;

/// A set system: an ordered ground set together with a nonempty family of
/// feasible subsets, stored as sorted bitmasks over the ground order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    ground: Vec<EdgeLabel>,
    feasible: Vec<u64>,
}

/// A set system on `E ∪ {ê}` in the image of the parity lift: every
/// feasible set has even cardinality and `ê` belongs to the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedSystem {
    inner: SetSystem,
    hat_label: EdgeLabel,
}

impl SetSystem {
    pub fn new<I>(ground: Vec<EdgeLabel>, feasible: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<EdgeLabel>>,
    {
        let proto = SetSystem {
            ground,
            feasible: Vec::new(),
        };
        for (i, a) in proto.ground.iter().enumerate() {
            if proto.ground[..i].contains(a) {
                return Err(Error::LabelClash(a.as_str().to_string()));
            }
        }
        let mut masks = Vec::new();
        for set in feasible {
            masks.push(proto.mask_of(&set)?);
        }
        SetSystem::from_masks(proto.ground, masks)
    }

    /// Builds from bitmasks over the ground order; sorts and dedups.
    pub fn from_masks(ground: Vec<EdgeLabel>, mut feasible: Vec<u64>) -> Result<Self> {
        if ground.len() > 64 {
            return Err(Error::SizeLimitExceeded {
                requested: ground.len(),
                limit: 64,
            });
        }
        if feasible.is_empty() {
            return Err(Error::InvalidParams(
                "feasible family must be nonempty".into(),
            ));
        }
        let full = if ground.is_empty() {
            0
        } else {
            (1u64 << ground.len()) - 1
        };
        if feasible.iter().any(|&m| m & !full != 0) {
            return Err(Error::IndexMismatch);
        }
        feasible.sort_unstable();
        feasible.dedup();
        Ok(SetSystem { ground, feasible })
    }

    pub fn ground(&self) -> &[EdgeLabel] {
        &self.ground
    }

    pub fn feasible_masks(&self) -> &[u64] {
        &self.feasible
    }

    pub fn feasible_sets(&self) -> Vec<BTreeSet<EdgeLabel>> {
        self.feasible
            .iter()
            .map(|&m| {
                self.ground
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| m >> i & 1 == 1)
                    .map(|(_, l)| l.clone())
                    .collect()
            })
            .collect()
    }

    pub fn mask_of(&self, subset: &[EdgeLabel]) -> Result<u64> {
        let mut mask = 0u64;
        for l in subset {
            let i = self
                .ground
                .iter()
                .position(|g| g == l)
                .ok_or_else(|| Error::UnknownElement(l.as_str().to_string()))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.feasible.binary_search(&mask).is_ok()
    }

    /// Order-insensitive equality: same ground set (as a set) and the same
    /// feasible family (as label sets).
    pub fn same_family(&self, other: &SetSystem) -> bool {
        if self.ground.len() != other.ground.len() {
            return false;
        }
        let perm: Option<Vec<usize>> = self
            .ground
            .iter()
            .map(|l| other.ground.iter().position(|m| m == l))
            .collect();
        let Some(perm) = perm else { return false };
        if self.feasible.len() != other.feasible.len() {
            return false;
        }
        let mut mapped: Vec<u64> = self
            .feasible
            .iter()
            .map(|&m| {
                (0..self.ground.len())
                    .filter(|i| m >> i & 1 == 1)
                    .fold(0u64, |acc, i| acc | (1 << perm[i]))
            })
            .collect();
        mapped.sort_unstable();
        mapped == other.feasible
    }

    fn check_limit(&self, limit: usize) -> Result<()> {
        if self.ground.len() > limit {
            return Err(Error::SizeLimitExceeded {
                requested: self.ground.len(),
                limit,
            });
        }
        Ok(())
    }

    /// Brute-force check of the symmetric exchange axiom: for all feasible
    /// `B, B'` and `x` in their symmetric difference there is `y` there too
    /// with `B △ {x, y}` feasible. `y = x` is allowed, in which case the
    /// swap set is the singleton `{x}`.
    pub fn is_delta_matroid(&self, limit: usize) -> Result<bool> {
        self.check_limit(limit)?;
        for &b in &self.feasible {
            for &b2 in &self.feasible {
                let d = b ^ b2;
                for x in super::exactla::bit_positions(d) {
                    let ok = super::exactla::bit_positions(d)
                        .into_iter()
                        .any(|y| self.contains_mask(b ^ swap_set(x, y)));
                    if !ok {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Brute-force check of the strong exchange axiom, which additionally
    /// demands `B' △ {x, y}` feasible for the same witness `y`.
    pub fn is_strong(&self, limit: usize) -> Result<bool> {
        self.check_limit(limit)?;
        for &b in &self.feasible {
            for &b2 in &self.feasible {
                let d = b ^ b2;
                for x in super::exactla::bit_positions(d) {
                    let ok = super::exactla::bit_positions(d).into_iter().any(|y| {
                        let sw = swap_set(x, y);
                        self.contains_mask(b ^ sw) && self.contains_mask(b2 ^ sw)
                    });
                    if !ok {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Whether all feasible sets share one cardinality parity.
    pub fn is_even(&self) -> bool {
        let p = self.feasible[0].count_ones() % 2;
        self.feasible.iter().all(|m| m.count_ones() % 2 == p)
    }

    /// The twist `D * X`: symmetric difference of every feasible set with `X`.
    pub fn twist(&self, subset: &[EdgeLabel]) -> Result<SetSystem> {
        let x = self.mask_of(subset)?;
        let feasible = self.feasible.iter().map(|&m| m ^ x).collect();
        SetSystem::from_masks(self.ground.clone(), feasible)
    }

    /// Deletes `e`: keeps feasible sets avoiding `e`, unless `e` is a
    /// coloop (in every feasible set), in which case `e` is removed from
    /// each feasible set instead.
    pub fn delete(&self, e: &EdgeLabel) -> Result<SetSystem> {
        let pos = self
            .ground
            .iter()
            .position(|g| g == e)
            .ok_or_else(|| Error::UnknownElement(e.as_str().to_string()))?;
        let bit = 1u64 << pos;
        let coloop = self.feasible.iter().all(|&m| m & bit != 0);
        let kept: Vec<u64> = self
            .feasible
            .iter()
            .filter(|&&m| coloop || m & bit == 0)
            .map(|&m| {
                let low = m & (bit - 1);
                let high = m >> (pos + 1) << pos;
                low | high
            })
            .collect();
        let mut ground = self.ground.clone();
        ground.remove(pos);
        SetSystem::from_masks(ground, kept)
    }

    /// Contracts `e`: twist at `{e}` then delete `e`.
    pub fn contract(&self, e: &EdgeLabel) -> Result<SetSystem> {
        self.twist(core::slice::from_ref(e))?.delete(e)
    }

    /// The parity lift: adds `hat_label` to the ground set and appends it
    /// to every odd-sized feasible set, making every member even-sized.
    pub fn lift(&self, hat_label: EdgeLabel) -> Result<LiftedSystem> {
        if self.ground.contains(&hat_label) {
            return Err(Error::LabelClash(hat_label.as_str().to_string()));
        }
        let hat_bit = 1u64 << self.ground.len();
        let feasible: Vec<u64> = self
            .feasible
            .iter()
            .map(|&m| {
                if m.count_ones() % 2 == 1 {
                    m | hat_bit
                } else {
                    m
                }
            })
            .collect();
        let mut ground = self.ground.clone();
        ground.push(hat_label.clone());
        let inner = SetSystem::from_masks(ground, feasible)?;
        Ok(LiftedSystem { inner, hat_label })
    }

    /// Checks the equivalence "strong delta-matroid ⟺ even lifted
    /// delta-matroid" on this system and returns the shared verdict.
    ///
    /// A disagreement between the two routes is an error, never a silent
    /// pick of one side.
    pub fn strong_iff_lift_even_check(&self, limit: usize) -> Result<bool> {
        self.check_limit(limit)?;
        let direct = self.is_strong(limit)? && self.is_delta_matroid(limit)?;
        let hat = fresh_label(&self.ground);
        let lifted = self.lift(hat)?;
        debug_assert!(lifted.inner().is_even());
        let via_lift = lifted.inner().is_delta_matroid(limit + 1)?;
        if direct != via_lift {
            return Err(Error::StrongLiftMismatch);
        }
        Ok(direct)
    }

    /// Searches for a ground-set bijection carrying this family onto
    /// `other`'s, with degree/size-profile pruning.
    pub fn are_isomorphic(
        &self,
        other: &SetSystem,
        limit: usize,
    ) -> Result<Option<Vec<(EdgeLabel, EdgeLabel)>>> {
        self.check_limit(limit)?;
        other.check_limit(limit)?;
        let n = self.ground.len();
        if n != other.ground.len() || self.feasible.len() != other.feasible.len() {
            return Ok(None);
        }
        let size_profile = |s: &SetSystem| {
            let mut counts = [0usize; 65];
            for m in &s.feasible {
                counts[m.count_ones() as usize] += 1;
            }
            counts
        };
        if size_profile(self) != size_profile(other) {
            return Ok(None);
        }
        // Element degree = number of feasible sets containing it.
        let degrees = |s: &SetSystem| -> Vec<usize> {
            (0..s.ground.len())
                .map(|i| s.feasible.iter().filter(|&&m| m >> i & 1 == 1).count())
                .collect()
        };
        let dl = degrees(self);
        let dr = degrees(other);
        {
            let mut a = dl.clone();
            let mut b = dr.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return Ok(None);
            }
        }
        let mut assignment = alloc::vec![usize::MAX; n];
        let mut used = alloc::vec![false; n];
        if self.search_iso(other, &dl, &dr, 0, &mut assignment, &mut used) {
            Ok(Some(
                assignment
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| (self.ground[i].clone(), other.ground[j].clone()))
                    .collect(),
            ))
        } else {
            Ok(None)
        }
    }

    fn search_iso(
        &self,
        other: &SetSystem,
        dl: &[usize],
        dr: &[usize],
        pos: usize,
        assignment: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = self.ground.len();
        if pos == n {
            let mut mapped: Vec<u64> = self
                .feasible
                .iter()
                .map(|&m| {
                    (0..n)
                        .filter(|i| m >> i & 1 == 1)
                        .fold(0u64, |acc, i| acc | (1 << assignment[i]))
                })
                .collect();
            mapped.sort_unstable();
            return mapped == other.feasible;
        }
        for j in 0..n {
            if used[j] || dl[pos] != dr[j] {
                continue;
            }
            assignment[pos] = j;
            used[j] = true;
            if self.search_iso(other, dl, dr, pos + 1, assignment, used) {
                return true;
            }
            used[j] = false;
            assignment[pos] = usize::MAX;
        }
        false
    }
}

impl LiftedSystem {
    /// Wraps an even-sized system as a lifted system with the given hat
    /// element.
    pub fn new(inner: SetSystem, hat_label: EdgeLabel) -> Result<Self> {
        if !inner.ground.contains(&hat_label) {
            return Err(Error::UnknownElement(hat_label.as_str().to_string()));
        }
        if inner.feasible.iter().any(|m| m.count_ones() % 2 == 1) {
            return Err(Error::OddFeasibleSet);
        }
        Ok(LiftedSystem { inner, hat_label })
    }

    pub fn inner(&self) -> &SetSystem {
        &self.inner
    }

    pub fn hat_label(&self) -> &EdgeLabel {
        &self.hat_label
    }

    /// Inverse of the lift: drops `ê` from every feasible set.
    pub fn unlift(&self) -> SetSystem {
        let pos = self
            .inner
            .ground
            .iter()
            .position(|g| g == &self.hat_label)
            .expect("hat label is in the ground set");
        let bit = 1u64 << pos;
        let feasible: Vec<u64> = self
            .inner
            .feasible
            .iter()
            .map(|&m| {
                let m = m & !bit;
                let low = m & (bit - 1);
                let high = m >> (pos + 1) << pos;
                low | high
            })
            .collect();
        let mut ground = self.inner.ground.clone();
        ground.remove(pos);
        SetSystem::from_masks(ground, feasible).expect("unlift of a valid lift is valid")
    }
}

/// Bitmask of the set `{x, y}`, a singleton when `x = y`.
fn swap_set(x: usize, y: usize) -> u64 {
    (1u64 << x) | (1 << y)
}

/// Picks a numeric label not present in `ground`.
pub fn fresh_label(ground: &[EdgeLabel]) -> EdgeLabel {
    let mut i = ground.len() + 1;
    loop {
        let cand = EdgeLabel::numeric(i);
        if !ground.contains(&cand) {
            return cand;
        }
        i += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(ground: usize, sets: &[&[usize]]) -> SetSystem {
        let g: Vec<EdgeLabel> = (1..=ground).map(EdgeLabel::numeric).collect();
        SetSystem::new(
            g,
            sets.iter()
                .map(|s| s.iter().map(|&i| EdgeLabel::numeric(i)).collect()),
        )
        .unwrap()
    }

    fn intro_system() -> SetSystem {
        sys(3, &[&[], &[1], &[1, 2], &[1, 3]])
    }

    #[test]
    fn intro_system_is_a_delta_matroid() {
        assert!(intro_system().is_delta_matroid(16).unwrap());
        assert!(intro_system().is_strong(16).unwrap());
        assert!(!intro_system().is_even());
    }

    #[test]
    fn exchange_axiom_fails_without_midpoints() {
        // {1} vs {2,3}: no single swap lands on a feasible set.
        let s = sys(3, &[&[], &[1], &[2, 3]]);
        assert!(!s.is_delta_matroid(16).unwrap());
    }

    #[test]
    fn interlaced_pair_family_is_a_delta_matroid() {
        // Feasible family of an interlacing orientable pair.
        let s = sys(2, &[&[], &[1, 2]]);
        assert!(s.is_delta_matroid(16).unwrap());
        assert!(s.is_strong(16).unwrap());
        assert!(s.is_even());
    }

    #[test]
    fn single_feasible_set_is_vacuous() {
        let s = sys(3, &[&[2]]);
        assert!(s.is_delta_matroid(16).unwrap());
        assert!(s.is_strong(16).unwrap());
    }

    #[test]
    fn smallest_non_strong_delta_matroid() {
        let s = sys(3, &[&[], &[1], &[2], &[3], &[1, 2, 3]]);
        assert!(s.is_delta_matroid(16).unwrap());
        assert!(!s.is_strong(16).unwrap());
        assert!(!s.strong_iff_lift_even_check(12).unwrap());
    }

    #[test]
    fn matroid_bases_are_strong() {
        let s = sys(2, &[&[1], &[2]]);
        assert!(s.is_strong(16).unwrap());
        assert!(s.is_even());
    }

    #[test]
    fn twist_is_an_involution() {
        let s = intro_system();
        let x = [EdgeLabel::numeric(1)];
        let t = s.twist(&x).unwrap();
        assert_eq!(
            t.feasible_masks(),
            &[0b000, 0b001, 0b010, 0b100],
            "twist at 1 of the introductory family"
        );
        assert_eq!(t.twist(&x).unwrap(), s);
        assert_eq!(s.twist(&[]).unwrap(), s);
    }

    #[test]
    fn delete_filters_or_strips() {
        let s = intro_system();
        let d = s.delete(&EdgeLabel::numeric(2)).unwrap();
        assert_eq!(d.ground().len(), 2);
        assert_eq!(d.feasible_masks(), &[0b00, 0b01, 0b11]);
        let coloop = sys(1, &[&[1]]);
        let d = coloop.delete(&EdgeLabel::numeric(1)).unwrap();
        assert_eq!(d.ground().len(), 0);
        assert_eq!(d.feasible_masks(), &[0]);
    }

    #[test]
    fn delete_then_contract_commute_on_disjoint_elements() {
        let s = intro_system();
        let a = EdgeLabel::numeric(2);
        let b = EdgeLabel::numeric(3);
        let left = s.delete(&a).unwrap().contract(&b).unwrap();
        let right = s.contract(&b).unwrap().delete(&a).unwrap();
        assert!(left.same_family(&right));
    }

    #[test]
    fn lift_of_intro_system() {
        let s = intro_system();
        let l = s.lift(EdgeLabel::numeric(4)).unwrap();
        assert!(l.inner().is_even());
        assert_eq!(
            l.inner().feasible_masks(),
            &[0b0000, 0b0011, 0b0101, 0b1001]
        );
        assert_eq!(l.unlift(), s);
    }

    #[test]
    fn lift_of_empty_ground() {
        let s = sys(0, &[&[]]);
        let l = s.lift(EdgeLabel::numeric(1)).unwrap();
        assert_eq!(l.inner().feasible_masks(), &[0]);
        assert_eq!(l.unlift(), s);
    }

    #[test]
    fn unlift_rejects_odd_sets() {
        let g: Vec<EdgeLabel> = (1..=2).map(EdgeLabel::numeric).collect();
        let inner = SetSystem::from_masks(g, alloc::vec![0b01]).unwrap();
        let err = LiftedSystem::new(inner, EdgeLabel::numeric(2)).unwrap_err();
        assert_eq!(err, Error::OddFeasibleSet);
    }

    #[test]
    fn strong_iff_lift_even_examples() {
        assert!(intro_system().strong_iff_lift_even_check(12).unwrap());
        let free = sys(1, &[&[], &[1]]);
        assert!(free.strong_iff_lift_even_check(12).unwrap());
    }

    #[test]
    fn isomorphism_finds_identity() {
        let s = intro_system();
        let iso = s.are_isomorphic(&s, 8).unwrap().unwrap();
        assert!(iso.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn isomorphism_distinguishes_profiles() {
        let a = sys(2, &[&[]]);
        let b = sys(2, &[&[1, 2]]);
        assert!(a.are_isomorphic(&b, 8).unwrap().is_none());
    }

    #[test]
    fn isomorphism_detects_relabeling() {
        let a = sys(3, &[&[], &[1], &[1, 2]]);
        let b = sys(3, &[&[], &[3], &[2, 3]]);
        let iso = a.are_isomorphic(&b, 8).unwrap().unwrap();
        let m: alloc::collections::BTreeMap<_, _> = iso.into_iter().collect();
        assert_eq!(m[&EdgeLabel::numeric(1)], EdgeLabel::numeric(3));
        assert_eq!(m[&EdgeLabel::numeric(2)], EdgeLabel::numeric(2));
    }
}
