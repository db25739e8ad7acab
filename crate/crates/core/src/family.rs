//! Families of subsets over a common ground set.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};

/// A deduplicated family of subsets, kept in increasing bitmask order.
#[derive(Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: GroundSet,
    members: BTreeSet<Subset>,
}

impl SetFamily {
    pub fn new<I: IntoIterator<Item = Subset>>(ground: GroundSet, members: I) -> Result<Self> {
        let members: BTreeSet<Subset> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|s| !ground.contains_subset(**s)) {
            return Err(Error::SubsetOutOfRange(*bad));
        }
        Ok(SetFamily { ground, members })
    }

    pub fn empty(ground: GroundSet) -> Self {
        SetFamily {
            ground,
            members: BTreeSet::new(),
        }
    }

    /// Family given by compact names, e.g. `["", "ab", "c"]`.
    pub fn from_compact(ground: &GroundSet, specs: &[&str]) -> Result<Self> {
        let members = specs
            .iter()
            .map(|s| ground.parse_compact(s))
            .collect::<Result<Vec<_>>>()?;
        SetFamily::new(ground.clone(), members)
    }

    pub(crate) fn from_set(ground: GroundSet, members: BTreeSet<Subset>) -> Self {
        SetFamily { ground, members }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members.contains(&s)
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().copied()
    }

    pub fn members(&self) -> &BTreeSet<Subset> {
        &self.members
    }

    pub fn insert(&mut self, s: Subset) -> Result<bool> {
        if !self.ground.contains_subset(s) {
            return Err(Error::SubsetOutOfRange(s));
        }
        Ok(self.members.insert(s))
    }

    /// Smallest family containing ∅ and `self` that is closed under unions.
    pub fn union_closure(&self) -> Result<SetFamily> {
        self.ground.require_tables()?;
        let mut seen = vec![false; self.ground.powerset_size()];
        let mut members = vec![Subset::EMPTY];
        seen[0] = true;
        let mut frontier: Vec<Subset> = Vec::new();
        for s in self.iter() {
            if !seen[s.index()] {
                seen[s.index()] = true;
                members.push(s);
                frontier.push(s);
            }
        }
        while let Some(s) = frontier.pop() {
            let mut k = 0;
            while k < members.len() {
                let u = s.union(members[k]);
                if !seen[u.index()] {
                    seen[u.index()] = true;
                    members.push(u);
                    frontier.push(u);
                }
                k += 1;
            }
        }
        Ok(SetFamily::from_set(self.ground.clone(), members.into_iter().collect()))
    }

    /// `∅` is a member and the family is closed under pairwise unions.
    pub fn is_union_closed(&self) -> bool {
        self.contains(Subset::EMPTY)
            && self
                .iter()
                .all(|a| self.iter().all(|b| self.contains(a.union(b))))
    }

    /// Closed under pairwise intersections; the full set is not required.
    pub fn is_intersection_closed(&self) -> bool {
        self.iter()
            .all(|a| self.iter().all(|b| self.contains(a.intersection(b))))
    }

    /// Inclusion-minimal members.
    pub fn minimal_members(&self) -> SetFamily {
        let members = self
            .iter()
            .filter(|&s| !self.iter().any(|t| t != s && t.is_subset_of(s)))
            .collect();
        SetFamily::from_set(self.ground.clone(), members)
    }

    /// Members are pairwise incomparable under inclusion.
    pub fn is_antichain(&self) -> bool {
        self.iter()
            .all(|a| self.iter().all(|b| a == b || !a.is_subset_of(b)))
    }

    /// Members contained in `outer`.
    pub fn within(&self, outer: Subset) -> impl Iterator<Item = Subset> + '_ {
        self.iter().filter(move |s| s.is_subset_of(outer))
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.iter().map(|s| self.ground.render(s)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl std::fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = Subset;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, Subset>>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x3() -> GroundSet {
        GroundSet::letters(3)
    }

    #[test]
    fn union_closure_examples() {
        let g = x3();
        let base = SetFamily::from_compact(&g, &["ab", "c"]).unwrap();
        let closed = base.union_closure().unwrap();
        assert_eq!(closed, SetFamily::from_compact(&g, &["", "ab", "c", "abc"]).unwrap());

        let empty = SetFamily::empty(g.clone());
        assert_eq!(empty.union_closure().unwrap(), SetFamily::from_compact(&g, &[""]).unwrap());

        let g2 = GroundSet::letters(2);
        let base = SetFamily::from_compact(&g2, &["a", "b"]).unwrap();
        assert_eq!(
            base.union_closure().unwrap(),
            SetFamily::from_compact(&g2, &["", "a", "b", "ab"]).unwrap()
        );
    }

    #[test]
    fn union_closure_respects_limit() {
        let g = GroundSet::letters(4).with_max_n(3);
        assert!(SetFamily::empty(g).union_closure().is_err());
    }

    #[test]
    fn union_closed_examples() {
        let g2 = GroundSet::letters(2);
        assert!(SetFamily::from_compact(&g2, &["", "a", "b", "ab"]).unwrap().is_union_closed());
        assert!(!SetFamily::from_compact(&g2, &["", "a", "b"]).unwrap().is_union_closed());
        assert!(!SetFamily::from_compact(&g2, &["a"]).unwrap().is_union_closed());
    }

    #[test]
    fn intersection_closed_examples() {
        let g = x3();
        assert!(!SetFamily::from_compact(&g, &["", "ab", "ac", "abc"]).unwrap().is_intersection_closed());
        assert!(SetFamily::from_compact(&g, &["", "ab", "c", "abc"]).unwrap().is_intersection_closed());
        assert!(SetFamily::from_compact(&g, &[""]).unwrap().is_intersection_closed());
    }

    fn family_strategy(n: usize) -> impl Strategy<Value = SetFamily> {
        let g = GroundSet::letters(n);
        let size = 1u32 << n;
        proptest::collection::vec(0..size, 0..6).prop_map(move |bits| {
            SetFamily::new(g.clone(), bits.into_iter().map(Subset::from_bits)).unwrap()
        })
    }

    fn is_subfamily(a: &SetFamily, b: &SetFamily) -> bool {
        a.iter().all(|s| b.contains(s))
    }

    proptest! {
        #[test]
        fn union_closure_is_a_closure_operator(a in family_strategy(4), b in family_strategy(4)) {
            let ca = a.union_closure().unwrap();
            prop_assert!(ca.is_union_closed());
            prop_assert!(is_subfamily(&a, &ca));
            prop_assert_eq!(ca.union_closure().unwrap(), ca.clone());
            // monotone: a ⊆ a ∪ b implies closure(a) ⊆ closure(a ∪ b)
            let mut ab = a.clone();
            for s in &b {
                ab.insert(s).unwrap();
            }
            prop_assert!(is_subfamily(&ca, &ab.union_closure().unwrap()));
        }
    }
}
