//! Preorders on the points of a ground set.

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::ground::{GroundSet, Subset};

/// A reflexive, transitive relation on a ground set.
///
/// Stored as principal ideals: `down[x] = {y : y <= x}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Preorder {
    carrier: GroundSet,
    down: Vec<Subset>,
}

impl Preorder {
    /// The discrete preorder (only `x <= x`).
    pub fn discrete(carrier: GroundSet) -> Self {
        let down = (0..carrier.len()).map(Subset::singleton).collect();
        Preorder { carrier, down }
    }

    /// Reflexive-transitive closure of the given `(y, x)` pairs meaning `y <= x`.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(carrier: GroundSet, pairs: I) -> Result<Self> {
        let n = carrier.len();
        let mut down: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for (y, x) in pairs {
            if y >= n || x >= n {
                return Err(Error::UnknownElement(format!("#{}", y.max(x))));
            }
            down[x] = down[x].with(y);
        }
        // Warshall on bitmask rows: if k <= x then down[k] ⊆ down[x]
        for k in 0..n {
            for x in 0..n {
                if down[x].contains(k) {
                    down[x] = down[x].union(down[k]);
                }
            }
        }
        Ok(Preorder { carrier, down })
    }

    /// Builds from explicit `(y, x)` pairs without closing; the relation must
    /// already be reflexive and transitive.
    pub fn from_closed_pairs<I: IntoIterator<Item = (usize, usize)>>(carrier: GroundSet, pairs: I) -> Result<Self> {
        let n = carrier.len();
        let mut down = vec![Subset::EMPTY; n];
        for (y, x) in pairs {
            if y >= n || x >= n {
                return Err(Error::UnknownElement(format!("#{}", y.max(x))));
            }
            down[x] = down[x].with(y);
        }
        Preorder::from_ideals(carrier, down)
    }

    /// Builds from `down[x] = {y : y <= x}`, checking both axioms.
    pub fn from_ideals(carrier: GroundSet, down: Vec<Subset>) -> Result<Self> {
        let n = carrier.len();
        if down.len() != n {
            return Err(Error::TableLength {
                got: down.len(),
                expected: n,
            });
        }
        for (x, &d) in down.iter().enumerate() {
            if !carrier.contains_subset(d) {
                return Err(Error::SubsetOutOfRange(d));
            }
            if !d.contains(x) {
                return Err(Error::NotReflexive(carrier.name(x).to_string()));
            }
        }
        for x in 0..n {
            for y in down[x].elements() {
                if let Some(z) = down[y].difference(down[x]).elements().next() {
                    return Err(Error::NotTransitive(
                        carrier.name(z).to_string(),
                        carrier.name(y).to_string(),
                        carrier.name(x).to_string(),
                    ));
                }
            }
        }
        Ok(Preorder { carrier, down })
    }

    pub fn carrier(&self) -> &GroundSet {
        &self.carrier
    }

    /// `y <= x`.
    pub fn leq(&self, y: usize, x: usize) -> bool {
        self.down[x].contains(y)
    }

    /// `{y : y <= x}`.
    pub fn principal_ideal(&self, x: usize) -> Subset {
        self.down[x]
    }

    pub fn principal_ideal_of(&self, name: &str) -> Result<Subset> {
        Ok(self.down[self.carrier.index_of(name)?])
    }

    pub fn ideals_table(&self) -> &[Subset] {
        &self.down
    }

    /// Down-closed: every point below a member is a member.
    pub fn is_ideal(&self, s: Subset) -> bool {
        s.elements().all(|x| self.down[x].is_subset_of(s))
    }

    /// Largest ideal contained in `s`.
    pub fn largest_ideal_in(&self, s: Subset) -> Subset {
        Subset::from_indices(s.elements().filter(|&x| self.down[x].is_subset_of(s)))
    }

    /// All ideals of the preorder.
    pub fn ideals(&self) -> Result<SetFamily> {
        self.carrier.require_tables()?;
        let members = self.carrier.subsets().filter(|&s| self.is_ideal(s));
        SetFamily::new(self.carrier.clone(), members)
    }

    /// Strict `(y, x)` pairs with `y <= x`, `y != x`, in index order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.carrier.len() {
            for y in self.down[x].elements() {
                if y != x {
                    out.push((y, x));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a_le_b() -> Preorder {
        Preorder::from_pairs(GroundSet::letters(3), [(0, 1)]).unwrap()
    }

    #[test]
    fn principal_ideal_examples() {
        let g = GroundSet::letters(3);
        let p = a_le_b();
        assert_eq!(p.principal_ideal_of("b").unwrap(), g.parse_compact("ab").unwrap());
        assert_eq!(p.principal_ideal_of("c").unwrap(), g.parse_compact("c").unwrap());
        let eq = Preorder::from_pairs(g.clone(), [(0, 1), (1, 0)]).unwrap();
        assert_eq!(eq.principal_ideal_of("a").unwrap(), g.parse_compact("ab").unwrap());
        assert!(matches!(p.principal_ideal_of("z"), Err(Error::UnknownElement(_))));
    }

    #[test]
    fn closure_adds_transitive_pairs() {
        let p = Preorder::from_pairs(GroundSet::letters(3), [(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
    }

    #[test]
    fn closed_constructor_checks_axioms() {
        let g = GroundSet::letters(3);
        let err = Preorder::from_closed_pairs(g.clone(), [(0, 0), (1, 1)]).unwrap_err();
        assert!(matches!(err, Error::NotReflexive(ref x) if x == "c"));
        let err = Preorder::from_closed_pairs(g.clone(), [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]).unwrap_err();
        assert!(matches!(err, Error::NotTransitive(..)));
        assert!(Preorder::from_closed_pairs(g, [(0, 0), (1, 1), (2, 2), (0, 1)]).is_ok());
    }

    fn all_preorders(n: usize) -> Vec<Preorder> {
        let g = GroundSet::letters(n);
        let off: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (y, x)))
            .collect();
        (0..1u32 << off.len())
            .filter_map(|mask| {
                let pairs = (0..n)
                    .map(|i| (i, i))
                    .chain(off.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, p)| *p));
                Preorder::from_closed_pairs(g.clone(), pairs).ok()
            })
            .collect()
    }

    #[test]
    fn ideals_are_union_and_intersection_closed() {
        for n in 0..=4 {
            for p in all_preorders(n) {
                let ideals = p.ideals().unwrap();
                assert!(ideals.is_union_closed());
                assert!(ideals.is_intersection_closed());
            }
        }
    }

    #[test]
    fn preorder_counts_on_small_sets() {
        // number of preorders on 1..=3 labelled points
        let counts: Vec<usize> = (1..=3).map(|n| all_preorders(n).len()).collect();
        assert_eq!(counts, vec![1, 4, 29]);
    }
}
