//! Finite ground sets and bitmask subsets.
//!
//! A [`GroundSet`] is an ordered list of distinct element names; element `i`
//! corresponds to bit `i` of a [`Subset`]. Subsets do not carry their ground
//! set; containers ([`crate::SetFamily`], [`crate::ChoiceFunction`], ...) own
//! the ground set and check that the subsets they are given fit inside it.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default limit on `n` for anything that materializes a table over `2^n`.
pub const DEFAULT_MAX_N: usize = 20;

/// Width of the bitmask representation.
pub const MASK_BITS: usize = 31;

/// A subset of a ground set, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// Index into a powerset table.
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Subset(indices.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub const fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub const fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub const fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub const fn with(self, i: usize) -> Subset {
        Subset(self.0 | (1 << i))
    }

    pub const fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Member indices in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    /// All subsets of `self`, in increasing bitmask order (starting with ∅).
    pub fn subsets(self) -> Submasks {
        Submasks {
            mask: self.0,
            next: Some(0),
        }
    }

    /// All supersets of `self` inside `outer`, in increasing bitmask order.
    pub fn supersets_within(self, outer: Subset) -> impl Iterator<Item = Subset> {
        debug_assert!(self.is_subset_of(outer));
        let base = self;
        outer.difference(self).subsets().map(move |s| s.union(base))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.elements().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Ascending iterator over the submasks of a mask.
#[derive(Clone, Debug)]
pub struct Submasks {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Submasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            // increment restricted to the bits of `mask`
            Some(((cur | !self.mask).wrapping_add(1)) & self.mask)
        };
        Some(Subset(cur))
    }
}

#[derive(Debug)]
struct Names {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered finite universe of named elements.
///
/// Cloning is cheap. Equality compares element names in order; the table
/// limit is a per-instance setting and does not take part in comparisons.
#[derive(Clone)]
pub struct GroundSet {
    inner: Arc<Names>,
    max_n: usize,
}

impl GroundSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MASK_BITS {
            return Err(Error::TooManyElements {
                n: names.len(),
                limit: MASK_BITS,
            });
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyName);
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        Ok(GroundSet {
            inner: Arc::new(Names { names, index }),
            max_n: DEFAULT_MAX_N,
        })
    }

    /// Ground set `{a, b, c, ...}` of the given size.
    pub fn letters(n: usize) -> Self {
        let names = (0..n).map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("x{i}")
            }
        });
        GroundSet::new(names).expect("letter names are distinct")
    }

    /// Same ground set with a different powerset-table limit.
    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = max_n.min(MASK_BITS);
        self
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn len(&self) -> usize {
        self.inner.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.inner.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.inner
            .index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn full(&self) -> Subset {
        Subset(((1u64 << self.len()) - 1) as u32)
    }

    /// Number of subsets, `2^n`.
    pub fn powerset_size(&self) -> usize {
        1usize << self.len()
    }

    /// All `2^n` subsets in increasing bitmask order.
    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        (0..self.powerset_size() as u32).map(Subset)
    }

    /// Fails unless a `2^n` table is allowed for this ground set.
    pub fn require_tables(&self) -> Result<()> {
        if self.len() > self.max_n {
            Err(Error::TableLimit {
                n: self.len(),
                max_n: self.max_n,
            })
        } else {
            Ok(())
        }
    }

    pub fn contains_subset(&self, s: Subset) -> bool {
        s.is_subset_of(self.full())
    }

    pub fn subset<I, S>(&self, names: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        names
            .into_iter()
            .try_fold(Subset::EMPTY, |acc, n| Ok(acc.with(self.index_of(n.as_ref())?)))
    }

    /// Parses compact names like `"ab"` for single-letter ground sets; `""` is ∅.
    pub fn parse_compact(&self, spec: &str) -> Result<Subset> {
        spec.chars()
            .try_fold(Subset::EMPTY, |acc, c| {
                Ok(acc.with(self.index_of(c.encode_utf8(&mut [0; 4]))?))
            })
    }

    /// Member names, sorted alphabetically.
    pub fn sorted_names(&self, s: Subset) -> Vec<String> {
        let mut v: Vec<String> = s.elements().map(|i| self.name(i).to_string()).collect();
        v.sort();
        v
    }

    /// `{a,b}` rendering with alphabetically sorted names.
    pub fn render(&self, s: Subset) -> String {
        format!("{{{}}}", self.sorted_names(s).join(","))
    }

    pub fn check_same(&self, other: &GroundSet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::GroundMismatch)
        }
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.names == other.inner.names
    }
}

impl Eq for GroundSet {}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submasks_ascend_and_cover() {
        let m = Subset::from_bits(0b1011);
        let subs: Vec<u32> = m.subsets().map(Subset::bits).collect();
        assert_eq!(subs, vec![0, 1, 2, 3, 8, 9, 10, 11]);
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn supersets_within_outer() {
        let s = Subset::from_bits(0b001);
        let sup: Vec<u32> = s
            .supersets_within(Subset::from_bits(0b101))
            .map(Subset::bits)
            .collect();
        assert_eq!(sup, vec![0b001, 0b101]);
    }

    #[test]
    fn rejects_bad_names() {
        assert!(matches!(GroundSet::new(["a", "a"]), Err(Error::DuplicateName(_))));
        assert!(matches!(GroundSet::new(["a", ""]), Err(Error::EmptyName)));
        let many: Vec<String> = (0..32).map(|i| format!("e{i}")).collect();
        assert!(matches!(
            GroundSet::new(many),
            Err(Error::TooManyElements { .. })
        ));
    }

    #[test]
    fn table_limit_is_configurable() {
        let g = GroundSet::letters(5);
        assert!(g.require_tables().is_ok());
        let g = g.with_max_n(4);
        assert!(matches!(g.require_tables(), Err(Error::TableLimit { n: 5, max_n: 4 })));
    }

    #[test]
    fn render_sorts_names() {
        let g = GroundSet::new(["c", "a", "b"]).unwrap();
        let s = g.subset(["b", "c"]).unwrap();
        assert_eq!(g.render(s), "{b,c}");
        assert_eq!(g.render(Subset::EMPTY), "{}");
        assert_eq!(GroundSet::letters(0).full(), Subset::EMPTY);
    }
}
