use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};

/// A complete preorder on `2^X` given by integer ranks; higher rank is
/// strictly preferred, equal ranks are indifferent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubsetWeakOrder {
    ground: GroundSet,
    rank: Vec<i64>,
}

impl SubsetWeakOrder {
    pub fn new(ground: GroundSet, rank: Vec<i64>) -> Result<Self> {
        ground.require_tables()?;
        if rank.len() != ground.powerset_size() {
            return Err(Error::RankLength {
                got: rank.len(),
                expected: ground.powerset_size(),
            });
        }
        Ok(SubsetWeakOrder { ground, rank })
    }

    /// Every subset indifferent to every other.
    pub fn indifferent(ground: GroundSet) -> Result<Self> {
        let size = ground.powerset_size();
        SubsetWeakOrder::new(ground, vec![0; size])
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn rank(&self, s: Subset) -> i64 {
        self.rank[s.index()]
    }

    pub fn ranks(&self) -> &[i64] {
        &self.rank
    }

    /// `a ⪯ b`
    pub fn weakly_below(&self, a: Subset, b: Subset) -> bool {
        self.rank(a) <= self.rank(b)
    }

    /// `a ≺ b`
    pub fn strictly_below(&self, a: Subset, b: Subset) -> bool {
        self.rank(a) < self.rank(b)
    }

    /// Number of indifference classes.
    pub fn tiers(&self) -> usize {
        let mut r = self.rank.clone();
        r.sort_unstable();
        r.dedup();
        r.len()
    }
}
