//! Explicit finite lattices.
//!
//! A lattice is given extensionally by its order table. Meet and join tables
//! are precomputed at construction and validated against the order, so every
//! later lookup is a table read.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};

#[derive(Clone, Debug)]
pub struct FiniteLattice {
    names: Vec<String>,
    index: HashMap<String, usize>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

impl PartialEq for FiniteLattice {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.leq == other.leq
    }
}

impl Eq for FiniteLattice {}

fn index_names(names: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        if n.is_empty() {
            return Err(Error::EmptyName);
        }
        if index.insert(n.clone(), i).is_some() {
            return Err(Error::DuplicateName(n.clone()));
        }
    }
    Ok(index)
}

fn check_partial_order(names: &[String], leq: &[Vec<bool>]) -> Result<()> {
    let n = names.len();
    if leq.len() != n || leq.iter().any(|row| row.len() != n) {
        return Err(Error::TableLength {
            got: leq.len(),
            expected: n,
        });
    }
    for x in 0..n {
        if !leq[x][x] {
            return Err(Error::NotReflexive(names[x].clone()));
        }
        for y in 0..n {
            if x != y && leq[x][y] && leq[y][x] {
                return Err(Error::NotAntisymmetric(names[x].clone(), names[y].clone()));
            }
            if !leq[x][y] {
                continue;
            }
            for z in 0..n {
                if leq[y][z] && !leq[x][z] {
                    return Err(Error::NotTransitive(
                        names[x].clone(),
                        names[y].clone(),
                        names[z].clone(),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Greatest common lower bound (`below = true`) or least upper bound.
fn extremal_bound(leq: &[Vec<bool>], x: usize, y: usize, below: bool) -> Option<usize> {
    let n = leq.len();
    let rel = |a: usize, b: usize| if below { leq[a][b] } else { leq[b][a] };
    let bounds: Vec<usize> = (0..n).filter(|&z| rel(z, x) && rel(z, y)).collect();
    bounds
        .iter()
        .copied()
        .find(|&z| bounds.iter().all(|&w| rel(w, z)))
}

impl FiniteLattice {
    /// Builds from an order table `leq[x][y] = (x <= y)`, deriving meet and join.
    pub fn from_order(names: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let index = index_names(&names)?;
        check_partial_order(&names, &leq)?;
        let n = names.len();
        if n == 0 {
            return Err(Error::NoExtremum("bottom"));
        }
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                meet[x][y] = extremal_bound(&leq, x, y, true)
                    .ok_or_else(|| Error::NoBound(names[x].clone(), names[y].clone(), "meet"))?;
                join[x][y] = extremal_bound(&leq, x, y, false)
                    .ok_or_else(|| Error::NoBound(names[x].clone(), names[y].clone(), "join"))?;
            }
        }
        Self::assemble(names, index, leq, meet, join)
    }

    /// Builds from `(y, x)` pairs meaning `y <= x`, after reflexive-transitive closure.
    #[allow(clippy::needless_range_loop)]
    pub fn from_pairs(names: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(y, x) in pairs {
            if y >= n || x >= n {
                return Err(Error::UnknownElement(format!("#{}", y.max(x))));
            }
            leq[y][x] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        Self::from_order(names, leq)
    }

    /// Builds from explicit order, meet and join tables, rejecting any
    /// meet or join entry that is not the greatest lower / least upper bound.
    pub fn from_tables(
        names: Vec<String>,
        leq: Vec<Vec<bool>>,
        meet: Vec<Vec<usize>>,
        join: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let index = index_names(&names)?;
        check_partial_order(&names, &leq)?;
        let n = names.len();
        for (table, tab) in [("meet", &meet), ("join", &join)] {
            if tab.len() != n || tab.iter().any(|r| r.len() != n) {
                return Err(Error::TableLength {
                    got: tab.len(),
                    expected: n,
                });
            }
            for x in 0..n {
                for y in 0..n {
                    let expected = extremal_bound(&leq, x, y, table == "meet");
                    if expected != Some(tab[x][y]) {
                        return Err(Error::BadLatticeTable {
                            table,
                            x: names[x].clone(),
                            y: names[y].clone(),
                        });
                    }
                }
            }
        }
        if n == 0 {
            return Err(Error::NoExtremum("bottom"));
        }
        Self::assemble(names, index, leq, meet, join)
    }

    fn assemble(
        names: Vec<String>,
        index: HashMap<String, usize>,
        leq: Vec<Vec<bool>>,
        meet: Vec<Vec<usize>>,
        join: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = names.len();
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| leq[b][x]))
            .ok_or(Error::NoExtremum("bottom"))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| leq[x][t]))
            .ok_or(Error::NoExtremum("top"))?;
        Ok(FiniteLattice {
            names,
            index,
            leq,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// The chain `0 < 1 < ... < len-1`.
    pub fn chain(len: usize) -> Self {
        let names = (0..len).map(|i| i.to_string()).collect();
        let leq = (0..len).map(|i| (0..len).map(|j| i <= j).collect()).collect();
        Self::from_order(names, leq).expect("chains are lattices")
    }

    /// Product of chains of lengths `a` and `b`, elements named `(i,j)`.
    pub fn grid(a: usize, b: usize) -> Self {
        let pts: Vec<(usize, usize)> = (0..a).flat_map(|i| (0..b).map(move |j| (i, j))).collect();
        let names = pts.iter().map(|(i, j)| format!("({i},{j})")).collect();
        let leq = pts
            .iter()
            .map(|p| pts.iter().map(|q| p.0 <= q.0 && p.1 <= q.1).collect())
            .collect();
        Self::from_order(names, leq).expect("products of chains are lattices")
    }

    /// Divisors of `m` under divisibility.
    pub fn divisors(m: u64) -> Self {
        let ds: Vec<u64> = (1..=m).filter(|d| m.is_multiple_of(*d)).collect();
        let names = ds.iter().map(u64::to_string).collect();
        let leq = ds
            .iter()
            .map(|&x| ds.iter().map(|&y| y % x == 0).collect())
            .collect();
        Self::from_order(names, leq).expect("divisor posets are lattices")
    }

    /// The Boolean lattice `2^X`; element `i` is the subset with bitmask `i`.
    pub fn boolean(ground: &GroundSet) -> Result<Self> {
        ground.require_tables()?;
        let subsets: Vec<Subset> = ground.subsets().collect();
        let names = subsets.iter().map(|&s| ground.render(s)).collect();
        let leq = subsets
            .iter()
            .map(|a| subsets.iter().map(|b| a.is_subset_of(*b)).collect())
            .collect();
        Self::from_order(names, leq)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.names.len()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq[x][y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x][y]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x][y]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Join of a family; the empty join is the bottom.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of a family; the empty meet is the top.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// `L(x) = {y : y <= x}` in element order.
    pub fn downset(&self, x: usize) -> Vec<usize> {
        self.elements().filter(|&y| self.leq[y][x]).collect()
    }

    pub fn downset_of(&self, name: &str) -> Result<Vec<&str>> {
        let x = self.index_of(name)?;
        Ok(self.downset(x).into_iter().map(|y| self.name(y)).collect())
    }

    /// Strict `(y, x)` pairs with `y < x`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in self.elements() {
            for y in self.elements() {
                if self.lt(y, x) {
                    out.push((y, x));
                }
            }
        }
        out
    }

    pub fn meet_table(&self) -> &[Vec<usize>] {
        &self.meet
    }

    pub fn join_table(&self) -> &[Vec<usize>] {
        &self.join
    }

    pub fn leq_table(&self) -> &[Vec<bool>] {
        &self.leq
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_downsets() {
        let l = FiniteLattice::divisors(12);
        assert_eq!(l.downset_of("4").unwrap(), vec!["1", "2", "4"]);
        assert_eq!(l.downset_of("1").unwrap(), vec!["1"]);
        assert_eq!(l.downset(l.top()).len(), l.len());
        assert!(l.downset_of("5").is_err());
    }

    #[test]
    fn divisor_meet_join_are_gcd_lcm() {
        let l = FiniteLattice::divisors(36);
        let val = |i: usize| l.name(i).parse::<u64>().unwrap();
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 { a } else { gcd(b, a % b) }
        }
        for x in l.elements() {
            for y in l.elements() {
                let (a, b) = (val(x), val(y));
                assert_eq!(val(l.meet(x, y)), gcd(a, b));
                assert_eq!(val(l.join(x, y)), a * b / gcd(a, b));
            }
        }
    }

    #[test]
    fn rejects_non_lattices() {
        // two incomparable maximal elements: no join
        let names = vec!["0".into(), "a".into(), "b".into()];
        let err = FiniteLattice::from_pairs(names, &[(0, 1), (0, 2)]).unwrap_err();
        assert!(matches!(err, Error::NoBound(_, _, "join")));
        let names = vec!["a".into(), "b".into()];
        let err = FiniteLattice::from_pairs(names, &[(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, Error::NotAntisymmetric(..)));
    }

    #[test]
    fn corrupted_tables_are_rejected() {
        let suite = [
            FiniteLattice::divisors(12),
            FiniteLattice::grid(3, 3),
            FiniteLattice::chain(4),
            FiniteLattice::boolean(&GroundSet::letters(3)).unwrap(),
        ];
        for l in suite {
            let names = l.names().to_vec();
            let leq = l.leq_table().to_vec();
            let meet = l.meet_table().to_vec();
            let join = l.join_table().to_vec();
            assert!(FiniteLattice::from_tables(names.clone(), leq.clone(), meet.clone(), join.clone()).is_ok());
            let n = l.len();
            for x in 0..n {
                for y in 0..n {
                    let mut bad = meet.clone();
                    bad[x][y] = (bad[x][y] + 1) % n;
                    assert!(matches!(
                        FiniteLattice::from_tables(names.clone(), leq.clone(), bad, join.clone()),
                        Err(Error::BadLatticeTable { table: "meet", .. })
                    ));
                    let mut bad = join.clone();
                    bad[x][y] = (bad[x][y] + n - 1) % n;
                    assert!(matches!(
                        FiniteLattice::from_tables(names.clone(), leq.clone(), meet.clone(), bad),
                        Err(Error::BadLatticeTable { table: "join", .. })
                    ));
                }
            }
        }
    }

    #[test]
    fn boolean_lattice_matches_subsets() {
        let g = GroundSet::letters(3);
        let l = FiniteLattice::boolean(&g).unwrap();
        assert_eq!(l.len(), 8);
        for a in g.subsets() {
            for b in g.subsets() {
                assert_eq!(l.meet(a.index(), b.index()), a.intersection(b).index());
                assert_eq!(l.join(a.index(), b.index()), a.union(b).index());
            }
        }
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 7);
    }
}
