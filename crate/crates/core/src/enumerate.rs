//! Exhaustive enumeration of small combinatorial objects.
//!
//! Complementary choice functions on `X` correspond one-to-one with
//! pre-topologies on `X`, which gives two independent ways to count them:
//! filter every contracting table through the axiom checker, or count the
//! union-closed families containing `∅`.

use crate::choicefn::ChoiceFunction;
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::ground::{GroundSet, Subset};
use crate::preorder::Preorder;
use crate::pretop;

/// Largest `n` for which all contracting tables are listed (`2^(n 2^(n-1))` tables).
pub const MAX_N_CONTRACTING: usize = 3;
/// Largest `n` for which union-closed families are counted.
pub const MAX_N_FAMILIES: usize = 5;
/// Largest `n` for which union-closed families are materialized.
pub const MAX_N_PRETOPOLOGIES: usize = 4;

fn too_large(what: &str, n: usize, max: usize) -> Error {
    Error::EnumerationTooLarge(format!("{what} for n = {n} (limit {max})"))
}

/// Calls `visit` with every contracting table on `ground`.
pub fn for_each_contracting(ground: &GroundSet, mut visit: impl FnMut(&ChoiceFunction)) -> Result<()> {
    let n = ground.len();
    if n > MAX_N_CONTRACTING {
        return Err(too_large("contracting tables", n, MAX_N_CONTRACTING));
    }
    let menus: Vec<Subset> = ground.subsets().collect();
    let mut table: Vec<Subset> = vec![Subset::EMPTY; menus.len()];
    loop {
        visit(&ChoiceFunction::new(ground.clone(), table.clone())?);
        // odometer: advance each entry through the submasks of its menu
        let mut k = 0;
        loop {
            if k == menus.len() {
                return Ok(());
            }
            let menu = menus[k].bits();
            let cur = table[k].bits();
            if cur == menu {
                table[k] = Subset::EMPTY;
                k += 1;
            } else {
                table[k] = Subset::from_bits(((cur | !menu).wrapping_add(1)) & menu);
                break;
            }
        }
    }
}

pub fn contracting_tables(ground: &GroundSet) -> Result<Vec<ChoiceFunction>> {
    let mut out = Vec::new();
    for_each_contracting(ground, |f| out.push(f.clone()))?;
    Ok(out)
}

/// Visits every union-closed family containing `∅` on `n` points, as a bitmask
/// over the `2^n` subsets (bit `S` set iff subset `S` is a member).
///
/// Subsets are decided in increasing bitmask order. Including `S` forces every
/// union `S ∪ T` with an earlier member `T`; since `S ∪ T >= S` numerically,
/// forced sets are still undecided, so every leaf is a distinct closed family.
pub fn for_each_union_closed(n: usize, mut visit: impl FnMut(u64)) -> Result<()> {
    if n > MAX_N_FAMILIES {
        return Err(too_large("union-closed families", n, MAX_N_FAMILIES));
    }
    fn rec(s: u32, size: u32, family: u64, required: u64, visit: &mut dyn FnMut(u64)) {
        if s == size {
            visit(family);
            return;
        }
        // include s
        let mut req = required;
        let mut rest = family;
        while rest != 0 {
            let t = rest.trailing_zeros();
            rest &= rest - 1;
            req |= 1u64 << (s | t);
        }
        rec(s + 1, size, family | 1u64 << s, req, visit);
        // exclude s, unless forced
        if required >> s & 1 == 0 {
            rec(s + 1, size, family, required, visit);
        }
    }
    let size = 1u32 << n;
    rec(1, size, 1, 0, &mut visit);
    Ok(())
}

pub fn count_union_closed(n: usize) -> Result<u64> {
    let mut count = 0;
    for_each_union_closed(n, |_| count += 1)?;
    Ok(count)
}

fn family_from_mask(ground: &GroundSet, mask: u64) -> SetFamily {
    let members = (0..ground.powerset_size() as u32)
        .filter(|s| mask >> s & 1 == 1)
        .map(Subset::from_bits)
        .collect();
    SetFamily::from_set(ground.clone(), members)
}

/// Every pre-topology (union-closed family containing `∅`) on `ground`.
pub fn pretopologies(ground: &GroundSet) -> Result<Vec<SetFamily>> {
    let n = ground.len();
    if n > MAX_N_PRETOPOLOGIES {
        return Err(too_large("pre-topologies", n, MAX_N_PRETOPOLOGIES));
    }
    let mut out = Vec::new();
    for_each_union_closed(n, |mask| out.push(family_from_mask(ground, mask)))?;
    Ok(out)
}

/// Every complementary choice function, via the interior of each pre-topology.
pub fn complementary_cfs(ground: &GroundSet) -> Result<Vec<ChoiceFunction>> {
    pretopologies(ground)?
        .iter()
        .map(pretop::interior_cf)
        .collect()
}

/// Counts complementary tables by filtering all contracting tables.
pub fn count_complementary_by_filter(n: usize) -> Result<u64> {
    let g = GroundSet::letters(n);
    let mut count = 0;
    for_each_contracting(&g, |f| {
        if f.analyze().complementary {
            count += 1;
        }
    })?;
    Ok(count)
}

/// Every preorder on `ground`, by filtering reflexive relations (n ≤ 4).
pub fn all_preorders(ground: &GroundSet) -> Result<Vec<Preorder>> {
    let n = ground.len();
    if n > 4 {
        return Err(too_large("preorders", n, 4));
    }
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (y, x)))
        .collect();
    let mut out = Vec::new();
    for mask in 0..1u32 << off.len() {
        let mut down: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for (k, &(y, x)) in off.iter().enumerate() {
            if mask >> k & 1 == 1 {
                down[x] = down[x].with(y);
            }
        }
        if let Ok(p) = Preorder::from_ideals(ground.clone(), down) {
            out.push(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contracting_counts() {
        let counts: Vec<usize> = (0..=3)
            .map(|n| contracting_tables(&GroundSet::letters(n)).unwrap().len())
            .collect();
        // product over menus of 2^|A|
        assert_eq!(counts, vec![1, 2, 16, 4096]);
        assert!(contracting_tables(&GroundSet::letters(4)).is_err());
    }

    #[test]
    fn contracting_tables_are_distinct() {
        let mut tables: Vec<Vec<Subset>> = contracting_tables(&GroundSet::letters(3))
            .unwrap()
            .into_iter()
            .map(|f| f.table().to_vec())
            .collect();
        tables.sort();
        tables.dedup();
        assert_eq!(tables.len(), 4096);
    }

    /// brute force over every family of subsets of an n-set
    fn brute_union_closed(n: usize) -> u64 {
        let size = 1u32 << n;
        (0..1u64 << size)
            .filter(|fam| {
                fam & 1 == 1
                    && (0..size).all(|a| {
                        fam >> a & 1 == 0 || (0..size).all(|b| fam >> b & 1 == 0 || fam >> (a | b) & 1 == 1)
                    })
            })
            .count() as u64
    }

    #[test]
    fn family_search_matches_brute_force() {
        for n in 0..=4 {
            assert_eq!(count_union_closed(n).unwrap(), brute_union_closed(n), "n = {n}");
        }
    }

    #[test]
    fn families_are_closed_and_distinct() {
        let g = GroundSet::letters(3);
        let fams = pretopologies(&g).unwrap();
        assert!(fams.iter().all(|f| f.is_union_closed()));
        let mut sorted: Vec<Vec<Subset>> = fams.iter().map(|f| f.iter().collect()).collect();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), fams.len());
    }

    #[test]
    fn small_counts_agree() {
        assert_eq!(count_union_closed(1).unwrap(), 2);
        assert_eq!(count_union_closed(2).unwrap(), 7);
        for n in 0..=3 {
            assert_eq!(count_complementary_by_filter(n).unwrap(), count_union_closed(n).unwrap());
        }
    }

    #[test]
    fn preorders_counted() {
        let counts: Vec<usize> = (1..=4)
            .map(|n| all_preorders(&GroundSet::letters(n)).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 4, 29, 355]);
    }
}
