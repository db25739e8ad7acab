//! Open sets, interiors, and neighborhood systems of complementary choice functions.
//!
//! A complementary choice function is determined by its family of open sets
//! `St(f) = {A : f(A) = A}`, a pre-topology (contains `∅`, closed under
//! unions). Conversely any family of subsets, read as a base, yields the
//! interior choice function `A ↦ ∪{B ∈ base : B ⊆ A}`.

use crate::choicefn::{self, ChoiceFunction, Witness};
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::ground::{GroundSet, Subset};
use crate::preorder::Preorder;

/// `St(f)`: menus chosen entirely.
pub fn open_sets(f: &ChoiceFunction) -> SetFamily {
    let members = f.ground().subsets().filter(|&a| f.choose(a) == a).collect();
    SetFamily::from_set(f.ground().clone(), members)
}

/// Interior choice function of a base: `f(A)` is the union of base members inside `A`.
pub fn interior_cf(base: &SetFamily) -> Result<ChoiceFunction> {
    let g = base.ground().clone();
    g.require_tables()?;
    let mut table = vec![Subset::EMPTY; g.powerset_size()];
    for b in base {
        table[b.index()] = b;
    }
    // subset-sum (zeta) transform over OR: table[A] = ∪ {B ∈ base : B ⊆ A}
    for i in 0..g.len() {
        let bit = 1usize << i;
        for a in 0..table.len() {
            if a & bit != 0 {
                table[a] = table[a].union(table[a ^ bit]);
            }
        }
    }
    ChoiceFunction::new(g, table)
}

/// Open sets of a complementary `f`; `f` is the union of the packaged
/// choice functions over this family.
pub fn decompose(f: &ChoiceFunction) -> Result<SetFamily> {
    f.require_complementary()?;
    Ok(open_sets(f))
}

/// Union of packaged choice functions over a family.
pub fn recompose(family: &SetFamily) -> Result<ChoiceFunction> {
    let parts = family
        .iter()
        .map(|k| choicefn::packaged(family.ground(), k))
        .collect::<Result<Vec<_>>>()?;
    if parts.is_empty() {
        return ChoiceFunction::constant_empty(family.ground().clone());
    }
    choicefn::union(&parts)
}

/// `𝒩(x) = {N : x ∈ f(N)}`.
pub fn neighborhoods(f: &ChoiceFunction, x: usize) -> Result<SetFamily> {
    f.require_complementary()?;
    Ok(neighborhoods_unchecked(f, x))
}

fn neighborhoods_unchecked(f: &ChoiceFunction, x: usize) -> SetFamily {
    let members = f.ground().subsets().filter(|&n| f.choose(n).contains(x)).collect();
    SetFamily::from_set(f.ground().clone(), members)
}

/// `𝒰(x)`: open neighborhoods of `x`.
pub fn open_neighborhoods(f: &ChoiceFunction, x: usize) -> Result<SetFamily> {
    f.require_complementary()?;
    let members = f
        .ground()
        .subsets()
        .filter(|&u| u.contains(x) && f.choose(u) == u)
        .collect();
    Ok(SetFamily::from_set(f.ground().clone(), members))
}

/// `ℳ(x)`: inclusion-minimal neighborhoods of `x`.
pub fn minimal_neighborhoods(f: &ChoiceFunction, x: usize) -> Result<SetFamily> {
    Ok(neighborhoods(f, x)?.minimal_members())
}

/// Every neighborhood of `x` contains a minimal one.
pub fn is_continuous_at(f: &ChoiceFunction, x: usize) -> Result<bool> {
    let all = neighborhoods(f, x)?;
    let minimal = all.minimal_members();
    let continuous = all.iter().all(|n| minimal.iter().any(|m| m.is_subset_of(n)));
    Ok(continuous)
}

pub fn is_continuous(f: &ChoiceFunction) -> Result<bool> {
    for x in 0..f.ground().len() {
        if !is_continuous_at(f, x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Each point has exactly one minimal neighborhood.
pub fn has_unique_minimal_neighborhoods(f: &ChoiceFunction) -> Result<bool> {
    for x in 0..f.ground().len() {
        if minimal_neighborhoods(f, x)?.len() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per-point families of minimal neighborhoods satisfying
/// a) `x ∈ S` for `S ∈ ℳ(x)`,
/// b) members of `ℳ(x)` are pairwise incomparable,
/// c) `y ∈ S ∈ ℳ(x)` implies some `T ∈ ℳ(y)` with `T ⊆ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodSystem {
    ground: GroundSet,
    minimal: Vec<SetFamily>,
}

impl NeighborhoodSystem {
    pub fn new(ground: GroundSet, minimal: Vec<SetFamily>) -> Result<Self> {
        if minimal.len() != ground.len() {
            return Err(Error::TableLength {
                got: minimal.len(),
                expected: ground.len(),
            });
        }
        for fam in &minimal {
            ground.check_same(fam.ground())?;
        }
        let fail = |property, x: usize, detail: String| Error::InvalidNeighborhoodSystem {
            property,
            element: ground.name(x).to_string(),
            detail,
        };
        for (x, fam) in minimal.iter().enumerate() {
            if let Some(s) = fam.iter().find(|s| !s.contains(x)) {
                return Err(fail('a', x, format!("{} does not contain the point", ground.render(s))));
            }
        }
        for (x, fam) in minimal.iter().enumerate() {
            for s in fam {
                if let Some(t) = fam.iter().find(|&t| t != s && t.is_subset_of(s)) {
                    return Err(fail(
                        'b',
                        x,
                        format!("{} ⊆ {}", ground.render(t), ground.render(s)),
                    ));
                }
            }
        }
        for (x, fam) in minimal.iter().enumerate() {
            for s in fam {
                for y in s.elements() {
                    if !minimal[y].iter().any(|t| t.is_subset_of(s)) {
                        return Err(fail(
                            'c',
                            x,
                            format!(
                                "`{}` ∈ {} but no member of its family lies inside",
                                ground.name(y),
                                ground.render(s)
                            ),
                        ));
                    }
                }
            }
        }
        Ok(NeighborhoodSystem { ground, minimal })
    }

    /// Minimal neighborhoods read off a complementary choice function.
    pub fn of(f: &ChoiceFunction) -> Result<Self> {
        let minimal = (0..f.ground().len())
            .map(|x| minimal_neighborhoods(f, x))
            .collect::<Result<Vec<_>>>()?;
        NeighborhoodSystem::new(f.ground().clone(), minimal)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn minimal(&self, x: usize) -> &SetFamily {
        &self.minimal[x]
    }
}

/// `f(A) = {a ∈ A : some S ∈ ℳ(a) has S ⊆ A}`.
pub fn cf_from_neighborhood_system(m: &NeighborhoodSystem) -> Result<ChoiceFunction> {
    ChoiceFunction::from_fn(m.ground.clone(), |a| {
        Subset::from_indices(a.elements().filter(|&x| m.minimal[x].within(a).next().is_some()))
    })
}

/// `y <= x` iff `y` lies in the unique minimal neighborhood of `x`.
pub fn preorder_from_cf(f: &ChoiceFunction) -> Result<Preorder> {
    let report = f.analyze();
    if !report.completely_complementary {
        let g = f.ground();
        // prefer naming a point whose minimal neighborhoods are not unique
        if report.complementary {
            for x in 0..g.len() {
                let m = minimal_neighborhoods(f, x)?;
                if m.len() != 1 {
                    let w = report
                        .witness(choicefn::Axiom::CompletelyComplementary)
                        .map(|w| w.describe(g))
                        .unwrap_or_default();
                    return Err(Error::NotCompletelyComplementary(format!(
                        "`{}` has minimal neighborhoods {}; {}",
                        g.name(x),
                        m.render(),
                        w
                    )));
                }
            }
        }
        let w: Option<&Witness> = report.witness(choicefn::Axiom::CompletelyComplementary);
        return Err(Error::NotCompletelyComplementary(
            w.map(|w| w.describe(g)).unwrap_or_default(),
        ));
    }
    let down = (0..f.ground().len())
        .map(|x| {
            let m = minimal_neighborhoods(f, x)?;
            let mut it = m.iter();
            match (it.next(), it.next()) {
                (Some(s), None) => Ok(s),
                _ => Err(Error::NotCompletelyComplementary(format!(
                    "`{}` has minimal neighborhoods {}",
                    f.ground().name(x),
                    m.render()
                ))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Preorder::from_ideals(f.ground().clone(), down)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::choicefn::{ideal_cf, packaged};
    use crate::enumerate;

    fn x3() -> GroundSet {
        GroundSet::letters(3)
    }

    fn s(g: &GroundSet, spec: &str) -> Subset {
        g.parse_compact(spec).unwrap()
    }

    fn fam(g: &GroundSet, specs: &[&str]) -> SetFamily {
        SetFamily::from_compact(g, specs).unwrap()
    }

    /// interior of {∅,{a,b},{c},X}
    fn blocks() -> ChoiceFunction {
        interior_cf(&fam(&x3(), &["", "ab", "c", "abc"])).unwrap()
    }

    /// interior of {∅,{a,b},{a,c},X}
    fn fork() -> ChoiceFunction {
        interior_cf(&fam(&x3(), &["", "ab", "ac", "abc"])).unwrap()
    }

    #[test]
    fn open_sets_examples() {
        let g = x3();
        let f = packaged(&g, s(&g, "ab")).unwrap();
        assert_eq!(open_sets(&f), fam(&g, &["", "ab"]));
        let id = ChoiceFunction::identity(g.clone()).unwrap();
        assert_eq!(open_sets(&id).len(), 8);
        let base = fam(&g, &["ab", "c"]);
        assert_eq!(open_sets(&interior_cf(&base).unwrap()), base.union_closure().unwrap());
    }

    #[test]
    fn interior_examples() {
        let g = x3();
        assert_eq!(blocks().choose(s(&g, "ac")), s(&g, "c"));
        let trivial = interior_cf(&fam(&g, &[""])).unwrap();
        assert!(g.subsets().all(|a| trivial.choose(a).is_empty()));
        let base = fam(&g, &["ab", "ac"]);
        let f = interior_cf(&base).unwrap();
        for a in g.subsets() {
            let brute = base.within(a).fold(Subset::EMPTY, Subset::union);
            assert_eq!(f.choose(a), brute);
        }
        assert_eq!(f.choose(s(&g, "a")), Subset::EMPTY);
        assert_eq!(f.choose(s(&g, "ab")), s(&g, "ab"));
    }

    #[test]
    fn decompose_examples() {
        let g = x3();
        let f = blocks();
        let d = decompose(&f).unwrap();
        assert_eq!(d, fam(&g, &["", "ab", "c", "abc"]));
        assert_eq!(recompose(&d).unwrap(), f);
        let single = GroundSet::letters(1);
        let pa = packaged(&single, s(&single, "a")).unwrap();
        assert_eq!(decompose(&pa).unwrap(), fam(&single, &["", "a"]));
        let pa3 = packaged(&g, s(&g, "a")).unwrap();
        assert_eq!(decompose(&pa3).unwrap(), fam(&g, &["", "a"]));
        let bad = ChoiceFunction::from_fn(g.clone(), |a| if a.len() == 1 { a } else { Subset::EMPTY }).unwrap();
        assert!(matches!(decompose(&bad), Err(Error::NotComplementary(_))));
    }

    #[test]
    fn neighborhood_examples() {
        let g = x3();
        let f = blocks();
        assert_eq!(neighborhoods(&f, 0).unwrap(), fam(&g, &["ab", "abc"]));
        assert_eq!(neighborhoods(&f, 2).unwrap(), fam(&g, &["c", "ac", "bc", "abc"]));
        let p = packaged(&g, s(&g, "ab")).unwrap();
        assert!(neighborhoods(&p, 2).unwrap().is_empty());
        assert_eq!(minimal_neighborhoods(&p, 0).unwrap(), fam(&g, &["ab"]));
        let f = fork();
        assert_eq!(minimal_neighborhoods(&f, 0).unwrap(), fam(&g, &["ab", "ac"]));
        assert_eq!(minimal_neighborhoods(&f, 1).unwrap(), fam(&g, &["ab"]));
    }

    #[test]
    fn neighborhood_system_constructor() {
        let g = x3();
        let m = NeighborhoodSystem::new(
            g.clone(),
            vec![fam(&g, &["ab"]), fam(&g, &["ab"]), fam(&g, &["c"])],
        )
        .unwrap();
        assert_eq!(cf_from_neighborhood_system(&m).unwrap(), blocks());

        let singles = (0..3).map(|i| SetFamily::new(g.clone(), [Subset::singleton(i)]).unwrap()).collect();
        let m = NeighborhoodSystem::new(g.clone(), singles).unwrap();
        assert_eq!(cf_from_neighborhood_system(&m).unwrap(), ChoiceFunction::identity(g.clone()).unwrap());

        let m = NeighborhoodSystem::new(
            g.clone(),
            vec![fam(&g, &["ab", "ac"]), fam(&g, &["ab"]), fam(&g, &["ac"])],
        )
        .unwrap();
        let f = cf_from_neighborhood_system(&m).unwrap();
        assert_eq!(f.choose(s(&g, "ac")), s(&g, "ac"));
        assert_eq!(f, fork());
        for x in 0..3 {
            assert_eq!(&minimal_neighborhoods(&f, x).unwrap(), m.minimal(x));
        }
    }

    #[test]
    fn neighborhood_system_rejections() {
        let g = x3();
        let err = |m: Vec<SetFamily>| match NeighborhoodSystem::new(g.clone(), m) {
            Err(Error::InvalidNeighborhoodSystem { property, element, .. }) => (property, element),
            other => panic!("expected rejection, got {other:?}"),
        };
        assert_eq!(err(vec![fam(&g, &["b"]), fam(&g, &[]), fam(&g, &[])]), ('a', "a".into()));
        assert_eq!(err(vec![fam(&g, &["a", "ab"]), fam(&g, &[]), fam(&g, &[])]), ('b', "a".into()));
        assert_eq!(err(vec![fam(&g, &["ab"]), fam(&g, &[]), fam(&g, &[])]), ('c', "a".into()));
    }

    #[test]
    fn preorder_extraction() {
        let g = x3();
        let p = Preorder::from_pairs(g.clone(), [(0, 1)]).unwrap();
        assert_eq!(preorder_from_cf(&ideal_cf(&g, &p).unwrap()).unwrap(), p);

        let q = preorder_from_cf(&blocks()).unwrap();
        assert!(q.leq(0, 1) && q.leq(1, 0));
        assert_eq!(q.principal_ideal(2), s(&g, "c"));

        let err = preorder_from_cf(&fork()).unwrap_err();
        assert!(matches!(err, Error::NotCompletelyComplementary(_)));
        // pairwise criterion: f({a,b} ∩ {a,c}) = ∅ ≠ {a}
        let f = fork();
        assert_eq!(f.choose(s(&g, "a")), Subset::EMPTY);
        assert_eq!(f.choose(s(&g, "ab")).intersection(f.choose(s(&g, "ac"))), s(&g, "a"));
    }

    #[test]
    fn constant_empty_is_not_of_ideal_form() {
        let f = ChoiceFunction::constant_empty(x3()).unwrap();
        assert!(!f.analyze().completely_complementary);
        assert!(!has_unique_minimal_neighborhoods(&f).unwrap());
        assert!(preorder_from_cf(&f).is_err());
    }

    #[test]
    fn monotone_open_sets_are_union_closed() {
        for n in 0..=3 {
            let g = GroundSet::letters(n);
            for f in enumerate::contracting_tables(&g).unwrap() {
                if f.analyze().monotone {
                    assert!(open_sets(&f).is_union_closed());
                }
            }
        }
    }

    #[test]
    fn complementary_structure_on_small_sets() {
        for n in 0..=3 {
            let g = GroundSet::letters(n);
            for f in enumerate::complementary_cfs(&g).unwrap() {
                let opens = open_sets(&f);
                assert_eq!(recompose(&opens).unwrap(), f);
                assert_eq!(interior_cf(&opens).unwrap(), f);
                assert!(is_continuous(&f).unwrap());
                assert_eq!(opens.iter().collect::<Vec<_>>(), f.image());
                for x in 0..n {
                    let all = neighborhoods(&f, x).unwrap();
                    let open = open_neighborhoods(&f, x).unwrap();
                    for nb in &all {
                        // upward closed
                        for sup in nb.supersets_within(g.full()) {
                            assert!(all.contains(sup));
                        }
                        // refinement to an open neighborhood
                        assert!(open.contains(f.choose(nb)) && f.choose(nb).is_subset_of(nb));
                    }
                    for m in &minimal_neighborhoods(&f, x).unwrap() {
                        assert_eq!(f.choose(m), m, "minimal neighborhoods are open");
                    }
                }
                for a in g.subsets() {
                    let taut = Subset::from_indices(
                        a.elements().filter(|&x| neighborhoods(&f, x).unwrap().contains(a)),
                    );
                    assert_eq!(taut, f.choose(a));
                }
                let m = NeighborhoodSystem::of(&f).unwrap();
                assert_eq!(cf_from_neighborhood_system(&m).unwrap(), f);
            }
        }
    }

    #[test]
    fn interior_of_closure_matches_open_sets() {
        for n in 0..=3 {
            let g = GroundSet::letters(n);
            for fam in enumerate::pretopologies(&g).unwrap() {
                assert_eq!(open_sets(&interior_cf(&fam).unwrap()), fam);
            }
        }
    }
}
