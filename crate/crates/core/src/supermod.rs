//! Set functions, supermodularity, and the choice functions they induce.
//!
//! Values are exact rationals: the induced choice picks the inclusion-least
//! maximizer on each menu, and that depends on exact ties.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::choicefn::ChoiceFunction;
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::ground::{GroundSet, Subset};
use crate::weakorder::SubsetWeakOrder;

pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(num.into(), den.into())
}

pub fn integer(v: i64) -> Rational {
    BigRational::from_integer(v.into())
}

/// An exact-rational function on `2^X`, indexed by subset bitmask.
#[derive(Clone, PartialEq, Eq)]
pub struct SetFunction {
    ground: GroundSet,
    values: Vec<Rational>,
}

impl SetFunction {
    pub fn new(ground: GroundSet, values: Vec<Rational>) -> Result<Self> {
        ground.require_tables()?;
        if values.len() != ground.powerset_size() {
            return Err(Error::TableLength {
                got: values.len(),
                expected: ground.powerset_size(),
            });
        }
        Ok(SetFunction { ground, values })
    }

    pub fn from_fn(ground: GroundSet, value: impl Fn(Subset) -> Rational) -> Result<Self> {
        ground.require_tables()?;
        let values = ground.subsets().map(value).collect();
        SetFunction::new(ground, values)
    }

    /// Integer values in bitmask order.
    pub fn from_integers(ground: GroundSet, values: &[i64]) -> Result<Self> {
        SetFunction::new(ground, values.iter().map(|&v| integer(v)).collect())
    }

    /// `u(A) = |A|`.
    pub fn cardinality(ground: GroundSet) -> Result<Self> {
        SetFunction::from_fn(ground, |a| integer(a.len() as i64))
    }

    pub fn constant(ground: GroundSet, c: Rational) -> Result<Self> {
        SetFunction::from_fn(ground, |_| c.clone())
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn value(&self, a: Subset) -> &Rational {
        &self.values[a.index()]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn add(&self, other: &SetFunction) -> Result<SetFunction> {
        self.ground.check_same(&other.ground)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(SetFunction {
            ground: self.ground.clone(),
            values,
        })
    }

    pub fn scale(&self, c: &Rational) -> SetFunction {
        SetFunction {
            ground: self.ground.clone(),
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// Nondecreasing under inclusion (checked on covering pairs `A ⊂ A + i`).
    pub fn is_monotone(&self) -> bool {
        self.ground.subsets().all(|a| {
            (0..self.ground.len())
                .filter(|&i| !a.contains(i))
                .all(|i| self.value(a) <= self.value(a.with(i)))
        })
    }

    /// `u(A) + u(B) - u(A ∩ B) - u(A ∪ B)`; supermodularity asks this to be `<= 0`.
    fn excess(&self, a: Subset, b: Subset) -> Rational {
        self.value(a) + self.value(b) - self.value(a.intersection(b)) - self.value(a.union(b))
    }
}

impl fmt::Debug for SetFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.ground.subsets().map(|a| (self.ground.render(a), self.value(a).to_string())))
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Modularity {
    Supermodular,
    Submodular,
    Modular,
    Neither,
}

impl Modularity {
    pub fn name(self) -> &'static str {
        match self {
            Modularity::Supermodular => "supermodular",
            Modularity::Submodular => "submodular",
            Modularity::Modular => "modular",
            Modularity::Neither => "neither",
        }
    }

    fn from_violations(sup_ok: bool, sub_ok: bool) -> Self {
        match (sup_ok, sub_ok) {
            (true, true) => Modularity::Modular,
            (true, false) => Modularity::Supermodular,
            (false, true) => Modularity::Submodular,
            (false, false) => Modularity::Neither,
        }
    }
}

/// Classification plus the first violating pair of each inequality.
///
/// `P` is the point type: [`Subset`] on powersets, element index on lattices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularityClass<P = Subset> {
    pub kind: Modularity,
    /// A pair with `u(A) + u(B) > u(A ∩ B) + u(A ∪ B)`.
    pub supermodular_violation: Option<(P, P)>,
    /// A pair with `u(A) + u(B) < u(A ∩ B) + u(A ∪ B)`.
    pub submodular_violation: Option<(P, P)>,
}

impl<P> ModularityClass<P> {
    pub(crate) fn from_violations(sup: Option<(P, P)>, sub: Option<(P, P)>) -> Self {
        ModularityClass {
            kind: Modularity::from_violations(sup.is_none(), sub.is_none()),
            supermodular_violation: sup,
            submodular_violation: sub,
        }
    }

    pub fn is_supermodular(&self) -> bool {
        self.supermodular_violation.is_none()
    }

    pub fn is_submodular(&self) -> bool {
        self.submodular_violation.is_none()
    }

    /// Whether the class satisfies a requested property name.
    pub fn satisfies(&self, property: Modularity) -> bool {
        match property {
            Modularity::Supermodular => self.is_supermodular(),
            Modularity::Submodular => self.is_submodular(),
            Modularity::Modular => self.is_supermodular() && self.is_submodular(),
            Modularity::Neither => !self.is_supermodular() && !self.is_submodular(),
        }
    }
}

type Violations = (Option<(Subset, Subset)>, Option<(Subset, Subset)>);

/// First violations over all pairs `(A, B)` in bitmask order.
pub fn pairwise_violations(u: &SetFunction) -> Violations {
    let mut sup = None;
    let mut sub = None;
    'outer: for a in u.ground.subsets() {
        for b in u.ground.subsets() {
            let e = u.excess(a, b);
            if sup.is_none() && e.is_positive() {
                sup = Some((a, b));
            }
            if sub.is_none() && e.is_negative() {
                sub = Some((a, b));
            }
            if sup.is_some() && sub.is_some() {
                break 'outer;
            }
        }
    }
    (sup, sub)
}

/// First violations of the local exchange inequality
/// `u(A+i) + u(A+j)` vs `u(A) + u(A+i+j)` over `A` and `i < j` outside `A`;
/// reported as the pair `(A+i, A+j)`.
pub fn local_violations(u: &SetFunction) -> Violations {
    let n = u.ground.len();
    let mut sup = None;
    let mut sub = None;
    for a in u.ground.subsets() {
        for i in (0..n).filter(|&i| !a.contains(i)) {
            for j in (i + 1..n).filter(|&j| !a.contains(j)) {
                let (ai, aj) = (a.with(i), a.with(j));
                let e = u.excess(ai, aj);
                if sup.is_none() && e.is_positive() {
                    sup = Some((ai, aj));
                }
                if sub.is_none() && e.is_negative() {
                    sub = Some((ai, aj));
                }
            }
        }
    }
    (sup, sub)
}

/// Classifies by the pairwise sweep, cross-checked against the local sweep.
pub fn classify(u: &SetFunction) -> ModularityClass {
    let (sup, sub) = pairwise_violations(u);
    let (local_sup, local_sub) = local_violations(u);
    assert_eq!(
        (sup.is_none(), sub.is_none()),
        (local_sup.is_none(), local_sub.is_none()),
        "pairwise and local modularity sweeps disagree"
    );
    ModularityClass::from_violations(sup, sub)
}

/// `e_U(A) = 1` if `U ⊆ A`, else `0`.
pub fn elementary(ground: &GroundSet, u: Subset) -> Result<SetFunction> {
    if !ground.contains_subset(u) {
        return Err(Error::SubsetOutOfRange(u));
    }
    SetFunction::from_fn(ground.clone(), |a| {
        if u.is_subset_of(a) {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `u(A)` = number of open sets of `f` contained in `A`.
pub fn synthesize(f: &ChoiceFunction) -> Result<SetFunction> {
    f.require_complementary()?;
    let g = f.ground().clone();
    let mut count: Vec<i64> = g.subsets().map(|a| i64::from(f.choose(a) == a)).collect();
    for i in 0..g.len() {
        let bit = 1usize << i;
        for a in 0..count.len() {
            if a & bit != 0 {
                count[a] += count[a ^ bit];
            }
        }
    }
    SetFunction::from_integers(g, &count)
}

/// Default perturbation size `1 / (n + 1)`.
pub fn default_epsilon(n: usize) -> Rational {
    rational(1, n as i64 + 1)
}

/// `u_ε(B) = u(B) - ε |B|`.
pub fn perturb(u: &SetFunction, eps: &Rational) -> Result<SetFunction> {
    if !eps.is_positive() {
        return Err(Error::NonPositiveEpsilon);
    }
    SetFunction::from_fn(u.ground.clone(), |b| {
        u.value(b) - eps * integer(b.len() as i64)
    })
}

fn maximizers(u: &SetFunction, menu: Subset) -> Vec<Subset> {
    let best = menu
        .subsets()
        .map(|b| u.value(b))
        .max()
        .expect("every menu has the empty subset")
        .clone();
    menu.subsets().filter(|&b| *u.value(b) == best).collect()
}

/// All `B ⊆ A` attaining the maximum of `u` over `2^A`.
pub fn argmax_family(u: &SetFunction, menu: Subset) -> SetFamily {
    SetFamily::from_set(u.ground.clone(), maximizers(u, menu).into_iter().collect())
}

/// The inclusion-least maximizer on each menu.
///
/// The candidate is the intersection of all maximizers; it is accepted only
/// if it is itself a maximizer.
pub fn induce_cf(u: &SetFunction) -> Result<ChoiceFunction> {
    let g = &u.ground;
    let mut table = Vec::with_capacity(g.powerset_size());
    for menu in g.subsets() {
        let best = maximizers(u, menu);
        let meet = best.iter().fold(menu, |acc, &b| acc.intersection(b));
        if !best.contains(&meet) {
            let minimal: Vec<Subset> = best
                .iter()
                .copied()
                .filter(|&b| !best.iter().any(|&c| c != b && c.is_subset_of(b)))
                .collect();
            return Err(Error::NoUniqueMinimalMaximizer {
                menu: g.render(menu),
                left: g.render(minimal[0]),
                right: g.render(minimal[1]),
            });
        }
        table.push(meet);
    }
    ChoiceFunction::new(g.clone(), table)
}

/// Weak order `A ⪯ B` iff `u(A) <= u(B)`; rank = position among distinct values.
pub fn order_from_setfn(u: &SetFunction) -> Result<SubsetWeakOrder> {
    let mut distinct: Vec<&Rational> = u.values.iter().collect();
    distinct.sort();
    distinct.dedup();
    let rank = u
        .values
        .iter()
        .map(|v| distinct.binary_search(&v).expect("value is present") as i64)
        .collect();
    SubsetWeakOrder::new(u.ground.clone(), rank)
}

/// Result of [`is_supermodular_order`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderCheck {
    pub holds: bool,
    pub witness: Option<(Subset, Subset)>,
}

/// For all `(A, B)`: (`A ⪯ A∩B` or `B ⪯ A∪B`) and (`A∩B ≺ A` implies `B ≺ A∪B`).
pub fn is_supermodular_order(w: &SubsetWeakOrder) -> OrderCheck {
    let g = w.ground();
    for a in g.subsets() {
        for b in g.subsets() {
            let (meet, join) = (a.intersection(b), a.union(b));
            let first = w.weakly_below(a, meet) || w.weakly_below(b, join);
            let second = !w.strictly_below(meet, a) || w.strictly_below(b, join);
            if !(first && second) {
                return OrderCheck {
                    holds: false,
                    witness: Some((a, b)),
                };
            }
        }
    }
    OrderCheck {
        holds: true,
        witness: None,
    }
}

/// `f(A) = A*`, the unique inclusion-least top-ranked subset of `A`.
pub fn cf_from_order(w: &SubsetWeakOrder) -> Result<ChoiceFunction> {
    let g = w.ground();
    if let Some((a, b)) = is_supermodular_order(w).witness {
        return Err(Error::NotSupermodularOrder {
            left: g.render(a),
            right: g.render(b),
        });
    }
    let mut table = Vec::with_capacity(g.powerset_size());
    for menu in g.subsets() {
        let top = menu.subsets().map(|b| w.rank(b)).max().expect("menu has ∅");
        let best: Vec<Subset> = menu.subsets().filter(|&b| w.rank(b) == top).collect();
        let star = best.iter().fold(menu, |acc, &b| acc.intersection(b));
        // a) star ⊆ menu; b) star is top-ranked; c) every top-ranked B contains star
        let satisfies = |c: Subset| {
            c.is_subset_of(menu)
                && w.rank(c) == top
                && menu
                    .subsets()
                    .filter(|&b| w.weakly_below(c, b))
                    .all(|b| c.is_subset_of(b))
        };
        assert!(satisfies(star), "supermodular order without a least top-ranked subset");
        assert_eq!(
            best.iter().filter(|&&c| satisfies(c)).count(),
            1,
            "least top-ranked subset is not unique"
        );
        table.push(star);
    }
    ChoiceFunction::new(g.clone(), table)
}
