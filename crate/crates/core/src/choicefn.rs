//! Choice functions on a finite powerset and their axioms.
//!
//! A [`ChoiceFunction`] is a full table `A ↦ f(A) ⊆ A` over all `2^n` menus.
//! [`ChoiceFunction::analyze`] checks every axiom by exhaustive quantifier
//! sweeps. Sweeps visit menus in increasing bitmask order (outer menu first,
//! then inner), and the first violation found is kept as the witness, so
//! reports are reproducible.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};
use crate::preorder::Preorder;

#[derive(Clone, PartialEq, Eq)]
pub struct ChoiceFunction {
    ground: GroundSet,
    table: Vec<Subset>,
}

impl ChoiceFunction {
    /// Builds from a table indexed by menu bitmask; rejects non-contracting entries.
    pub fn new(ground: GroundSet, table: Vec<Subset>) -> Result<Self> {
        ground.require_tables()?;
        if table.len() != ground.powerset_size() {
            return Err(Error::TableLength {
                got: table.len(),
                expected: ground.powerset_size(),
            });
        }
        for (i, &choice) in table.iter().enumerate() {
            let menu = Subset::from_bits(i as u32);
            if !choice.is_subset_of(menu) {
                return Err(Error::NotContracting {
                    menu: ground.render(menu),
                    choice: ground.render(choice),
                });
            }
        }
        Ok(ChoiceFunction { ground, table })
    }

    pub fn from_fn(ground: GroundSet, rule: impl Fn(Subset) -> Subset) -> Result<Self> {
        ground.require_tables()?;
        let table = ground.subsets().map(rule).collect();
        ChoiceFunction::new(ground, table)
    }

    /// `f(A) = A`.
    pub fn identity(ground: GroundSet) -> Result<Self> {
        ChoiceFunction::from_fn(ground, |a| a)
    }

    /// `f(A) = ∅`.
    pub fn constant_empty(ground: GroundSet) -> Result<Self> {
        ChoiceFunction::from_fn(ground, |_| Subset::EMPTY)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn choose(&self, menu: Subset) -> Subset {
        self.table[menu.index()]
    }

    pub fn table(&self) -> &[Subset] {
        &self.table
    }

    /// `Im(f)` in increasing bitmask order, deduplicated.
    pub fn image(&self) -> Vec<Subset> {
        let mut img = self.table.clone();
        img.sort_unstable();
        img.dedup();
        img
    }

    fn menus(&self) -> impl Iterator<Item = Subset> {
        self.ground.subsets()
    }

    pub fn analyze(&self) -> AxiomReport {
        let mut witnesses = BTreeMap::new();
        let mut record = |axiom, w: Option<Witness>| {
            if let Some(w) = w {
                witnesses.insert(axiom, w);
                false
            } else {
                true
            }
        };
        let consistency = self.consistency_violation();
        let monotonicity = self.monotonicity_violation();
        let complementary_witness = consistency.or(monotonicity);
        let cc_witness = consistency
            .or_else(|| self.full_menu_violation())
            .or_else(|| self.intersection_violation());

        let consistent = record(Axiom::Consistent, consistency);
        let monotone = record(Axiom::Monotone, monotonicity);
        let idempotent = record(Axiom::Idempotent, self.idempotency_violation());
        let subadditive = record(Axiom::Subadditive, self.subadditivity_violation());
        let superadditive = record(Axiom::Superadditive, self.superadditivity_violation());
        let substitutable_heredity = record(Axiom::SubstitutableHeredity, self.heredity_violation());
        let complementary = record(Axiom::Complementary, complementary_witness);
        let completely_complementary = record(Axiom::CompletelyComplementary, cc_witness);

        assert_eq!(superadditive, monotone, "superadditivity must coincide with monotonicity");
        assert_eq!(subadditive, substitutable_heredity, "subadditivity must coincide with heredity");

        AxiomReport {
            consistent,
            monotone,
            idempotent,
            subadditive,
            superadditive,
            substitutable_heredity,
            complementary,
            completely_complementary,
            witnesses,
        }
    }

    /// `f(A) ⊆ B ⊆ A` but `f(B) ≠ f(A)`.
    fn consistency_violation(&self) -> Option<Witness> {
        self.menus().find_map(|a| {
            let fa = self.choose(a);
            fa.supersets_within(a)
                .find(|&b| self.choose(b) != fa)
                .map(|b| Witness::Consistency { menu: a, sub_menu: b })
        })
    }

    /// `A ⊆ B` but `f(A) ⊄ f(B)`.
    fn monotonicity_violation(&self) -> Option<Witness> {
        let full = self.ground.full();
        self.menus().find_map(|a| {
            let fa = self.choose(a);
            a.supersets_within(full)
                .find(|&b| !fa.is_subset_of(self.choose(b)))
                .map(|b| Witness::Monotonicity { smaller: a, larger: b })
        })
    }

    fn idempotency_violation(&self) -> Option<Witness> {
        self.menus()
            .find(|&a| self.choose(self.choose(a)) != self.choose(a))
            .map(|menu| Witness::Idempotency { menu })
    }

    fn pairs(&self) -> impl Iterator<Item = (Subset, Subset)> + '_ {
        self.menus().flat_map(move |a| self.menus().map(move |b| (a, b)))
    }

    /// `f(A ∪ B) ⊄ f(A) ∪ f(B)`.
    fn subadditivity_violation(&self) -> Option<Witness> {
        self.pairs()
            .find(|&(a, b)| {
                !self
                    .choose(a.union(b))
                    .is_subset_of(self.choose(a).union(self.choose(b)))
            })
            .map(|(left, right)| Witness::Subadditivity { left, right })
    }

    /// `f(A) ∪ f(B) ⊄ f(A ∪ B)`.
    fn superadditivity_violation(&self) -> Option<Witness> {
        self.pairs()
            .find(|&(a, b)| {
                !self
                    .choose(a)
                    .union(self.choose(b))
                    .is_subset_of(self.choose(a.union(b)))
            })
            .map(|(left, right)| Witness::Superadditivity { left, right })
    }

    /// `A ⊆ B` and some `x ∈ f(B) ∩ A` with `x ∉ f(A)`.
    fn heredity_violation(&self) -> Option<Witness> {
        let full = self.ground.full();
        self.menus().find_map(|a| {
            let fa = self.choose(a);
            a.supersets_within(full).find_map(|b| {
                self.choose(b)
                    .intersection(a)
                    .difference(fa)
                    .elements()
                    .next()
                    .map(|element| Witness::Heredity {
                        smaller: a,
                        larger: b,
                        element,
                    })
            })
        })
    }

    /// The empty family: its intersection is `X`, so `f(X) = X` is required.
    fn full_menu_violation(&self) -> Option<Witness> {
        let full = self.ground.full();
        (self.choose(full) != full).then_some(Witness::FullMenu)
    }

    /// `f(A ∩ B) ≠ f(A) ∩ f(B)`.
    ///
    /// On a finite ground set every family of menus is finite, and
    /// `f(A1 ∩ ... ∩ Ak) = f(A1) ∩ ... ∩ f(Ak)` follows from the pairwise
    /// identity by induction on `k`. Together with the empty family this
    /// covers arbitrary families.
    fn intersection_violation(&self) -> Option<Witness> {
        self.pairs()
            .find(|&(a, b)| self.choose(a.intersection(b)) != self.choose(a).intersection(self.choose(b)))
            .map(|(left, right)| Witness::Intersection { left, right })
    }

    /// For a monotone `f`: consistency holds exactly when idempotency does.
    pub fn lemma1_check(&self) -> Result<bool> {
        if let Some(w) = self.monotonicity_violation() {
            return Err(Error::NotMonotone(w.describe(&self.ground)));
        }
        let consistent = self.consistency_violation().is_none();
        let idempotent = self.idempotency_violation().is_none();
        Ok(consistent == idempotent)
    }

    /// Fails with the complementarity witness unless `f` is complementary.
    pub fn require_complementary(&self) -> Result<()> {
        match self.consistency_violation().or_else(|| self.monotonicity_violation()) {
            None => Ok(()),
            Some(w) => Err(Error::NotComplementary(w.describe(&self.ground))),
        }
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        for a in self.menus() {
            out.push_str(&format!(
                "{} -> {}\n",
                self.ground.render(a),
                self.ground.render(self.choose(a))
            ));
        }
        out
    }
}

impl fmt::Debug for ChoiceFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(
                self.menus()
                    .map(|a| (self.ground.render(a), self.ground.render(self.choose(a)))),
            )
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Consistent,
    Monotone,
    Idempotent,
    Subadditive,
    Superadditive,
    #[serde(rename = "substitutable")]
    SubstitutableHeredity,
    Complementary,
    CompletelyComplementary,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::Consistent,
        Axiom::Monotone,
        Axiom::Idempotent,
        Axiom::Subadditive,
        Axiom::Superadditive,
        Axiom::SubstitutableHeredity,
        Axiom::Complementary,
        Axiom::CompletelyComplementary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Consistent => "consistent",
            Axiom::Monotone => "monotone",
            Axiom::Idempotent => "idempotent",
            Axiom::Subadditive => "subadditive",
            Axiom::Superadditive => "superadditive",
            Axiom::SubstitutableHeredity => "substitutable",
            Axiom::Complementary => "complementary",
            Axiom::CompletelyComplementary => "completely-complementary",
        }
    }

    pub fn parse(s: &str) -> Option<Axiom> {
        match s {
            "heredity" | "substitutable-heredity" => Some(Axiom::SubstitutableHeredity),
            _ => Axiom::ALL.into_iter().find(|a| a.name() == s),
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A concrete instance violating one axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    Consistency { menu: Subset, sub_menu: Subset },
    Monotonicity { smaller: Subset, larger: Subset },
    Idempotency { menu: Subset },
    Subadditivity { left: Subset, right: Subset },
    Superadditivity { left: Subset, right: Subset },
    Heredity { smaller: Subset, larger: Subset, element: usize },
    FullMenu,
    Intersection { left: Subset, right: Subset },
}

impl Witness {
    /// Re-evaluates the instance against `f`; true when it is still a violation.
    pub fn is_violation(&self, f: &ChoiceFunction) -> bool {
        match *self {
            Witness::Consistency { menu, sub_menu } => {
                f.choose(menu).is_subset_of(sub_menu)
                    && sub_menu.is_subset_of(menu)
                    && f.choose(sub_menu) != f.choose(menu)
            }
            Witness::Monotonicity { smaller, larger } => {
                smaller.is_subset_of(larger) && !f.choose(smaller).is_subset_of(f.choose(larger))
            }
            Witness::Idempotency { menu } => f.choose(f.choose(menu)) != f.choose(menu),
            Witness::Subadditivity { left, right } => !f
                .choose(left.union(right))
                .is_subset_of(f.choose(left).union(f.choose(right))),
            Witness::Superadditivity { left, right } => !f
                .choose(left)
                .union(f.choose(right))
                .is_subset_of(f.choose(left.union(right))),
            Witness::Heredity { smaller, larger, element } => {
                smaller.is_subset_of(larger)
                    && smaller.contains(element)
                    && f.choose(larger).contains(element)
                    && !f.choose(smaller).contains(element)
            }
            Witness::FullMenu => {
                let full = f.ground().full();
                f.choose(full) != full
            }
            Witness::Intersection { left, right } => {
                f.choose(left.intersection(right)) != f.choose(left).intersection(f.choose(right))
            }
        }
    }

    pub fn describe(&self, g: &GroundSet) -> String {
        let r = |s: Subset| g.render(s);
        match *self {
            Witness::Consistency { menu, sub_menu } => {
                format!("f(A) ⊆ B ⊆ A but f(B) ≠ f(A) for A = {}, B = {}", r(menu), r(sub_menu))
            }
            Witness::Monotonicity { smaller, larger } => {
                format!("A ⊆ B but f(A) ⊄ f(B) for A = {}, B = {}", r(smaller), r(larger))
            }
            Witness::Idempotency { menu } => format!("f(f(A)) ≠ f(A) for A = {}", r(menu)),
            Witness::Subadditivity { left, right } => {
                format!("f(A ∪ B) ⊄ f(A) ∪ f(B) for A = {}, B = {}", r(left), r(right))
            }
            Witness::Superadditivity { left, right } => {
                format!("f(A) ∪ f(B) ⊄ f(A ∪ B) for A = {}, B = {}", r(left), r(right))
            }
            Witness::Heredity { smaller, larger, element } => format!(
                "`{}` is chosen from {} but not from {}",
                g.name(element),
                r(larger),
                r(smaller)
            ),
            Witness::FullMenu => "f(X) ≠ X".to_string(),
            Witness::Intersection { left, right } => {
                format!("f(A ∩ B) ≠ f(A) ∩ f(B) for A = {}, B = {}", r(left), r(right))
            }
        }
    }
}

/// Outcome of [`ChoiceFunction::analyze`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub consistent: bool,
    pub monotone: bool,
    pub idempotent: bool,
    pub subadditive: bool,
    pub superadditive: bool,
    pub substitutable_heredity: bool,
    pub complementary: bool,
    pub completely_complementary: bool,
    pub witnesses: BTreeMap<Axiom, Witness>,
}

impl AxiomReport {
    pub fn holds(&self, axiom: Axiom) -> bool {
        match axiom {
            Axiom::Consistent => self.consistent,
            Axiom::Monotone => self.monotone,
            Axiom::Idempotent => self.idempotent,
            Axiom::Subadditive => self.subadditive,
            Axiom::Superadditive => self.superadditive,
            Axiom::SubstitutableHeredity => self.substitutable_heredity,
            Axiom::Complementary => self.complementary,
            Axiom::CompletelyComplementary => self.completely_complementary,
        }
    }

    pub fn witness(&self, axiom: Axiom) -> Option<&Witness> {
        self.witnesses.get(&axiom)
    }
}

/// Packaged choice: `f_K(A) = K` when `K ⊆ A`, else `∅`.
pub fn packaged(ground: &GroundSet, package: Subset) -> Result<ChoiceFunction> {
    if !ground.contains_subset(package) {
        return Err(Error::SubsetOutOfRange(package));
    }
    ChoiceFunction::from_fn(ground.clone(), |a| {
        if package.is_subset_of(a) {
            package
        } else {
            Subset::EMPTY
        }
    })
}

/// Largest ideal of `order` contained in each menu.
pub fn ideal_cf(ground: &GroundSet, order: &Preorder) -> Result<ChoiceFunction> {
    ground.check_same(order.carrier())?;
    ChoiceFunction::from_fn(ground.clone(), |a| order.largest_ideal_in(a))
}

/// Size parameter of a threshold choice function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cardinality {
    Finite(usize),
    Infinite,
}

impl From<usize> for Cardinality {
    fn from(k: usize) -> Self {
        Cardinality::Finite(k)
    }
}

/// `f(A) = A` when `|A| >= k`, else `∅`.
pub fn threshold(ground: &GroundSet, k: impl Into<Cardinality>) -> Result<ChoiceFunction> {
    match k.into() {
        Cardinality::Infinite => Err(Error::RequiresInfiniteGround("threshold with k = ∞")),
        Cardinality::Finite(0) => Err(Error::NonPositiveThreshold),
        Cardinality::Finite(k) => {
            ChoiceFunction::from_fn(ground.clone(), |a| if a.len() >= k { a } else { Subset::EMPTY })
        }
    }
}

/// `f(A) = A` when `X - A` is finite. Always an error here: on a finite
/// ground set this is the identity and the intended object does not exist.
pub fn cofinite(_ground: &GroundSet) -> Result<ChoiceFunction> {
    Err(Error::RequiresInfiniteGround("cofinite choice"))
}

/// Pointwise union `(∪ f_i)(A) = ∪ f_i(A)`.
pub fn union(fs: &[ChoiceFunction]) -> Result<ChoiceFunction> {
    let first = fs.first().ok_or(Error::EmptyUnion)?;
    for f in &fs[1..] {
        first.ground.check_same(&f.ground)?;
    }
    let table = (0..first.table.len())
        .map(|i| fs.iter().fold(Subset::EMPTY, |acc, f| acc.union(f.table[i])))
        .collect();
    ChoiceFunction::new(first.ground.clone(), table)
}
