//! Choice functions on finite lattices: contracting maps `f(x) <= x`.

use std::sync::Arc;

use num_traits::Signed;

use crate::choicefn::ChoiceFunction;
use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};
use crate::lattice::FiniteLattice;
use crate::supermod::{integer, ModularityClass, Rational, SetFunction};

/// Version of [`reference_suite`]; bump whenever its contents change.
pub const SUITE_VERSION: u32 = 1;

/// The fixed lattices used by the lattice test suite.
pub fn reference_suite() -> Vec<(String, FiniteLattice)> {
    let mut out = vec![(
        "boolean-3".to_string(),
        FiniteLattice::boolean(&GroundSet::letters(3)).expect("eight elements"),
    )];
    for len in 1..=6 {
        out.push((format!("chain-{len}"), FiniteLattice::chain(len)));
    }
    out.push(("grid-3x3".to_string(), FiniteLattice::grid(3, 3)));
    for m in [12, 24, 36] {
        out.push((format!("divisors-{m}"), FiniteLattice::divisors(m)));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeCF {
    lattice: Arc<FiniteLattice>,
    table: Vec<usize>,
}

impl LatticeCF {
    pub fn new(lattice: Arc<FiniteLattice>, table: Vec<usize>) -> Result<Self> {
        if table.len() != lattice.len() {
            return Err(Error::TableLength {
                got: table.len(),
                expected: lattice.len(),
            });
        }
        for (x, &fx) in table.iter().enumerate() {
            if fx >= lattice.len() || !lattice.leq(fx, x) {
                let image = lattice.names().get(fx).cloned().unwrap_or_else(|| fx.to_string());
                return Err(Error::LatticeNotContracting(image, lattice.name(x).to_string()));
            }
        }
        Ok(LatticeCF { lattice, table })
    }

    pub fn from_fn(lattice: Arc<FiniteLattice>, rule: impl Fn(usize) -> usize) -> Result<Self> {
        let table = lattice.elements().map(rule).collect();
        LatticeCF::new(lattice, table)
    }

    pub fn identity(lattice: Arc<FiniteLattice>) -> Self {
        let table = lattice.elements().collect();
        LatticeCF { lattice, table }
    }

    pub fn constant_bottom(lattice: Arc<FiniteLattice>) -> Self {
        let table = vec![lattice.bottom(); lattice.len()];
        LatticeCF { lattice, table }
    }

    pub fn lattice(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// The same map read as a powerset choice function; the lattice must be `2^X`.
    pub fn to_powerset(&self, ground: &GroundSet) -> Result<ChoiceFunction> {
        if *self.lattice != FiniteLattice::boolean(ground)? {
            return Err(Error::LatticeMismatch);
        }
        ChoiceFunction::new(ground.clone(), self.table.iter().map(|&x| Subset::from_bits(x as u32)).collect())
    }

    /// A powerset choice function as a map on `2^X`.
    pub fn from_powerset(f: &ChoiceFunction) -> Result<Self> {
        let lattice = Arc::new(FiniteLattice::boolean(f.ground())?);
        let table = f.table().iter().map(|s| s.index()).collect();
        LatticeCF::new(lattice, table)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeAxiomReport {
    pub consistent: bool,
    pub monotone: bool,
    pub complementary: bool,
    /// `(x, y)` with `f(x) <= y <= x` but `f(y) != f(x)`.
    pub consistency_witness: Option<(usize, usize)>,
    /// `(x, y)` with `x <= y` but `f(x) </= f(y)`.
    pub monotonicity_witness: Option<(usize, usize)>,
}

pub fn analyze_lattice(f: &LatticeCF) -> LatticeAxiomReport {
    let l = &f.lattice;
    let mut consistency_witness = None;
    let mut monotonicity_witness = None;
    'outer: for x in l.elements() {
        for y in l.elements() {
            if consistency_witness.is_none() && l.leq(f.apply(x), y) && l.leq(y, x) && f.apply(y) != f.apply(x) {
                consistency_witness = Some((x, y));
            }
            if monotonicity_witness.is_none() && l.leq(x, y) && !l.leq(f.apply(x), f.apply(y)) {
                monotonicity_witness = Some((x, y));
            }
            if consistency_witness.is_some() && monotonicity_witness.is_some() {
                break 'outer;
            }
        }
    }
    let consistent = consistency_witness.is_none();
    let monotone = monotonicity_witness.is_none();
    LatticeAxiomReport {
        consistent,
        monotone,
        complementary: consistent && monotone,
        consistency_witness,
        monotonicity_witness,
    }
}

fn require_complementary(f: &LatticeCF) -> Result<()> {
    let r = analyze_lattice(f);
    let l = &f.lattice;
    if let Some((x, y)) = r.consistency_witness {
        return Err(Error::LatticeNotComplementary(format!(
            "not consistent: f({}) = {} <= {} but f({}) = {}",
            l.name(x),
            l.name(f.apply(x)),
            l.name(y),
            l.name(y),
            l.name(f.apply(y))
        )));
    }
    if let Some((x, y)) = r.monotonicity_witness {
        return Err(Error::LatticeNotComplementary(format!(
            "not monotone: {} <= {} but f({}) = {} is not below f({}) = {}",
            l.name(x),
            l.name(y),
            l.name(x),
            l.name(f.apply(x)),
            l.name(y),
            l.name(f.apply(y))
        )));
    }
    Ok(())
}

/// Checks that `family` contains the bottom and is closed under pairwise joins.
///
/// On a finite lattice this is the same as being closed under all joins,
/// the empty join being the bottom.
pub fn check_join_closed(lattice: &FiniteLattice, family: &[usize]) -> Result<()> {
    let mut member = vec![false; lattice.len()];
    for &x in family {
        if x >= lattice.len() {
            return Err(Error::UnknownElement(x.to_string()));
        }
        member[x] = true;
    }
    if !member[lattice.bottom()] {
        return Err(Error::MissingBottom(lattice.name(lattice.bottom()).to_string()));
    }
    for x in lattice.elements().filter(|&x| member[x]) {
        for y in lattice.elements().filter(|&y| member[y]) {
            let j = lattice.join(x, y);
            if !member[j] {
                return Err(Error::NotJoinClosed(
                    lattice.name(x).to_string(),
                    lattice.name(y).to_string(),
                    lattice.name(j).to_string(),
                ));
            }
        }
    }
    Ok(())
}

/// `Fix(f) = {x : f(x) = x}` in element order.
pub fn fix_set(f: &LatticeCF) -> Result<Vec<usize>> {
    require_complementary(f)?;
    let fixed: Vec<usize> = f.lattice.elements().filter(|&x| f.apply(x) == x).collect();
    let mut image = f.table.clone();
    image.sort_unstable();
    image.dedup();
    assert_eq!(fixed, image, "fixed elements differ from the image");
    check_join_closed(&f.lattice, &fixed).expect("fixed elements of a complementary map are join-closed");
    Ok(fixed)
}

/// `f(x) = ⋁ {z ∈ F : z <= x}`.
pub fn cf_from_fix(lattice: Arc<FiniteLattice>, family: &[usize]) -> Result<LatticeCF> {
    check_join_closed(&lattice, family)?;
    let l = lattice.clone();
    LatticeCF::from_fn(lattice, |x| l.join_all(family.iter().copied().filter(|&z| l.leq(z, x))))
}

/// Every join-closed family containing the bottom, as sorted element lists.
pub fn join_closed_families(lattice: &FiniteLattice) -> Result<Vec<Vec<usize>>> {
    let n = lattice.len();
    if n > 16 {
        return Err(Error::EnumerationTooLarge(format!("families on a lattice of {n} elements")));
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        let fam: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
        if check_join_closed(lattice, &fam).is_ok() {
            out.push(fam);
        }
    }
    Ok(out)
}

/// Calls `visit` with every contracting map on `lattice`.
pub fn for_each_contracting(lattice: &Arc<FiniteLattice>, mut visit: impl FnMut(&LatticeCF)) -> Result<()> {
    let downs: Vec<Vec<usize>> = lattice.elements().map(|x| lattice.downset(x)).collect();
    let total = downs.iter().try_fold(1u64, |acc, d| acc.checked_mul(d.len() as u64));
    if total.is_none_or(|t| t > 1 << 22) {
        return Err(Error::EnumerationTooLarge(format!(
            "contracting maps on a lattice of {} elements",
            lattice.len()
        )));
    }
    let mut pos = vec![0usize; downs.len()];
    loop {
        let table = pos.iter().zip(&downs).map(|(&p, d)| d[p]).collect();
        visit(&LatticeCF {
            lattice: lattice.clone(),
            table,
        });
        let mut k = 0;
        loop {
            if k == pos.len() {
                return Ok(());
            }
            pos[k] += 1;
            if pos[k] < downs[k].len() {
                break;
            }
            pos[k] = 0;
            k += 1;
        }
    }
}

/// An exact-rational function on a lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeFunction {
    lattice: Arc<FiniteLattice>,
    values: Vec<Rational>,
}

impl LatticeFunction {
    pub fn new(lattice: Arc<FiniteLattice>, values: Vec<Rational>) -> Result<Self> {
        if values.len() != lattice.len() {
            return Err(Error::TableLength {
                got: values.len(),
                expected: lattice.len(),
            });
        }
        Ok(LatticeFunction { lattice, values })
    }

    pub fn from_fn(lattice: Arc<FiniteLattice>, value: impl Fn(usize) -> Rational) -> Self {
        let values = lattice.elements().map(value).collect();
        LatticeFunction { lattice, values }
    }

    /// `u(x) = |L(x)|`.
    pub fn downset_size(lattice: Arc<FiniteLattice>) -> Self {
        let l = lattice.clone();
        LatticeFunction::from_fn(lattice, |x| integer(l.downset(x).len() as i64))
    }

    pub fn from_set_function(u: &SetFunction) -> Result<Self> {
        let lattice = Arc::new(FiniteLattice::boolean(u.ground())?);
        LatticeFunction::new(lattice, u.values().to_vec())
    }

    pub fn lattice(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    pub fn value(&self, x: usize) -> &Rational {
        &self.values[x]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// Pair sweep over `L × L` in element order.
pub fn classify_lattice(u: &LatticeFunction) -> ModularityClass<usize> {
    let l = &u.lattice;
    let mut sup = None;
    let mut sub = None;
    for x in l.elements() {
        for y in l.elements() {
            let e = u.value(x) + u.value(y) - u.value(l.meet(x, y)) - u.value(l.join(x, y));
            if sup.is_none() && e.is_positive() {
                sup = Some((x, y));
            }
            if sub.is_none() && e.is_negative() {
                sub = Some((x, y));
            }
        }
    }
    ModularityClass::from_violations(sup, sub)
}

/// `u(x) = |Fix(f) ∩ L(x)|`.
pub fn theorem4_synthesize(f: &LatticeCF) -> Result<LatticeFunction> {
    let fixed = fix_set(f)?;
    let l = f.lattice.clone();
    Ok(LatticeFunction::from_fn(f.lattice.clone(), |x| {
        integer(fixed.iter().filter(|&&z| l.leq(z, x)).count() as i64)
    }))
}

/// Elements of `L(x)` attaining the maximum of `u` there.
pub fn argmax_downset(u: &LatticeFunction, x: usize) -> Vec<usize> {
    let down = u.lattice.downset(x);
    let best = down.iter().map(|&y| u.value(y)).max().expect("x is in its downset");
    down.iter().copied().filter(|&y| u.value(y) == best).collect()
}

/// The least maximizer of `u` on each `L(x)`, taken as the meet of all
/// maximizers and accepted only if it is itself a maximizer.
pub fn induce_lattice_cf(u: &LatticeFunction) -> Result<LatticeCF> {
    let l = &u.lattice;
    let mut table = Vec::with_capacity(l.len());
    for x in l.elements() {
        let best = argmax_downset(u, x);
        let meet = l.meet_all(best.iter().copied());
        if !best.contains(&meet) {
            let minimal: Vec<usize> = best
                .iter()
                .copied()
                .filter(|&b| !best.iter().any(|&c| l.lt(c, b)))
                .collect();
            return Err(Error::NoUniqueMinimalMaximizer {
                menu: l.name(x).to_string(),
                left: l.name(minimal[0]).to_string(),
                right: l.name(minimal[1]).to_string(),
            });
        }
        table.push(meet);
    }
    LatticeCF::new(l.clone(), table)
}

/// Whether `u` is nondecreasing along the order.
pub fn is_monotone(u: &LatticeFunction) -> bool {
    let l = &u.lattice;
    l.strict_pairs().into_iter().all(|(y, x)| u.value(y) <= u.value(x))
}

/// Whether every value is an integer.
pub fn is_integer_valued(u: &LatticeFunction) -> bool {
    u.values.iter().all(|v| v.is_integer())
}
