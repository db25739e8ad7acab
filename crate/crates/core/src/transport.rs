//! Direct images of choice functions along point maps, and lifts of a
//! complementary choice function to a completely complementary one.

use crate::choicefn::{ideal_cf, ChoiceFunction};
use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset, MASK_BITS};
use crate::preorder::Preorder;
use crate::pretop;

/// A total map `φ: Y → X` between ground sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointMap {
    source: GroundSet,
    target: GroundSet,
    image: Vec<usize>,
}

impl PointMap {
    pub fn new(source: GroundSet, target: GroundSet, image: Vec<usize>) -> Result<Self> {
        if image.len() != source.len() {
            return Err(Error::TableLength {
                got: image.len(),
                expected: source.len(),
            });
        }
        if let Some(&bad) = image.iter().find(|&&x| x >= target.len()) {
            return Err(Error::UnknownElement(format!("#{bad}")));
        }
        Ok(PointMap { source, target, image })
    }

    pub fn identity(ground: GroundSet) -> Self {
        let image = (0..ground.len()).collect();
        PointMap {
            source: ground.clone(),
            target: ground,
            image,
        }
    }

    pub fn source(&self) -> &GroundSet {
        &self.source
    }

    pub fn target(&self) -> &GroundSet {
        &self.target
    }

    pub fn apply(&self, y: usize) -> usize {
        self.image[y]
    }

    /// `φ(B)`
    pub fn image_of(&self, b: Subset) -> Subset {
        Subset::from_indices(b.elements().map(|y| self.image[y]))
    }

    /// `φ⁻¹(A)`
    pub fn preimage(&self, a: Subset) -> Subset {
        Subset::from_indices((0..self.image.len()).filter(|&y| a.contains(self.image[y])))
    }
}

/// `φ_*(g)(A) = φ(g(φ⁻¹(A)))`.
pub fn direct_image(phi: &PointMap, g: &ChoiceFunction) -> Result<ChoiceFunction> {
    phi.source.check_same(g.ground())?;
    ChoiceFunction::from_fn(phi.target.clone(), |a| phi.image_of(g.choose(phi.preimage(a))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftKind {
    /// Pairs `(x, U)` over all open `U ∋ x`.
    Full,
    /// Pairs `(x, U)` over minimal neighborhoods `U` of `x`.
    Economical,
}

impl LiftKind {
    pub fn name(self) -> &'static str {
        match self {
            LiftKind::Full => "full",
            LiftKind::Economical => "economical",
        }
    }
}

/// A completely complementary `g` on a set of pairs `(x, U)` whose direct
/// image along `(x, U) ↦ x` is a given choice function.
///
/// The pair order is `(y, V) <= (x, U)` iff `V ⊆ U`; `g` picks the largest
/// ideal of that preorder. Construction fails unless `g` is completely
/// complementary and transports back to the source exactly.
#[derive(Clone, Debug)]
pub struct Lift {
    kind: LiftKind,
    pairs: Vec<(usize, Subset)>,
    points: GroundSet,
    phi: PointMap,
    order: Preorder,
    g: ChoiceFunction,
    source: ChoiceFunction,
}

/// `x|{a,b}` for the pair `(x, {a,b})`.
pub fn pair_label(ground: &GroundSet, x: usize, u: Subset) -> String {
    format!("{}|{{{}}}", ground.name(x), ground.sorted_names(u).join(","))
}

/// The `U` of a label `x|{a,b}`, if the label has that shape over `ground`.
fn parse_pair_set(ground: &GroundSet, label: &str) -> Option<Subset> {
    let (_, rest) = label.split_once('|')?;
    let inner = rest.strip_prefix('{')?.strip_suffix('}')?;
    if inner.is_empty() {
        return Some(Subset::EMPTY);
    }
    ground.subset(inner.split(',')).ok()
}

impl Lift {
    fn build(f: &ChoiceFunction, kind: LiftKind, mut pairs: Vec<(usize, Subset)>) -> Result<Lift> {
        let x_ground = f.ground();
        pairs.sort_by_key(|&(x, u)| (u, x));
        let limit = x_ground.max_n().min(MASK_BITS);
        if pairs.len() > limit {
            return Err(Error::LiftTooLarge {
                required: pairs.len(),
                max_n: limit,
            });
        }
        let labels: Vec<String> = pairs.iter().map(|&(x, u)| pair_label(x_ground, x, u)).collect();
        let points = GroundSet::new(labels)?.with_max_n(x_ground.max_n());
        let phi = PointMap::new(points.clone(), x_ground.clone(), pairs.iter().map(|p| p.0).collect())?;
        let down = pairs
            .iter()
            .map(|&(_, u)| {
                Subset::from_indices(
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(_, &(_, v))| v.is_subset_of(u))
                        .map(|(k, _)| k),
                )
            })
            .collect();
        let order = Preorder::from_ideals(points.clone(), down)?;
        Lift::assemble(kind, pairs, points, phi, order, Some(f.clone()))
    }

    fn assemble(
        kind: LiftKind,
        pairs: Vec<(usize, Subset)>,
        points: GroundSet,
        phi: PointMap,
        order: Preorder,
        expected: Option<ChoiceFunction>,
    ) -> Result<Lift> {
        let g = ideal_cf(&points, &order)?;
        let report = g.analyze();
        if !report.completely_complementary {
            let detail = report
                .witness(crate::choicefn::Axiom::CompletelyComplementary)
                .map(|w| w.describe(&points))
                .unwrap_or_default();
            return Err(Error::LiftPostcondition(format!(
                "lifted choice is not completely complementary: {detail}"
            )));
        }
        let image = direct_image(&phi, &g)?;
        if let Some(f) = &expected {
            if let Some(a) = f.ground().subsets().find(|&a| f.choose(a) != image.choose(a)) {
                return Err(Error::LiftPostcondition(format!(
                    "transport differs from the source on menu {}",
                    f.ground().render(a)
                )));
            }
        }
        Ok(Lift {
            kind,
            pairs,
            points,
            phi,
            order,
            g,
            source: image,
        })
    }

    /// Rebuilds a lift from its exported parts and re-verifies it, including
    /// the transport identity when the source choice function is supplied.
    pub fn from_parts(
        kind: LiftKind,
        target: GroundSet,
        points: GroundSet,
        image: Vec<usize>,
        order: Preorder,
        expected: Option<&ChoiceFunction>,
    ) -> Result<Lift> {
        points.check_same(order.carrier())?;
        if let Some(f) = expected {
            target.check_same(f.ground())?;
        }
        let phi = PointMap::new(points.clone(), target.clone(), image)?;
        let pairs = (0..points.len())
            .map(|y| (phi.apply(y), parse_pair_set(&target, points.name(y)).unwrap_or(Subset::EMPTY)))
            .collect();
        Lift::assemble(kind, pairs, points, phi, order, expected.cloned())
    }

    pub fn kind(&self) -> LiftKind {
        self.kind
    }

    pub fn points(&self) -> &GroundSet {
        &self.points
    }

    pub fn phi(&self) -> &PointMap {
        &self.phi
    }

    pub fn order(&self) -> &Preorder {
        &self.order
    }

    pub fn lifted(&self) -> &ChoiceFunction {
        &self.g
    }

    /// The transported choice function `φ_*(g)`.
    pub fn source(&self) -> &ChoiceFunction {
        &self.source
    }

    /// Pair labels in point order.
    pub fn labels(&self) -> &[String] {
        self.points.names()
    }

    /// `(x, U)` pairs in point order; empty `U` for imported lifts.
    pub fn pairs(&self) -> &[(usize, Subset)] {
        &self.pairs
    }
}

/// Lift over every pair `(x, U)` with `U` open and `x ∈ U`.
pub fn theorem2_lift(f: &ChoiceFunction) -> Result<Lift> {
    f.require_complementary()?;
    let pairs = pretop::open_sets(f)
        .iter()
        .flat_map(|u| u.elements().map(move |x| (x, u)))
        .collect();
    Lift::build(f, LiftKind::Full, pairs)
}

/// Lift over pairs `(x, U)` with `U` a minimal neighborhood of `x`.
pub fn economical_lift(f: &ChoiceFunction) -> Result<Lift> {
    f.require_complementary()?;
    let mut pairs = Vec::new();
    for x in 0..f.ground().len() {
        for u in &pretop::minimal_neighborhoods(f, x)? {
            pairs.push((x, u));
        }
    }
    Lift::build(f, LiftKind::Economical, pairs)
}
