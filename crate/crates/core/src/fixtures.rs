//! Named worked instances.

use crate::choicefn::{self, ChoiceFunction};
use crate::family::SetFamily;
use crate::ground::GroundSet;
use crate::preorder::Preorder;
use crate::pretop;
use crate::supermod::SetFunction;

/// Submodular `u` on `{a,b,c}` whose induced choice is not substitutable.
pub fn example5() -> SetFunction {
    // bitmask order: ∅, a, b, ab, c, ac, bc, abc
    SetFunction::from_integers(GroundSet::letters(3), &[0, 3, 2, 2, 2, 2, 4, 1]).expect("fixed table")
}

/// Interior of `{∅, {a,b}, {a,c}, X}`: complementary, but `a` has two minimal neighborhoods.
pub fn fork() -> ChoiceFunction {
    interior(&["", "ab", "ac", "abc"])
}

/// Interior of `{∅, {a,b}, {c}, X}`: the ideal choice of `a ~ b`, `c` apart.
pub fn blocks() -> ChoiceFunction {
    interior(&["", "ab", "c", "abc"])
}

/// Packaged choice `f_{a,b}` on `{a,b,c}`.
pub fn bundle() -> ChoiceFunction {
    let g = GroundSet::letters(3);
    let k = g.parse_compact("ab").expect("letters");
    choicefn::packaged(&g, k).expect("fixed subset")
}

/// Ideal choice of `a ≤ b` on `{a,b,c}`.
pub fn chain_ab() -> ChoiceFunction {
    let g = GroundSet::letters(3);
    let p = Preorder::from_pairs(g.clone(), [(0, 1)]).expect("fixed pairs");
    choicefn::ideal_cf(&g, &p).expect("same carrier")
}

fn interior(members: &[&str]) -> ChoiceFunction {
    let g = GroundSet::letters(3);
    let fam = SetFamily::from_compact(&g, members).expect("letters");
    pretop::interior_cf(&fam).expect("three points")
}
