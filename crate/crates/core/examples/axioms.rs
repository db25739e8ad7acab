//! Run every axiom check on a few choice functions and print the first failure of each.

use complementary_choice::choicefn::{self, Axiom};
use complementary_choice::{fixtures, supermod, ChoiceFunction, GroundSet};

fn show(name: &str, f: &ChoiceFunction) {
    let g = f.ground();
    let r = f.analyze();
    println!("{name}");
    for axiom in Axiom::ALL {
        match r.witness(axiom) {
            None => println!("  {:<26} yes", axiom.name()),
            Some(w) => println!("  {:<26} no   {}", axiom.name(), w.describe(g)),
        }
    }
}

fn main() {
    let g = GroundSet::letters(3);
    show("packaged {a,b}", &choicefn::packaged(&g, g.parse_compact("ab").unwrap()).unwrap());
    show("threshold: at least two items", &choicefn::threshold(&g, 2).unwrap());
    show("fork", &fixtures::fork());
    show("choice induced by the example5 fixture", &supermod::induce_cf(&fixtures::example5()).unwrap());
}
