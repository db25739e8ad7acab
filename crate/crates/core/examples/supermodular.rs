//! Synthesize a supermodular function whose maximizers reproduce a choice,
//! then perturb it so every menu has a single maximizer.

use complementary_choice::supermod::{self, rational};
use complementary_choice::{fixtures, GroundSet};

fn main() {
    let f = fixtures::blocks();
    let g: &GroundSet = f.ground();
    let u = supermod::synthesize(&f).unwrap();
    let class = supermod::classify(&u);
    println!("u = {u:?}");
    println!("class: {}", class.kind.name());

    let back = supermod::induce_cf(&u).unwrap();
    assert_eq!(back, f);

    let eps = rational(1, 4);
    let ue = supermod::perturb(&u, &eps).unwrap();
    println!("perturbed by {eps}: {ue:?}");
    for a in g.subsets() {
        println!(
            "  {:<9} maximizers of u {:<24} of perturbed {}",
            g.render(a),
            supermod::argmax_family(&u, a).render(),
            supermod::argmax_family(&ue, a).render()
        );
    }
}
