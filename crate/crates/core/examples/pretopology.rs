//! A complementary choice function is the interior operator of its open sets,
//! and the union of the packaged choices over those sets.

use complementary_choice::{choicefn, pretop, ChoiceFunction, GroundSet, SetFamily};

fn main() {
    let g = GroundSet::letters(3);
    let base = SetFamily::from_compact(&g, &["ab", "ac"]).unwrap();
    let f = pretop::interior_cf(&base).unwrap();
    println!("base      {}", base.render());
    println!("open sets {}", pretop::open_sets(&f).render());
    for a in g.subsets() {
        println!("  f({}) = {}", g.render(a), g.render(f.choose(a)));
    }

    let parts: Vec<ChoiceFunction> = pretop::decompose(&f)
        .unwrap()
        .iter()
        .map(|k| choicefn::packaged(&g, k).unwrap())
        .collect();
    assert_eq!(choicefn::union(&parts).unwrap(), f);
    println!("union of {} packaged choices gives back f", parts.len());

    for x in 0..g.len() {
        println!(
            "minimal neighborhoods of {}: {}",
            g.name(x),
            pretop::minimal_neighborhoods(&f, x).unwrap().render()
        );
    }
    // a has two minimal neighborhoods, so no preorder produces this f.
    println!("unique minimal neighborhoods: {}", pretop::has_unique_minimal_neighborhoods(&f).unwrap());
}
