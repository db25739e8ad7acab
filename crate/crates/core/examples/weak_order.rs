//! The ranking of subsets by a supermodular function is a supermodular order,
//! and it determines the same choice.

use complementary_choice::random::Rng;
use complementary_choice::{supermod, GroundSet, SubsetWeakOrder};

fn main() {
    let g = GroundSet::letters(3);
    let u = Rng::seeded(7).supermodular(&g);
    let w = supermod::order_from_setfn(&u).unwrap();
    println!("u = {u:?}");
    for a in g.subsets() {
        println!("  rank({}) = {}", g.render(a), w.rank(a));
    }
    println!("supermodular order: {}", supermod::is_supermodular_order(&w).holds);
    assert_eq!(supermod::cf_from_order(&w).unwrap(), supermod::induce_cf(&u).unwrap());

    // Preferring {a} and {b} strictly over their union breaks the order condition.
    let mut ranks = vec![0; g.powerset_size()];
    ranks[g.parse_compact("a").unwrap().index()] = 2;
    ranks[g.parse_compact("b").unwrap().index()] = 2;
    let bad = SubsetWeakOrder::new(g.clone(), ranks).unwrap();
    let check = supermod::is_supermodular_order(&bad);
    if let Some((a, b)) = check.witness {
        println!("not supermodular at A = {}, B = {}", g.render(a), g.render(b));
    }
    println!("{}", supermod::cf_from_order(&bad).unwrap_err());
}
