//! Completely complementary choice functions are exactly the ideal choices of preorders.

use complementary_choice::{choicefn, pretop, GroundSet, Preorder};

fn main() {
    let g = GroundSet::letters(4);
    // a <= b, b <= c, and c ~ d
    let p = Preorder::from_pairs(g.clone(), [(0, 1), (1, 2), (2, 3), (3, 2)]).unwrap();
    let f = choicefn::ideal_cf(&g, &p).unwrap();

    let r = f.analyze();
    println!("completely complementary: {}", r.completely_complementary);
    for x in 0..g.len() {
        println!("  S({}) = {}", g.name(x), g.render(p.principal_ideal(x)));
    }
    for spec in ["abd", "bcd", "ad", "abcd"] {
        let a = g.parse_compact(spec).unwrap();
        println!("  f({}) = {}", g.render(a), g.render(f.choose(a)));
    }

    let back = pretop::preorder_from_cf(&f).unwrap();
    assert_eq!(choicefn::ideal_cf(&g, &back).unwrap(), f);
    for (y, x) in back.strict_pairs() {
        println!("  recovered {} <= {}", g.name(y), g.name(x));
    }
}
