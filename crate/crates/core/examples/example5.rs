//! A submodular function whose induced choice is not substitutable.

use complementary_choice::choicefn::{Axiom, Witness};
use complementary_choice::{fixtures, supermod};

fn main() {
    let u = fixtures::example5();
    let g = u.ground().clone();
    let s = |spec: &str| g.parse_compact(spec).unwrap();
    println!("u = {u:?}");
    println!("class: {}", supermod::classify(&u).kind.name());
    println!(
        "u(ab) + u(ac) = {}   u(a) + u(abc) = {}",
        u.value(s("ab")) + u.value(s("ac")),
        u.value(s("a")) + u.value(s("abc"))
    );

    let f = supermod::induce_cf(&u).unwrap();
    for spec in ["abc", "ab", "bc", "ac"] {
        println!("  f({}) = {}", spec, g.render(f.choose(s(spec))));
    }
    if let Some(Witness::Heredity { smaller, larger, element }) = f.analyze().witness(Axiom::SubstitutableHeredity) {
        println!(
            "{} is chosen from {} but rejected from {}",
            g.name(*element),
            g.render(*larger),
            g.render(*smaller)
        );
    }
    // b is chosen from {a,b,c} but rejected from {a,b}
}
