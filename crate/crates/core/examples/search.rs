//! Hunt for submodular tables whose induced choice is not substitutable.

use complementary_choice::search::{self, Pattern, Predicate, SearchConfig};

fn main() {
    let out = search::search(&Pattern::SubmodularNotSubstitutable, &SearchConfig::new(3)).unwrap();
    println!("examined {} tables, {} hits", out.examined, out.findings.len());
    for hit in out.findings.iter().take(5) {
        println!("  {}   {}", search::compact_table(&hit.u), hit.detail);
    }
    let example5 = out.findings.iter().any(|h| search::matches_integers(&h.u, &[0, 3, 2, 2, 2, 2, 4, 1]));
    println!("example5 fixture among them: {example5}");

    let custom = Pattern::Custom("u.supermodular,!f.complementary".parse::<Predicate>().unwrap());
    let none = search::search(&custom, &SearchConfig::new(2)).unwrap();
    println!("supermodular but not complementary on two points: {}", none.findings.len());
}
