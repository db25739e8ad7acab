//! Choice on a finite lattice: fixed points, the join rule, and a monotone
//! supermodular function that counts fixed points below each element.

use std::sync::Arc;

use complementary_choice::latticecf::{self, LatticeCF};
use complementary_choice::FiniteLattice;

fn main() {
    let lat = Arc::new(FiniteLattice::divisors(12));
    let named = |xs: &[usize]| xs.iter().map(|&x| lat.name(x)).collect::<Vec<_>>().join(",");
    let fix: Vec<usize> = ["1", "2", "3", "6", "12"].iter().map(|n| lat.index_of(n).unwrap()).collect();

    let f = latticecf::cf_from_fix(lat.clone(), &fix).unwrap();
    let report = latticecf::analyze_lattice(&f);
    println!("Fix(f) = {{{}}}  complementary: {}", named(&fix), report.complementary);
    for x in lat.elements() {
        println!("  f({:>2}) = {}", lat.name(x), lat.name(f.apply(x)));
    }

    let u = latticecf::theorem4_synthesize(&f).unwrap();
    println!(
        "u: {}  supermodular {}  monotone {}",
        lat.elements().map(|x| format!("{}:{}", lat.name(x), u.value(x))).collect::<Vec<_>>().join(" "),
        latticecf::classify_lattice(&u).is_supermodular(),
        latticecf::is_monotone(&u)
    );
    assert_eq!(latticecf::induce_lattice_cf(&u).unwrap(), f);

    // 4 v 6 = 12 is left out, so this family is not join-closed.
    let with_four: Vec<usize> = ["1", "4", "6"].iter().map(|n| lat.index_of(n).unwrap()).collect();
    println!("{}", latticecf::cf_from_fix(lat.clone(), &with_four).unwrap_err());

    let total: usize = latticecf::reference_suite()
        .into_iter()
        .map(|(name, l)| {
            let l = Arc::new(l);
            let mut count = 0;
            latticecf::for_each_contracting(&l, |g: &LatticeCF| count += latticecf::analyze_lattice(g).complementary as usize)
                .unwrap();
            println!("  {name:<12} {count:>5} complementary maps");
            count
        })
        .sum();
    println!("suite total {total}");
}
