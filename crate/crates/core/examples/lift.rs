//! Any complementary choice is the direct image of a completely complementary one.

use complementary_choice::transport::{self, Lift};
use complementary_choice::{fixtures, ChoiceFunction};

fn show(f: &ChoiceFunction, lift: &Lift) {
    let back = transport::direct_image(lift.phi(), lift.lifted()).unwrap();
    assert_eq!(&back, f);
    println!(
        "{} lift: {} points, completely complementary: {}",
        lift.kind().name(),
        lift.points().len(),
        lift.lifted().analyze().completely_complementary
    );
    for (i, label) in lift.labels().iter().enumerate() {
        let below: Vec<&str> = (0..lift.points().len())
            .filter(|&j| j != i && lift.order().leq(j, i))
            .map(|j| lift.labels()[j].as_str())
            .collect();
        println!("  {label:<12} -> {}   >= {below:?}", f.ground().name(lift.phi().apply(i)));
    }
}

fn main() {
    let f = fixtures::fork();
    show(&f, &transport::theorem2_lift(&f).unwrap());
    show(&f, &transport::economical_lift(&f).unwrap());
}
