//! Count complementary choice functions two independent ways.

use complementary_choice::enumerate;

fn main() {
    for n in 0..=5 {
        let families = enumerate::count_union_closed(n).unwrap();
        if n <= enumerate::MAX_N_CONTRACTING {
            let filtered = enumerate::count_complementary_by_filter(n).unwrap();
            assert_eq!(families, filtered);
            println!("n = {n}: {families} union-closed families, {filtered} complementary tables");
        } else {
            println!("n = {n}: {families} union-closed families");
        }
    }
}
