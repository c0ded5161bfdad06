mod common;

use std::collections::BTreeSet;

use froblab_core::lattice::{canonical_code, lattices_of_size};
use froblab_core::slatt::is_nuclear;
use froblab_core::Caps;

use common::{lattice_form, lattices_up_to, oracle_classes};

#[test]
fn classes_match_the_brute_force_oracle() {
    for n in 1..=6 {
        let oracle = oracle_classes(n);
        let ours: BTreeSet<Vec<bool>> = lattices_of_size(n).iter().map(lattice_form).collect();
        assert_eq!(ours.len(), lattices_of_size(n).len(), "duplicate classes at size {n}");
        assert_eq!(ours, oracle, "size {n}");
    }
}

#[test]
fn codes_are_pairwise_distinct() {
    let all = lattices_up_to(6);
    let codes: BTreeSet<Vec<u8>> = all.iter().map(|l| canonical_code(l)).collect();
    assert_eq!(codes.len(), all.len());
}

#[test]
fn distributivity_notions_coincide_up_to_six() {
    let caps = Caps::default();
    for l in lattices_up_to(6) {
        let d = l.is_distributive();
        assert_eq!(l.is_completely_distributive(&caps), d, "{:?}", l.covers());
        assert_eq!(is_nuclear(&l, &caps).unwrap(), d, "{:?}", l.covers());
    }
}

#[test]
fn totally_below_is_a_down_closed_part_of_the_order() {
    let caps = Caps::default();
    for l in lattices_up_to(6) {
        let tb = l.totally_below(&caps);
        for (y, x) in tb.pairs() {
            assert!(l.leq(y, x));
            for y2 in l.elements().filter(|&y2| l.leq(y2, y)) {
                assert!(tb.contains(y2, x));
            }
        }
    }
}
