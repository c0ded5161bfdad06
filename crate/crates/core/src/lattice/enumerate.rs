//! Exhaustive generation of finite lattices up to isomorphism.
//!
//! A lattice with `n >= 2` elements is a poset on `n - 2` inner points with a
//! bottom and a top adjoined. Inner posets are generated naturally labeled
//! (every strict down-set lies among earlier labels), bounded, filtered for
//! the lattice property and deduplicated by canonical code.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;

use super::{canonical_code, Lattice};
use crate::caps::Caps;
use crate::error::{Error, Result};

/// One representative per isomorphism class of each size `1..=max_size`,
/// ordered by size and then by canonical code.
pub fn enumerate_lattices(max_size: usize, caps: &Caps) -> Result<Vec<Lattice>> {
    if max_size == 0 {
        return Err(Error::InvalidParameter("max_size must be at least 1".into()));
    }
    if max_size > caps.enum_size {
        return Err(Error::limit("lattice enumeration size", caps.enum_size));
    }
    let mut out = Vec::new();
    for n in 1..=max_size {
        out.extend(lattices_of_size(n));
    }
    Ok(out)
}

/// All lattices with exactly `n` elements, up to isomorphism.
pub fn lattices_of_size(n: usize) -> Vec<Lattice> {
    match n {
        0 => return Vec::new(),
        1 => return vec![Lattice::from_leq(1, |_, _| true).expect("singleton")],
        _ => {}
    }
    let inner = n - 2;
    let mut classes: BTreeMap<Vec<u8>, Lattice> = BTreeMap::new();
    let mut below: Vec<FixedBitSet> = Vec::with_capacity(inner);
    natural_posets(inner, &mut below, &mut |strict_below| {
        // 0 = bottom, 1..=inner = inner points, n - 1 = top
        let leq = |x: usize, y: usize| {
            x == y
                || x == 0
                || y == n - 1
                || (x != n - 1 && y != 0 && strict_below[y - 1].contains(x - 1))
        };
        if let Ok(l) = Lattice::from_leq(n, leq) {
            classes.entry(canonical_code(&l)).or_insert(l);
        }
    });
    classes.into_values().collect()
}

/// Calls `visit` once per naturally labeled poset on `k` points, given as
/// strict down-sets.
fn natural_posets(k: usize, below: &mut Vec<FixedBitSet>, visit: &mut impl FnMut(&[FixedBitSet])) {
    let j = below.len();
    if j == k {
        visit(below);
        return;
    }
    // candidate strict down-sets of point j: down-closed subsets of 0..j
    for mask in 0u64..(1u64 << j) {
        let closed = (0..j)
            .filter(|&i| mask >> i & 1 == 1)
            .all(|i| below[i].ones().all(|b| mask >> b & 1 == 1));
        if !closed {
            continue;
        }
        let mut set = FixedBitSet::with_capacity(k);
        for i in (0..j).filter(|&i| mask >> i & 1 == 1) {
            set.insert(i);
        }
        below.push(set);
        natural_posets(k, below, visit);
        below.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_poset_counts() {
        // naturally labeled posets on 0..=5 points
        for (k, expected) in [(0, 1), (1, 1), (2, 2), (3, 7), (4, 40), (5, 357)] {
            let mut count = 0;
            natural_posets(k, &mut Vec::new(), &mut |_| count += 1);
            assert_eq!(count, expected, "k = {k}");
        }
    }

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| lattices_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 5]);
    }

    #[test]
    fn enumeration_limits() {
        let caps = Caps::default();
        assert!(matches!(
            enumerate_lattices(8, &caps),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(enumerate_lattices(0, &caps).is_err());
        assert_eq!(enumerate_lattices(1, &caps).unwrap().len(), 1);
    }

    #[test]
    fn deterministic_order() {
        let caps = Caps::default();
        assert_eq!(
            enumerate_lattices(5, &caps).unwrap(),
            enumerate_lattices(5, &caps).unwrap()
        );
    }
}
