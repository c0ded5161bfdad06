//! Multiplication and pairing on bi-ideals of `op(L) × L`.

use crate::slatt::{BiIdealSpace, TensorElement};

/// Closure of `{(a, d) : (a, b) ∈ D1, (c, d) ∈ D2, b ≰ c}`.
pub fn tensor_mult(space: &BiIdealSpace, d1: &TensorElement, d2: &TensorElement) -> TensorElement {
    let l = space.right();
    let left = d1.pairs();
    let right = d2.pairs();
    let mut out = Vec::new();
    for &(a, b) in &left {
        for &(c, d) in &right {
            if !l.leq(b, c) {
                out.push((a, d));
            }
        }
    }
    space.closure(out)
}

/// `⊤` iff some `(a, b) ∈ D1`, `(c, d) ∈ D2` have `b ≰ c` and `d ≰ a`.
pub fn tensor_pairing(space: &BiIdealSpace, d1: &TensorElement, d2: &TensorElement) -> bool {
    let l = space.right();
    let right = d2.pairs();
    d1.pairs().iter().any(|&(a, b)| {
        right
            .iter()
            .any(|&(c, d)| !l.leq(b, c) && !l.leq(d, a))
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::caps::Caps;
    use crate::lattice::family::*;
    use crate::slatt::{compose, mix, mix_space, mix_values, SupMap};

    #[test]
    fn elementary_products() {
        for l in [chain(3).unwrap(), m3(), n5()] {
            let l = Arc::new(l);
            let space = mix_space(&l);
            for a in l.elements() {
                for b in l.elements() {
                    for c in l.elements() {
                        for d in l.elements() {
                            let p = tensor_mult(&space, &space.elementary(a, b), &space.elementary(c, d));
                            let expected = if l.leq(b, c) {
                                space.bottom()
                            } else {
                                space.elementary(a, d)
                            };
                            assert_eq!(p, expected);
                            let pi = tensor_pairing(&space, &space.elementary(a, b), &space.elementary(c, d));
                            assert_eq!(pi, !l.leq(b, c) && !l.leq(d, a));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bottom_absorbs() {
        let l = Arc::new(n5());
        let m = mix(&l, &Caps::default()).unwrap();
        let space = m.tensor.space();
        let bottom = space.bottom();
        for d in m.tensor.elements() {
            assert_eq!(tensor_mult(space, d, &bottom), bottom);
            assert!(!tensor_pairing(space, d, &bottom));
        }
    }

    #[test]
    fn associative_on_chain_three() {
        let l = Arc::new(chain(3).unwrap());
        let m = mix(&l, &Caps::default()).unwrap();
        let space = m.tensor.space();
        let all = m.tensor.elements();
        for x in all {
            for y in all {
                let xy = tensor_mult(space, x, y);
                for z in all {
                    assert_eq!(
                        tensor_mult(space, &xy, z),
                        tensor_mult(space, x, &tensor_mult(space, y, z))
                    );
                    assert_eq!(
                        tensor_pairing(space, &xy, z),
                        tensor_pairing(space, x, &tensor_mult(space, y, z))
                    );
                }
            }
        }
    }

    #[test]
    fn pairing_is_symmetric_on_m3() {
        let l = Arc::new(m3());
        let m = mix(&l, &Caps::default()).unwrap();
        let space = m.tensor.space();
        for x in m.tensor.elements() {
            for y in m.tensor.elements() {
                assert_eq!(tensor_pairing(space, x, y), tensor_pairing(space, y, x));
            }
        }
    }

    #[test]
    fn mix_is_a_homomorphism_on_n5() {
        let l = Arc::new(n5());
        let m = mix(&l, &Caps::default()).unwrap();
        let space = m.tensor.space();
        let as_map = |d: &TensorElement| SupMap::new(l.clone(), l.clone(), mix_values(&l, d)).unwrap();
        for x in m.tensor.elements() {
            for y in m.tensor.elements() {
                assert_eq!(
                    as_map(&tensor_mult(space, x, y)),
                    compose(&as_map(x), &as_map(y)).unwrap()
                );
            }
        }
    }
}
