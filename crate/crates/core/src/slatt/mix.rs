//! The mix map `op(L) ⊗ L → [L, L]`, nuclearity, and adjunction units.
//!
//! Tensor elements over `op(L) × L` use `L`'s own indices in both
//! coordinates, so `(a, b)` is read with `a` in `L` throughout.

use std::sync::Arc;

use crate::caps::Caps;
use crate::error::Result;
use crate::lattice::Lattice;

use super::hom::{hom_lattice, HomLattice};
use super::supmap::{one_step_values, SupMap};
use super::tensor::{BiIdealSpace, TensorElement, TensorLattice};

/// The bi-ideal space over `op(L) × L`.
pub fn mix_space(l: &Arc<Lattice>) -> BiIdealSpace {
    BiIdealSpace::new(Arc::new(l.op()), l.clone())
}

/// `mix(D)(x) = ∨{b : (a, b) ∈ D, x ≰ a}`.
pub fn mix_values(l: &Lattice, d: &TensorElement) -> Vec<usize> {
    let pairs = d.pairs();
    l.elements()
        .map(|x| {
            l.join_of(
                pairs
                    .iter()
                    .filter(|&&(a, _)| !l.leq(x, a))
                    .map(|&(_, b)| b),
            )
        })
        .collect()
}

/// Mix together with its domain and codomain.
#[derive(Clone, Debug)]
pub struct Mix {
    pub tensor: TensorLattice,
    pub hom: HomLattice,
    /// `tensor` index to `hom` index
    pub map: SupMap,
}

impl Mix {
    pub fn is_injective(&self) -> bool {
        self.map.is_injective()
    }

    pub fn is_surjective(&self) -> bool {
        self.map.is_surjective()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }
}

pub fn mix(l: &Arc<Lattice>, caps: &Caps) -> Result<Mix> {
    let space = mix_space(l);
    let tensor = TensorLattice::new(space.left().clone(), l.clone(), caps)?;
    let hom = hom_lattice(l, l, caps)?;
    let values = tensor
        .elements()
        .iter()
        .map(|d| {
            hom.index_of(&mix_values(l, d))
                .expect("mix lands in sup-maps")
        })
        .collect();
    let map = SupMap::new(tensor.lattice().clone(), hom.lattice().clone(), values)?;
    Ok(Mix { tensor, hom, map })
}

pub fn is_nuclear(l: &Arc<Lattice>, caps: &Caps) -> Result<bool> {
    Ok(mix(l, caps)?.is_bijective())
}

/// The largest bi-ideal whose mix is below the identity, or `None` when its
/// mix is not the identity itself (then no bi-ideal reaches it).
pub fn adjunction_unit(l: &Arc<Lattice>) -> Option<TensorElement> {
    let space = mix_space(l);
    let below_id = l
        .elements()
        .flat_map(|a| l.elements().map(move |b| (a, b)))
        .filter(|&(a, b)| {
            one_step_values(l, a, b)
                .iter()
                .enumerate()
                .all(|(x, &v)| l.leq(v, x))
        });
    let eta = space.closure(below_id);
    triangle_identities(l, &eta).then_some(eta)
}

/// Both triangle identities of the adjunction `(L, op(L), η, ε)` at `η`.
pub fn triangle_identities(l: &Lattice, eta: &TensorElement) -> bool {
    let pairs = eta.pairs();
    let on_l = mix_values(l, eta).into_iter().enumerate().all(|(x, v)| v == x);
    let on_op = l.elements().all(|y| {
        l.meet_of(
            pairs
                .iter()
                .filter(|&&(_, b)| !l.leq(b, y))
                .map(|&(a, _)| a),
        ) == y
    });
    on_l && on_op
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::family::*;

    fn arc(l: Lattice) -> Arc<Lattice> {
        Arc::new(l)
    }

    #[test]
    fn mix_of_bottom_and_elementaries() {
        for l in [chain(3).unwrap(), m3(), n5()] {
            let l = arc(l);
            let space = mix_space(&l);
            assert!(mix_values(&l, &space.bottom())
                .iter()
                .all(|&v| v == l.bottom()));
            for a in l.elements() {
                for b in l.elements() {
                    assert_eq!(
                        mix_values(&l, &space.elementary(a, b)),
                        one_step_values(&l, a, b)
                    );
                }
            }
        }
    }

    #[test]
    fn mix_on_chain_two() {
        let c = arc(chain(2).unwrap());
        let space = mix_space(&c);
        assert_eq!(mix_values(&c, &space.elementary(0, 1)), vec![0, 1]);
    }

    #[test]
    fn m3_is_not_nuclear() {
        let l = arc(m3());
        let m = mix(&l, &Caps::default()).unwrap();
        assert!(!m.is_injective());
        assert!(!is_nuclear(&l, &Caps::default()).unwrap());
    }

    #[test]
    fn distributive_examples_are_nuclear() {
        let caps = Caps::default();
        for n in 1..=5 {
            assert!(is_nuclear(&arc(chain(n).unwrap()), &caps).unwrap());
        }
        assert!(is_nuclear(&arc(boolean(2).unwrap()), &caps).unwrap());
        assert!(!is_nuclear(&arc(n5()), &caps).unwrap());
    }

    #[test]
    fn adjunction_unit_examples() {
        let c = arc(chain(2).unwrap());
        let eta = adjunction_unit(&c).unwrap();
        assert_eq!(eta, mix_space(&c).elementary(0, 1));
        assert!(adjunction_unit(&arc(m3())).is_none());
        assert!(adjunction_unit(&arc(n5())).is_none());
        let one = arc(chain(1).unwrap());
        assert!(adjunction_unit(&one).is_some());
    }

    #[test]
    fn maximal_unit_agrees_with_search() {
        let caps = Caps::default();
        for l in [chain(3).unwrap(), boolean(2).unwrap(), m3(), n5()] {
            let l = arc(l);
            let m = mix(&l, &caps).unwrap();
            let id: Vec<usize> = l.elements().collect();
            let hits: Vec<&TensorElement> = m
                .tensor
                .elements()
                .iter()
                .filter(|d| mix_values(&l, d) == id)
                .collect();
            assert_eq!(adjunction_unit(&l).is_some(), !hits.is_empty());
            if let Some(eta) = adjunction_unit(&l) {
                assert!(hits.iter().all(|d| d.is_subset(&eta)));
            }
        }
    }
}
