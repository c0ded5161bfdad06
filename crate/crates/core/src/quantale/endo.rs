use std::sync::Arc;

use crate::caps::Caps;
use crate::error::Result;
use crate::lattice::Lattice;
use crate::par::*;
use crate::slatt::{hom_lattice, HomLattice};

use super::Quantale;

/// Sup-preserving endomaps of a lattice under composition.
#[derive(Clone, Debug)]
pub struct EndoQuantale {
    pub hom: HomLattice,
    pub quantale: Quantale,
}

/// `f ∗ g` is `f` then `g`; the unit is the identity.
pub fn endo_quantale(l: &Arc<Lattice>, caps: &Caps) -> Result<EndoQuantale> {
    let hom = hom_lattice(l, l, caps)?;
    let n = hom.len();
    let mult: Vec<usize> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let hom = &hom;
            (0..n).map(move |j| {
                let (f, g) = (hom.values(i), hom.values(j));
                let composite: Vec<usize> = f.iter().map(|&y| g[y]).collect();
                hom.index_of(&composite).expect("sup-maps compose")
            })
        })
        .collect();
    let unit = hom.identity_index();
    let quantale = Quantale::new_unchecked(hom.lattice().clone(), mult, unit);
    Ok(EndoQuantale { hom, quantale })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::family::*;
    use crate::quantale::tests::meet_quantale;
    use crate::quantale::*;

    fn endo(l: Lattice) -> EndoQuantale {
        endo_quantale(&Arc::new(l), &Caps::default()).unwrap()
    }

    #[test]
    fn small_endo_quantales() {
        assert_eq!(endo(chain(1).unwrap()).quantale.size(), 1);
        let e = endo(chain(3).unwrap());
        assert_eq!(e.quantale.size(), 6);
        assert!(e.quantale.unit().is_some());
        // the table passes full validation
        let q = &e.quantale;
        Quantale::new(q.carrier().clone(), q.mult_table().to_vec(), true).unwrap();
    }

    #[test]
    fn chain_two_is_the_boolean_quantale() {
        let e = endo(chain(2).unwrap());
        let b = meet_quantale(chain(2).unwrap());
        assert_eq!(e.quantale.mult_table(), b.mult_table());
        assert_eq!(e.quantale.unit(), b.unit());
    }

    #[test]
    fn dualizing_in_endo_chain_two() {
        let e = endo(chain(2).unwrap());
        let bottom = e.hom.index_of(&[0, 0]).unwrap();
        let duals = dualizing_elements(&e.quantale);
        assert!(duals.iter().any(|d| d.element == bottom));
        let w = frobenius_from_dualizing(&e.quantale, bottom).unwrap();
        assert_eq!(w.l, vec![1, 0]);
        assert_eq!(w.r, vec![1, 0]);
    }

    #[test]
    fn endo_boolean_two_witness_passes() {
        let e = endo(boolean(2).unwrap());
        assert_eq!(e.quantale.size(), 16);
        let duals = dualizing_elements(&e.quantale);
        assert!(!duals.is_empty());
        for d in duals {
            let w = frobenius_from_dualizing(&e.quantale, d.element).unwrap();
            assert!(verify_frobenius(&e.quantale, &w.l, &w.r).all_pass());
        }
    }

    #[test]
    fn search_follows_complete_distributivity() {
        let caps = Caps::default();
        assert!(search_frobenius(&endo(m3()).quantale, &caps).unwrap().is_empty());
        assert!(search_frobenius(&endo(n5()).quantale, &caps).unwrap().is_empty());
        assert!(!search_frobenius(&endo(chain(3).unwrap()).quantale, &caps).unwrap().is_empty());
    }

    #[test]
    fn residual_laws_on_endo_quantales() {
        for l in [chain(3).unwrap(), m3(), n5()] {
            let q = endo(l).quantale;
            assert!(check_residuation(&q).ok);
            assert!(check_actions(&q).ok);
            assert!(check_equivariance(&q).ok);
        }
    }

    #[test]
    fn actions_compose_in_order() {
        // with the factors swapped the action laws only hold when ∗ commutes
        let q = endo(chain(3).unwrap()).quantale;
        let n = q.size();
        let swapped = (0..n).any(|x| {
            (0..n).any(|y| {
                (0..n).any(|z| {
                    q.right_residual(z, q.mult(y, x)) != q.right_residual(q.right_residual(z, y), x)
                })
            })
        });
        assert!(swapped);
        assert!(check_actions(&q).ok);
    }

    #[test]
    fn dual_multiplication_round_trip() {
        for l in [chain(2).unwrap(), chain(3).unwrap()] {
            let q = endo(l).quantale;
            for w in search_frobenius(&q, &Caps::default()).unwrap() {
                let dual = dual_multiplication(&q, &w).unwrap();
                // on op(Q) the witness becomes (r⁻¹, l⁻¹) = (l, r)
                assert!(verify_frobenius(&dual, &w.l, &w.r).all_pass());
                let back = dual_multiplication(&dual, &w).unwrap();
                assert_eq!(back.mult_table(), q.mult_table());
            }
        }
    }

    #[test]
    fn witness_maps_are_homomorphisms_into_the_dual() {
        for l in [chain(3).unwrap(), boolean(2).unwrap()] {
            let q = endo(l).quantale;
            for w in search_frobenius(&q, &Caps::default()).unwrap() {
                let dual = dual_multiplication(&q, &w).unwrap();
                for x in 0..q.size() {
                    for y in 0..q.size() {
                        assert_eq!(w.l[q.mult(x, y)], dual.mult(w.l[x], w.l[y]));
                        assert_eq!(w.r[q.mult(x, y)], dual.mult(w.r[x], w.r[y]));
                    }
                }
            }
        }
    }
}
