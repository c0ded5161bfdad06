mod common;

use std::sync::{Arc, OnceLock};

use froblab_core::lab::tensor_mult;
use froblab_core::lattice::is_isomorphic;
use froblab_core::slatt::{
    chu_transpose, compose, hom_lattice, hom_to_tensor, image_factorization, mix, mix_values, pairing_llop,
    right_adjoint, sup_maps, tensor_lattice, tensor_to_hom, SupMap,
};
use froblab_core::{Caps, Lattice};
use proptest::prelude::*;

fn pool() -> &'static [Arc<Lattice>] {
    static POOL: OnceLock<Vec<Arc<Lattice>>> = OnceLock::new();
    POOL.get_or_init(|| common::lattices_up_to(5))
}

fn size_six() -> &'static [Arc<Lattice>] {
    static POOL: OnceLock<Vec<Arc<Lattice>>> = OnceLock::new();
    POOL.get_or_init(|| froblab_core::lattice::lattices_of_size(6).into_iter().map(Arc::new).collect())
}

fn random_map(l: &Arc<Lattice>, m: &Arc<Lattice>, pick: usize) -> SupMap {
    let maps = sup_maps(l, m, &Caps::default()).unwrap();
    SupMap::new(l.clone(), m.clone(), maps[pick % maps.len()].clone()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjunction_law(a in 0..10usize, b in 0..10usize, pick in any::<usize>()) {
        let (l, m) = (&pool()[a], &pool()[b]);
        let f = random_map(l, m, pick);
        let rho = right_adjoint(&f);
        for x in l.elements() {
            for y in m.elements() {
                prop_assert_eq!(m.leq(f.apply(x), y), l.leq(x, rho.apply(y)));
            }
        }
    }

    #[test]
    fn double_dual_is_the_identity(a in 0..10usize, b in 0..10usize, pick in any::<usize>()) {
        let f = random_map(&pool()[a], &pool()[b], pick);
        let back = right_adjoint(&right_adjoint(&f));
        prop_assert_eq!(back.values(), f.values());
    }

    #[test]
    fn images_of_a_map_and_its_transpose_are_dual(a in 0..10usize, b in 0..10usize, pick in any::<usize>()) {
        let (l, m) = (&pool()[a], &pool()[b]);
        let f = random_map(l, m, pick);
        let fact = image_factorization(&f);
        let through = compose(&fact.epi, &fact.mono).unwrap();
        prop_assert_eq!(through.values(), f.values());
        let t = chu_transpose(&f, &pairing_llop(l), &pairing_llop(m)).unwrap();
        let t_image = image_factorization(&t).image;
        prop_assert_eq!(fact.image.size(), t_image.size());
        prop_assert!(is_isomorphic(&fact.image, &t_image.op()));
    }

    #[test]
    fn op_is_an_involution(a in 0..10usize) {
        let l = &pool()[a];
        let op = l.op();
        let back = op.op();
        for x in l.elements() {
            for y in l.elements() {
                prop_assert_eq!(back.leq(x, y), l.leq(x, y));
                prop_assert_eq!(op.join(x, y), l.meet(x, y));
                prop_assert_eq!(op.meet(x, y), l.join(x, y));
            }
        }
    }

    #[test]
    fn hom_tensor_duality_up_to_five(a in 0..10usize, b in 0..10usize) {
        let caps = Caps::default();
        let (l, m) = (&pool()[a], &pool()[b]);
        let t = tensor_lattice(l, m, &caps).unwrap();
        let hom = hom_lattice(l, &Arc::new(m.op()), &caps).unwrap();
        prop_assert_eq!(t.len(), hom.len());
        for d in t.elements() {
            let f = tensor_to_hom(t.space(), d);
            prop_assert!(hom.index_of(&f).is_some());
            prop_assert_eq!(&hom_to_tensor(t.space(), &f), d);
        }
    }

    #[test]
    fn mix_is_a_homomorphism_on_larger_lattices(a in 0..15usize, i in any::<usize>(), j in any::<usize>()) {
        let l = &size_six()[a];
        let m = mix(l, &Caps::default()).unwrap();
        let space = m.tensor.space();
        let elems = m.tensor.elements();
        let (d1, d2) = (&elems[i % elems.len()], &elems[j % elems.len()]);
        let as_map = |d| SupMap::new(l.clone(), l.clone(), mix_values(l, d)).unwrap();
        let d12 = tensor_mult(space, d1, d2);
        let product = as_map(&d12);
        let composite = compose(&as_map(d1), &as_map(d2)).unwrap();
        prop_assert_eq!(product, composite);
    }
}
