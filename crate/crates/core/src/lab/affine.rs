use std::sync::Arc;

use crate::lattice::family::chain;
use crate::lattice::Lattice;
use crate::slatt::SupMap;

/// The two-element lattice as a retract of `L`: `p` embeds, `c` retracts.
#[derive(Clone, Debug)]
pub struct PseudoAffine {
    pub p: SupMap,
    pub c: SupMap,
    /// The element `a` with `c(y) = ⊤` iff `y ≰ a`.
    pub coatom: usize,
}

/// `None` exactly for the one-element lattice.
pub fn pseudo_affine_witness(l: &Arc<Lattice>) -> Option<PseudoAffine> {
    if l.size() < 2 {
        return None;
    }
    let two = Arc::new(chain(2).expect("chain(2)"));
    let a = *l.lower_covers(l.top()).first()?;
    let p = SupMap::new(two.clone(), l.clone(), vec![l.bottom(), l.top()]).ok()?;
    let c_values = l.elements().map(|y| usize::from(!l.leq(y, a))).collect();
    let c = SupMap::new(l.clone(), two, c_values).ok()?;
    let retract = p.then(&c).ok()?;
    (retract.values() == [0, 1]).then_some(PseudoAffine { p, c, coatom: a })
}
