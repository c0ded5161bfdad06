use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::Lattice;

use super::supmap::{same_lattice, SupMap};

/// A `{⊥, ⊤}`-valued bimorphism `A × B → 2` whose transposition is an
/// anti-isomorphism. `eval` stores `true` for `⊤`.
#[derive(Clone, Debug)]
pub struct DualPairing {
    a: Arc<Lattice>,
    b: Arc<Lattice>,
    eval: Vec<bool>,
    /// `b ↦ max{a : eval(a, b) = ⊥}`
    transpose: Vec<usize>,
    inverse: Vec<usize>,
}

fn principal(l: &Lattice, members: &[usize]) -> Option<usize> {
    let top = l.join_of(members.iter().copied());
    (l.down_set(top).count_ones(..) == members.len() && members.iter().all(|&x| l.leq(x, top)))
        .then_some(top)
}

impl DualPairing {
    pub fn new(a: Arc<Lattice>, b: Arc<Lattice>, eval: impl Fn(usize, usize) -> bool) -> Result<DualPairing> {
        let nb = b.size();
        let table: Vec<bool> = a
            .elements()
            .flat_map(|x| b.elements().map(move |y| (x, y)))
            .map(|(x, y)| eval(x, y))
            .collect();
        let at = |x: usize, y: usize| table[x * nb + y];
        let mut transpose = Vec::with_capacity(nb);
        for y in b.elements() {
            let zeros: Vec<usize> = a.elements().filter(|&x| !at(x, y)).collect();
            let top = principal(&a, &zeros).ok_or_else(|| {
                Error::NotADualPairing(format!("{{a : eval(a, {y}) = ⊥}} is not principal"))
            })?;
            transpose.push(top);
        }
        for x in a.elements() {
            let zeros: Vec<usize> = b.elements().filter(|&y| !at(x, y)).collect();
            if principal(&b, &zeros).is_none() {
                return Err(Error::NotADualPairing(format!(
                    "{{b : eval({x}, b) = ⊥}} is not principal"
                )));
            }
        }
        let mut inverse = vec![usize::MAX; a.size()];
        for (y, &x) in transpose.iter().enumerate() {
            if inverse[x] != usize::MAX {
                return Err(Error::NotADualPairing("transposition is not injective".into()));
            }
            inverse[x] = y;
        }
        if a.size() != nb {
            return Err(Error::NotADualPairing("transposition is not surjective".into()));
        }
        for y in b.elements() {
            for y2 in b.elements() {
                if b.leq(y, y2) != a.leq(transpose[y2], transpose[y]) {
                    return Err(Error::NotADualPairing(
                        "transposition is not an order anti-isomorphism".into(),
                    ));
                }
            }
        }
        Ok(DualPairing {
            a,
            b,
            eval: table,
            transpose,
            inverse,
        })
    }

    pub fn a(&self) -> &Arc<Lattice> {
        &self.a
    }

    pub fn b(&self) -> &Arc<Lattice> {
        &self.b
    }

    /// `true` for `⊤`.
    pub fn eval(&self, x: usize, y: usize) -> bool {
        self.eval[x * self.b.size() + y]
    }

    pub fn transpose(&self, y: usize) -> usize {
        self.transpose[y]
    }
}

/// `(L, op(L))` with `eval(x, y) = ⊥` iff `x ≤ y` in `L`.
pub fn pairing_llop(l: &Arc<Lattice>) -> DualPairing {
    let op = Arc::new(l.op());
    DualPairing::new(l.clone(), op, |x, y| !l.leq(x, y)).expect("the canonical pairing is dual")
}

/// The unique `f̃ : B1 → B0` with `eval0(a, f̃(b)) = eval1(f(a), b)`.
pub fn chu_transpose(f: &SupMap, p0: &DualPairing, p1: &DualPairing) -> Result<SupMap> {
    if !same_lattice(f.source(), &p0.a) || !same_lattice(f.target(), &p1.a) {
        return Err(Error::TypeMismatch("map does not match the pairings".into()));
    }
    let mut values = Vec::with_capacity(p1.b.size());
    for y in p1.b.elements() {
        let zeros: Vec<usize> = p0.a.elements().filter(|&x| !p1.eval(f.apply(x), y)).collect();
        let top = principal(&p0.a, &zeros)
            .ok_or_else(|| Error::NoTranspose(format!("no transpose at {y}")))?;
        values.push(p0.inverse[top]);
    }
    SupMap::new(p1.b.clone(), p0.b.clone(), values).map_err(|e| Error::NoTranspose(e.to_string()))
}
