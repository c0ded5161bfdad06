use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::Lattice;

pub(crate) fn same_lattice(a: &Arc<Lattice>, b: &Arc<Lattice>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// True iff `values` sends bottom to bottom and binary joins to joins.
pub fn is_sup_preserving(source: &Lattice, target: &Lattice, values: &[usize]) -> bool {
    if values.len() != source.size() || values.iter().any(|&v| v >= target.size()) {
        return false;
    }
    if values[source.bottom()] != target.bottom() {
        return false;
    }
    source.elements().all(|x| {
        (x + 1..source.size())
            .all(|y| values[source.join(x, y)] == target.join(values[x], values[y]))
    })
}

/// A sup-preserving map between finite lattices, stored as its value table.
#[derive(Clone, Debug)]
pub struct SupMap {
    source: Arc<Lattice>,
    target: Arc<Lattice>,
    values: Vec<usize>,
}

impl PartialEq for SupMap {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
            && same_lattice(&self.source, &other.source)
            && same_lattice(&self.target, &other.target)
    }
}

impl Eq for SupMap {}

impl SupMap {
    pub fn new(source: Arc<Lattice>, target: Arc<Lattice>, values: Vec<usize>) -> Result<SupMap> {
        if !is_sup_preserving(&source, &target, &values) {
            return Err(Error::NotSupPreserving(format!("{values:?}")));
        }
        Ok(SupMap {
            source,
            target,
            values,
        })
    }

    pub(crate) fn new_unchecked(
        source: Arc<Lattice>,
        target: Arc<Lattice>,
        values: Vec<usize>,
    ) -> SupMap {
        debug_assert!(is_sup_preserving(&source, &target, &values));
        SupMap {
            source,
            target,
            values,
        }
    }

    pub fn identity(l: Arc<Lattice>) -> SupMap {
        let values = l.elements().collect();
        SupMap {
            source: l.clone(),
            target: l,
            values,
        }
    }

    /// The constant-bottom map.
    pub fn bottom_map(source: Arc<Lattice>, target: Arc<Lattice>) -> SupMap {
        let values = vec![target.bottom(); source.size()];
        SupMap {
            source,
            target,
            values,
        }
    }

    /// `x ↦ b` when `x ≰ a`, otherwise bottom.
    pub fn one_step(l: Arc<Lattice>, a: usize, b: usize) -> SupMap {
        let values = one_step_values(&l, a, b);
        SupMap {
            source: l.clone(),
            target: l,
            values,
        }
    }

    pub fn source(&self) -> &Arc<Lattice> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Lattice> {
        &self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    /// Pointwise order.
    pub fn leq(&self, other: &SupMap) -> bool {
        self.values
            .iter()
            .zip(&other.values)
            .all(|(&a, &b)| self.target.leq(a, b))
    }

    /// `self` first, then `then`.
    pub fn then(&self, then: &SupMap) -> Result<SupMap> {
        if !same_lattice(&self.target, &then.source) {
            return Err(Error::TypeMismatch(
                "target of the first map differs from source of the second".into(),
            ));
        }
        Ok(SupMap {
            source: self.source.clone(),
            target: then.target.clone(),
            values: self.values.iter().map(|&y| then.values[y]).collect(),
        })
    }

    /// `y ↦ ∨{x : f(x) ≤ y}`, as a sup-map `op(target) → op(source)`.
    pub fn right_adjoint(&self) -> SupMap {
        let values = right_adjoint_values(&self.source, &self.target, &self.values);
        SupMap {
            source: Arc::new(self.target.op()),
            target: Arc::new(self.source.op()),
            values,
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        self.values
            .iter()
            .all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        for &v in &self.values {
            seen[v] = true;
        }
        seen.into_iter().all(|s| s)
    }
}

/// Composition with the first argument applied first.
pub fn compose(f: &SupMap, g: &SupMap) -> Result<SupMap> {
    f.then(g)
}

pub fn right_adjoint(f: &SupMap) -> SupMap {
    f.right_adjoint()
}

pub fn one_step_values(l: &Lattice, a: usize, b: usize) -> Vec<usize> {
    l.elements()
        .map(|x| if l.leq(x, a) { l.bottom() } else { b })
        .collect()
}

pub(crate) fn right_adjoint_values(source: &Lattice, target: &Lattice, f: &[usize]) -> Vec<usize> {
    target
        .elements()
        .map(|y| source.join_of(source.elements().filter(|&x| target.leq(f[x], y))))
        .collect()
}

/// Epi-mono factorization through the image of a sup-map.
#[derive(Clone, Debug)]
pub struct Factorization {
    /// The image, ordered as in the target; joins agree with the target's.
    pub image: Arc<Lattice>,
    /// Target elements forming the image, in image-index order.
    pub embedding: Vec<usize>,
    pub epi: SupMap,
    pub mono: SupMap,
}

pub fn image_factorization(f: &SupMap) -> Factorization {
    let target = f.target();
    let mut embedding: Vec<usize> = f.values().to_vec();
    embedding.sort_unstable();
    embedding.dedup();
    let image = Arc::new(
        Lattice::from_leq(embedding.len(), |i, j| target.leq(embedding[i], embedding[j]))
            .expect("the image of a sup-map is a sub-join-semilattice"),
    );
    let position = |y: usize| embedding.binary_search(&y).expect("value in image");
    let epi = SupMap::new_unchecked(
        f.source().clone(),
        image.clone(),
        f.values().iter().map(|&y| position(y)).collect(),
    );
    let mono = SupMap::new_unchecked(image.clone(), target.clone(), embedding.clone());
    Factorization {
        image,
        embedding,
        epi,
        mono,
    }
}
