//! The tensor product `L ⊗ M` as the lattice of bi-ideals of `L × M`.
//!
//! A bi-ideal is a down-set of `L × M` that is closed under joins in each
//! coordinate separately. Pair `(x, y)` is stored at bit `x * |M| + y`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::lattice::Lattice;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorElement {
    width: usize,
    bits: FixedBitSet,
}

impl TensorElement {
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.bits.contains(x * self.width + y)
    }

    /// Member pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.bits
            .ones()
            .map(|i| (i / self.width, i % self.width))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_subset(&self, other: &TensorElement) -> bool {
        self.bits.is_subset(&other.bits)
    }
}

/// The closure operator on subsets of `left × right`.
#[derive(Clone, Debug)]
pub struct BiIdealSpace {
    left: Arc<Lattice>,
    right: Arc<Lattice>,
}

impl BiIdealSpace {
    pub fn new(left: Arc<Lattice>, right: Arc<Lattice>) -> BiIdealSpace {
        BiIdealSpace { left, right }
    }

    pub fn left(&self) -> &Arc<Lattice> {
        &self.left
    }

    pub fn right(&self) -> &Arc<Lattice> {
        &self.right
    }

    fn empty_bits(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.left.size() * self.right.size())
    }

    /// Smallest bi-ideal containing the given pairs.
    pub fn closure(&self, pairs: impl IntoIterator<Item = (usize, usize)>) -> TensorElement {
        let w = self.right.size();
        let mut bits = self.empty_bits();
        for (x, y) in pairs {
            bits.insert(x * w + y);
        }
        self.close_bits(bits)
    }

    pub(crate) fn close_bits(&self, mut bits: FixedBitSet) -> TensorElement {
        let (l, m) = (&*self.left, &*self.right);
        let w = m.size();
        // Make every column, then every row, a principal down-set; at the
        // fixpoint both are, which is exactly closure in both coordinates.
        loop {
            let mut changed = false;
            for y in m.elements() {
                let top = l.join_of(l.elements().filter(|&x| bits.contains(x * w + y)));
                for x in l.elements() {
                    let inside = l.leq(x, top);
                    if inside && !bits.put(x * w + y) {
                        changed = true;
                    }
                }
            }
            for x in l.elements() {
                let top = m.join_of(m.elements().filter(|&y| bits.contains(x * w + y)));
                for y in m.down_set(top).ones() {
                    if !bits.put(x * w + y) {
                        changed = true;
                    }
                }
            }
            if !changed {
                return TensorElement { width: w, bits };
            }
        }
    }

    pub fn is_closed(&self, d: &TensorElement) -> bool {
        self.close_bits(d.bits.clone()) == *d
    }

    pub fn bottom(&self) -> TensorElement {
        self.closure(std::iter::empty())
    }

    pub fn elementary(&self, x: usize, y: usize) -> TensorElement {
        self.closure([(x, y)])
    }

    pub fn join(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        let mut bits = a.bits.clone();
        bits.union_with(&b.bits);
        self.close_bits(bits)
    }
}

/// All bi-ideals of `left × right`, ordered by inclusion.
#[derive(Clone, Debug)]
pub struct TensorLattice {
    space: BiIdealSpace,
    elements: Vec<TensorElement>,
    index: HashMap<TensorElement, usize>,
    order: Arc<Lattice>,
}

pub fn tensor_lattice(left: &Arc<Lattice>, right: &Arc<Lattice>, caps: &Caps) -> Result<TensorLattice> {
    TensorLattice::new(left.clone(), right.clone(), caps)
}

impl TensorLattice {
    pub fn new(left: Arc<Lattice>, right: Arc<Lattice>, caps: &Caps) -> Result<TensorLattice> {
        let space = BiIdealSpace::new(left, right);
        let n = space.left.size() * space.right.size();
        let start = space.bottom();
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        let mut found = Vec::new();
        while let Some(d) = queue.pop_front() {
            for p in 0..n {
                if d.bits.contains(p) {
                    continue;
                }
                let mut bits = d.bits.clone();
                bits.insert(p);
                let next = space.close_bits(bits);
                if !seen.contains(&next) {
                    if seen.len() >= caps.hom_maps {
                        return Err(Error::limit("bi-ideals in tensor enumeration", caps.hom_maps));
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
            found.push(d);
        }
        if found.len() > caps.table_elements {
            return Err(Error::limit("materialized lattice elements", caps.table_elements));
        }
        found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.pairs().cmp(&b.pairs())));
        let order = Lattice::from_leq(found.len(), |i, j| found[i].is_subset(&found[j]))?;
        let index = found.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
        Ok(TensorLattice {
            space,
            elements: found,
            index,
            order: Arc::new(order),
        })
    }

    pub fn space(&self) -> &BiIdealSpace {
        &self.space
    }

    pub fn left(&self) -> &Arc<Lattice> {
        &self.space.left
    }

    pub fn right(&self) -> &Arc<Lattice> {
        &self.space.right
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &TensorElement {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[TensorElement] {
        &self.elements
    }

    pub fn index_of(&self, d: &TensorElement) -> Option<usize> {
        self.index.get(d).copied()
    }

    /// Inclusion order as a lattice over element indices.
    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.order
    }

    pub fn elementary_index(&self, x: usize, y: usize) -> usize {
        self.index_of(&self.space.elementary(x, y))
            .expect("closures are enumerated")
    }
}

pub fn elementary_tensor(t: &TensorLattice, x: usize, y: usize) -> TensorElement {
    t.space.elementary(x, y)
}

/// `D ↦ (x ↦ ∨{y : (x, y) ∈ D})`, a sup-map `left → op(right)`.
pub fn tensor_to_hom(space: &BiIdealSpace, d: &TensorElement) -> Vec<usize> {
    let m = &space.right;
    space
        .left
        .elements()
        .map(|x| m.join_of(m.elements().filter(|&y| d.contains(x, y))))
        .collect()
}

/// Inverse of [`tensor_to_hom`]: `f ↦ {(x, y) : y ≤ f(x)}`.
pub fn hom_to_tensor(space: &BiIdealSpace, f: &[usize]) -> TensorElement {
    let m = &space.right;
    let pairs = space
        .left
        .elements()
        .flat_map(|x| m.down_set(f[x]).ones().map(move |y| (x, y)));
    let mut bits = space.empty_bits();
    for (x, y) in pairs {
        bits.insert(x * m.size() + y);
    }
    TensorElement {
        width: m.size(),
        bits,
    }
}
