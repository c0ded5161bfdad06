//! Enumeration of hom-lattices `[L, M]`.
//!
//! A sup-map is determined by its values on the join-irreducibles of the
//! source. Those are assigned in a linear extension; each value is bounded
//! below by the image of the unique lower cover and above by
//! `f(x) ∨ f(y)` for every already-determined pair with `j ≤ x ∨ y`.
//! Leaves are checked in full, so the pruning only has to be sound.

use std::collections::HashMap;
use std::sync::Arc;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::lattice::Lattice;

use super::supmap::{is_sup_preserving, SupMap};

struct Plan {
    irreducibles: Vec<usize>,
    /// lower cover of each irreducible
    lower_cover: Vec<usize>,
    /// join-irreducible positions below each element
    support: Vec<Vec<usize>>,
    /// pairs (x, y) bounding the value of the k-th irreducible
    bounding_pairs: Vec<Vec<(usize, usize)>>,
    /// elements whose value becomes known once position k is assigned
    ready_after: Vec<Vec<usize>>,
}

impl Plan {
    fn new(source: &Lattice) -> Plan {
        let mut irreducibles = source.join_irreducibles();
        irreducibles.sort_by_key(|&j| (source.down_set(j).count_ones(..), j));
        let position: HashMap<usize, usize> =
            irreducibles.iter().enumerate().map(|(k, &j)| (j, k)).collect();
        let support: Vec<Vec<usize>> = source
            .elements()
            .map(|x| {
                source
                    .down_set(x)
                    .ones()
                    .filter_map(|j| position.get(&j).copied())
                    .collect()
            })
            .collect();
        // the element is known once its last supporting irreducible is set;
        // bottom (empty support) is known from the start
        let known_at: Vec<Option<usize>> = support.iter().map(|s| s.iter().max().copied()).collect();
        let mut ready_after = vec![Vec::new(); irreducibles.len()];
        for x in source.elements() {
            if let Some(k) = known_at[x] {
                ready_after[k].push(x);
            }
        }
        let known_before = |x: usize, k: usize| known_at[x].is_none_or(|p| p < k);
        let bounding_pairs = irreducibles
            .iter()
            .enumerate()
            .map(|(k, &j)| {
                let mut pairs = Vec::new();
                for x in source.elements().filter(|&x| known_before(x, k)) {
                    for y in (x + 1..source.size()).filter(|&y| known_before(y, k)) {
                        if source.leq(j, source.join(x, y)) {
                            pairs.push((x, y));
                        }
                    }
                }
                pairs
            })
            .collect();
        let lower_cover = irreducibles
            .iter()
            .map(|&j| source.lower_covers(j)[0])
            .collect();
        Plan {
            irreducibles,
            lower_cover,
            support,
            bounding_pairs,
            ready_after,
        }
    }
}

struct Enumerator<'a> {
    source: &'a Lattice,
    target: &'a Lattice,
    plan: Plan,
    values: Vec<usize>,
    limit: usize,
    out: Vec<Vec<usize>>,
}

impl Enumerator<'_> {
    fn run(&mut self, k: usize) -> Result<()> {
        if k == self.plan.irreducibles.len() {
            if is_sup_preserving(self.source, self.target, &self.values) {
                if self.out.len() == self.limit {
                    return Err(Error::limit("sup-maps in hom enumeration", self.limit));
                }
                self.out.push(self.values.clone());
            }
            return Ok(());
        }
        let low = self.values[self.plan.lower_cover[k]];
        let high = self.plan.bounding_pairs[k]
            .iter()
            .fold(self.target.top(), |acc, &(x, y)| {
                self.target
                    .meet(acc, self.target.join(self.values[x], self.values[y]))
            });
        if !self.target.leq(low, high) {
            return Ok(());
        }
        let candidates: Vec<usize> = self
            .target
            .up_set(low)
            .ones()
            .filter(|&m| self.target.leq(m, high))
            .collect();
        let ready = self.plan.ready_after[k].clone();
        for m in candidates {
            self.values[self.plan.irreducibles[k]] = m;
            for &x in &ready {
                let v = self.target.join_of(
                    self.plan.support[x]
                        .iter()
                        .map(|&p| self.values[self.plan.irreducibles[p]]),
                );
                self.values[x] = v;
            }
            self.run(k + 1)?;
        }
        Ok(())
    }
}

/// Value tables of all sup-maps `source → target`, in lexicographic order.
pub fn sup_maps(source: &Lattice, target: &Lattice, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    let values = vec![target.bottom(); source.size()];
    let mut e = Enumerator {
        source,
        target,
        plan: Plan::new(source),
        values,
        limit: caps.hom_maps,
        out: Vec::new(),
    };
    e.run(0)?;
    let mut out = e.out;
    out.sort_unstable();
    Ok(out)
}

/// All sup-maps between two lattices, ordered pointwise.
#[derive(Clone, Debug)]
pub struct HomLattice {
    source: Arc<Lattice>,
    target: Arc<Lattice>,
    maps: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    order: Arc<Lattice>,
}

pub fn hom_lattice(source: &Arc<Lattice>, target: &Arc<Lattice>, caps: &Caps) -> Result<HomLattice> {
    let maps = sup_maps(source, target, caps)?;
    HomLattice::from_maps(source.clone(), target.clone(), maps, caps)
}

impl HomLattice {
    pub(crate) fn from_maps(
        source: Arc<Lattice>,
        target: Arc<Lattice>,
        maps: Vec<Vec<usize>>,
        caps: &Caps,
    ) -> Result<HomLattice> {
        if maps.len() > caps.table_elements {
            return Err(Error::limit("materialized lattice elements", caps.table_elements));
        }
        let pointwise = |f: &[usize], g: &[usize]| f.iter().zip(g).all(|(&a, &b)| target.leq(a, b));
        let order = Lattice::from_leq(maps.len(), |i, j| pointwise(&maps[i], &maps[j]))?;
        let index = maps.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Ok(HomLattice {
            source,
            target,
            maps,
            index,
            order: Arc::new(order),
        })
    }

    pub fn source(&self) -> &Arc<Lattice> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Lattice> {
        &self.target
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// The pointwise order as a lattice over map indices.
    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.order
    }

    pub fn values(&self, i: usize) -> &[usize] {
        &self.maps[i]
    }

    pub fn all_values(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn map(&self, i: usize) -> SupMap {
        SupMap::new_unchecked(self.source.clone(), self.target.clone(), self.maps[i].clone())
    }

    pub fn index_of(&self, values: &[usize]) -> Option<usize> {
        self.index.get(values).copied()
    }

    pub fn identity_index(&self) -> Option<usize> {
        let id: Vec<usize> = self.source.elements().collect();
        self.index_of(&id)
    }
}
