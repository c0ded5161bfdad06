//! Finite lattices over dense element indices.
//!
//! A [`Lattice`] stores its order as one up-set and one down-set bitset per
//! element, together with fully tabulated binary joins and meets. Every
//! finite lattice is complete, so arbitrary joins are folds over the table.

mod canonical;
mod enumerate;
pub mod family;

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::par::*;

pub use canonical::{canonical_code, is_isomorphic};
pub use enumerate::{enumerate_lattices, lattices_of_size};
pub use family::FamilySpec;

#[derive(Clone)]
pub struct Lattice {
    name: Option<String>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    join: Vec<u32>,
    meet: Vec<u32>,
    bottom: usize,
    top: usize,
}

impl Lattice {
    /// Validates an order given as a predicate and tabulates joins and meets.
    pub fn from_leq(size: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Lattice> {
        if size == 0 {
            return Err(Error::NotALattice("empty carrier has no bottom".into()));
        }
        let mut up = vec![FixedBitSet::with_capacity(size); size];
        let mut down = vec![FixedBitSet::with_capacity(size); size];
        for x in 0..size {
            for y in 0..size {
                if leq(x, y) {
                    up[x].insert(y);
                    down[y].insert(x);
                }
            }
        }
        Self::from_sets(up, down)
    }

    /// Validates a square boolean relation, `rel[x][y]` meaning `x <= y`.
    pub fn from_relation(rel: &[Vec<bool>]) -> Result<Lattice> {
        let n = rel.len();
        if rel.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidParameter("relation is not square".into()));
        }
        Self::from_leq(n, |x, y| rel[x][y])
    }

    /// Builds the lattice whose order is the reflexive-transitive closure of
    /// the given cover pairs `(lower, upper)`.
    pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> Result<Lattice> {
        if let Some(&(a, b)) = covers.iter().find(|&&(a, b)| a >= size || b >= size) {
            return Err(Error::InvalidParameter(format!(
                "cover ({a},{b}) out of range for size {size}"
            )));
        }
        let mut up = vec![FixedBitSet::with_capacity(size); size];
        for (x, row) in up.iter_mut().enumerate() {
            row.insert(x);
        }
        for &(a, b) in covers {
            up[a].insert(b);
        }
        // Warshall over bitset rows.
        for k in 0..size {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        let mut down = vec![FixedBitSet::with_capacity(size); size];
        for x in 0..size {
            for y in up[x].ones() {
                down[y].insert(x);
            }
        }
        if size == 0 {
            return Err(Error::NotALattice("empty carrier has no bottom".into()));
        }
        Self::from_sets(up, down)
    }

    fn from_sets(up: Vec<FixedBitSet>, down: Vec<FixedBitSet>) -> Result<Lattice> {
        let n = up.len();
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(Error::NotAPartialOrder(format!("{x} <= {x} fails")));
            }
            for y in up[x].ones() {
                if y != x && up[y].contains(x) {
                    return Err(Error::NotAPartialOrder(format!(
                        "{x} <= {y} and {y} <= {x} with {x} != {y}"
                    )));
                }
                if !up[y].is_subset(&up[x]) {
                    let z = up[y].difference(&up[x]).next().unwrap_or(y);
                    return Err(Error::NotAPartialOrder(format!(
                        "{x} <= {y} <= {z} but not {x} <= {z}"
                    )));
                }
            }
        }
        let up_size: Vec<usize> = up.iter().map(|s| s.count_ones(..)).collect();
        let down_size: Vec<usize> = down.iter().map(|s| s.count_ones(..)).collect();

        let bound = |sets: &[FixedBitSet], sizes: &[usize], x: usize, y: usize, what: &str| {
            let mut common = sets[x].clone();
            common.intersect_with(&sets[y]);
            let best = common.ones().max_by_key(|&c| (sizes[c], std::cmp::Reverse(c)));
            match best {
                Some(c) if sizes[c] == common.count_ones(..) => Ok(c as u32),
                _ => Err(Error::NotALattice(format!("{x} and {y} have no {what}"))),
            }
        };
        let rows: Result<Vec<(Vec<u32>, Vec<u32>)>> = (0..n)
            .into_par_iter()
            .map(|x| {
                let mut j = Vec::with_capacity(n);
                let mut m = Vec::with_capacity(n);
                for y in 0..n {
                    j.push(bound(&up, &up_size, x, y, "least upper bound")?);
                    m.push(bound(&down, &down_size, x, y, "greatest lower bound")?);
                }
                Ok((j, m))
            })
            .collect();
        let rows = rows?;
        let mut join = Vec::with_capacity(n * n);
        let mut meet = Vec::with_capacity(n * n);
        for (j, m) in rows {
            join.extend(j);
            meet.extend(m);
        }
        let bottom = (0..n).find(|&x| up_size[x] == n);
        let top = (0..n).find(|&x| down_size[x] == n);
        match (bottom, top) {
            (Some(bottom), Some(top)) => Ok(Lattice {
                name: None,
                up,
                down,
                join,
                meet,
                bottom,
                top,
            }),
            _ => Err(Error::NotALattice("missing bottom or top".into())),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn size(&self) -> usize {
        self.up.len()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size() + y] as usize
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size() + y] as usize
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// `{y : x <= y}`
    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    /// `{y : y <= x}`
    pub fn down_set(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    /// Join of an arbitrary (possibly empty) family of elements.
    pub fn join_of(&self, elems: impl IntoIterator<Item = usize>) -> usize {
        elems
            .into_iter()
            .fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of an arbitrary (possibly empty) family of elements.
    pub fn meet_of(&self, elems: impl IntoIterator<Item = usize>) -> usize {
        elems.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        self.down[x]
            .ones()
            .filter(|&y| y != x)
            .filter(|&y| {
                let mut between = self.up[y].clone();
                between.intersect_with(&self.down[x]);
                between.count_ones(..) == 2
            })
            .collect()
    }

    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        self.up[x]
            .ones()
            .filter(|&y| y != x)
            .filter(|&y| {
                let mut between = self.down[y].clone();
                between.intersect_with(&self.up[x]);
                between.count_ones(..) == 2
            })
            .collect()
    }

    /// All cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .elements()
            .flat_map(|x| self.lower_covers(x).into_iter().map(move |y| (y, x)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Length of the longest chain from bottom to `x`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut order: Vec<usize> = self.elements().collect();
        order.sort_by_key(|&x| self.down[x].count_ones(..));
        let mut rank = vec![0; self.size()];
        for &x in &order {
            rank[x] = self
                .lower_covers(x)
                .into_iter()
                .map(|y| rank[y] + 1)
                .max()
                .unwrap_or(0);
        }
        rank
    }

    /// The opposite lattice on the same element indices.
    pub fn op(&self) -> Lattice {
        Lattice {
            name: self.name.as_ref().map(|n| format!("op({n})")),
            up: self.down.clone(),
            down: self.up.clone(),
            join: self.meet.clone(),
            meet: self.join.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// Elements `x != bottom` such that `x = a v b` forces `x = a` or `x = b`.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        self.elements()
            .filter(|&x| x != self.bottom && self.lower_covers(x).len() == 1)
            .collect()
    }

    pub fn meet_irreducibles(&self) -> Vec<usize> {
        self.elements()
            .filter(|&x| x != self.top && self.upper_covers(x).len() == 1)
            .collect()
    }

    pub fn is_distributive(&self) -> bool {
        let n = self.size();
        (0..n).into_par_iter().all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))
                })
            })
        })
    }

    /// The totally-below relation: `(y, x)` is present when every family
    /// whose join dominates `x` has a member above `y`.
    ///
    /// Lattices up to `caps.totally_below_size` are checked against every
    /// subset. Larger ones use the equivalent single test against the
    /// family `{s : y is not below s}`.
    pub fn totally_below(&self, caps: &Caps) -> BinRel {
        if self.size() <= caps.totally_below_size.min(20) {
            self.totally_below_subsets()
        } else {
            self.totally_below_complement()
        }
    }

    fn totally_below_subsets(&self) -> BinRel {
        let n = self.size();
        let count = 1usize << n;
        let mut joins = vec![self.bottom as u32; count];
        for s in 1..count {
            let low = s.trailing_zeros() as usize;
            joins[s] = self.join(joins[s & (s - 1)] as usize, low) as u32;
        }
        let up_masks: Vec<usize> = self
            .elements()
            .map(|y| self.up[y].ones().fold(0usize, |m, s| m | (1 << s)))
            .collect();
        let rows: Vec<Vec<(usize, usize)>> = (0..n)
            .into_par_iter()
            .map(|x| {
                let covering: Vec<usize> = (0..count)
                    .filter(|&s| self.leq(x, joins[s] as usize))
                    .collect();
                (0..n)
                    .filter(|&y| covering.iter().all(|&s| s & up_masks[y] != 0))
                    .map(|y| (y, x))
                    .collect()
            })
            .collect();
        BinRel::from_pairs(n, rows.into_iter().flatten())
    }

    fn totally_below_complement(&self) -> BinRel {
        let n = self.size();
        let pairs = (0..n).flat_map(|y| {
            let outside = self.join_of(self.elements().filter(|&s| !self.leq(y, s)));
            (0..n)
                .filter(move |&x| !self.leq(x, outside))
                .map(move |x| (y, x))
        });
        BinRel::from_pairs(n, pairs)
    }

    /// Every element is the join of the elements totally below it.
    pub fn is_completely_distributive(&self, caps: &Caps) -> bool {
        let tb = self.totally_below(caps);
        self.elements()
            .all(|x| self.join_of(self.elements().filter(|&y| tb.contains(y, x))) == x)
    }

    /// Graphviz rendering of the Hasse diagram, bottom at rank 0.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let title = self.name.as_deref().unwrap_or("L");
        out.push_str(&format!("digraph \"{}\" {{\n  rankdir=BT;\n", title.replace('"', "'")));
        let ranks = self.ranks();
        let max_rank = ranks.iter().copied().max().unwrap_or(0);
        for r in 0..=max_rank {
            let members: Vec<String> = self
                .elements()
                .filter(|&x| ranks[x] == r)
                .map(|x| x.to_string())
                .collect();
            out.push_str(&format!("  {{ rank=same; {}; }}\n", members.join("; ")));
        }
        for (a, b) in self.covers() {
            out.push_str(&format!("  {a} -> {b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.up == other.up
    }
}

impl Eq for Lattice {}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lattice")
            .field("name", &self.name)
            .field("size", &self.size())
            .field("covers", &self.covers())
            .finish()
    }
}

/// A binary relation on the elements of a lattice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinRel {
    size: usize,
    bits: FixedBitSet,
}

impl BinRel {
    pub fn from_pairs(size: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> BinRel {
        let mut bits = FixedBitSet::with_capacity(size * size);
        for (a, b) in pairs {
            assert!(a < size && b < size, "pair ({a},{b}) out of range");
            bits.insert(a * size + b);
        }
        BinRel { size, bits }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits.contains(a * self.size + b)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.bits
            .ones()
            .map(|i| (i / self.size, i % self.size))
            .collect()
    }
}
