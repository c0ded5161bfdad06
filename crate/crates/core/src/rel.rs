//! Frobenius structures in the category of sets and relations.
//!
//! A ternary relation `R ⊆ X³` is read as a multivalued multiplication
//! `(x, y) ↦ {z : (x, y, z) ∈ R}`. A witness is a permutation `l` with
//! `r = l⁻¹` such that `(x, y, l(z)) ∈ R ⇔ (y, z, r(x)) ∈ R`.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::quantale::Check;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryRel {
    size: usize,
    bits: FixedBitSet,
}

impl TernaryRel {
    pub fn new(size: usize, triples: impl IntoIterator<Item = (usize, usize, usize)>) -> Result<TernaryRel> {
        let mut bits = FixedBitSet::with_capacity(size * size * size);
        for (x, y, z) in triples {
            if x >= size || y >= size || z >= size {
                return Err(Error::InvalidParameter(format!(
                    "triple ({x}, {y}, {z}) outside a universe of size {size}"
                )));
            }
            bits.insert((x * size + y) * size + z);
        }
        Ok(TernaryRel { size, bits })
    }

    pub fn from_fn(size: usize, f: impl Fn(usize, usize, usize) -> bool) -> TernaryRel {
        let mut bits = FixedBitSet::with_capacity(size * size * size);
        for i in 0..size * size * size {
            if f(i / (size * size), i / size % size, i % size) {
                bits.insert(i);
            }
        }
        TernaryRel { size, bits }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn contains(&self, x: usize, y: usize, z: usize) -> bool {
        self.bits.contains((x * self.size + y) * self.size + z)
    }

    /// Triples in lexicographic order.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.size;
        self.bits
            .ones()
            .map(|i| (i / (n * n), i / n % n, i % n))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// `(x, y, z) ∈ R ⇔ (y, z, x) ∈ R`.
    pub fn is_cyclic(&self) -> bool {
        let n = self.size;
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| self.contains(x, y, z) == self.contains(y, z, x))))
    }
}

/// First `(x, y, z, w)` where `∃u. xyRu ∧ uzRw` and `∃v. yzRv ∧ xvRw` differ.
pub fn associativity_counterexample(r: &TernaryRel) -> Option<[usize; 4]> {
    let n = r.size;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    let left = (0..n).any(|u| r.contains(x, y, u) && r.contains(u, z, w));
                    let right = (0..n).any(|v| r.contains(y, z, v) && r.contains(x, v, w));
                    if left != right {
                        return Some([x, y, z, w]);
                    }
                }
            }
        }
    }
    None
}

pub fn is_associative_rel(r: &TernaryRel) -> bool {
    associativity_counterexample(r).is_none()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelWitness {
    pub l: Vec<usize>,
}

impl RelWitness {
    pub fn r(&self) -> Vec<usize> {
        inverse(&self.l)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelReport {
    pub bijective: Check,
    pub mutual_inverse: Check,
    pub associative: Check,
    pub equivalence: Check,
}

impl RelReport {
    pub fn all_pass(&self) -> bool {
        self.bijective.ok && self.mutual_inverse.ok && self.associative.ok && self.equivalence.ok
    }
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (x, &y) in p.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    p.len() == n && p.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}

pub fn verify_rel_frobenius(rel: &TernaryRel, l: &[usize], r: &[usize]) -> RelReport {
    let n = rel.size;
    let associative = Check::from_search(associativity_counterexample(rel).map(|c| c.to_vec()));
    let in_range = l.len() == n && r.len() == n && l.iter().chain(r).all(|&v| v < n);
    if !in_range {
        let bad = Check {
            ok: false,
            counterexample: None,
        };
        return RelReport {
            bijective: bad.clone(),
            mutual_inverse: bad.clone(),
            associative,
            equivalence: bad,
        };
    }
    let bijective = if !is_permutation(l, n) {
        Check::fail(vec![0])
    } else if !is_permutation(r, n) {
        Check::fail(vec![1])
    } else {
        Check::pass()
    };
    let mutual_inverse = Check::from_search(
        (0..n)
            .find(|&x| r[l[x]] != x || l[r[x]] != x)
            .map(|x| vec![x]),
    );
    let mut failure = None;
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if rel.contains(x, y, l[z]) != rel.contains(y, z, r[x]) {
                    failure = Some(vec![x, y, z]);
                    break 'outer;
                }
            }
        }
    }
    RelReport {
        bijective,
        mutual_inverse,
        associative,
        equivalence: Check::from_search(failure),
    }
}

struct RelSearch<'a> {
    rel: &'a TernaryRel,
    l: Vec<Option<usize>>,
    r: Vec<Option<usize>>,
    out: Vec<RelWitness>,
}

impl RelSearch<'_> {
    /// Triples decided by the assignment `l(k) = v` all satisfy the law.
    fn consistent(&self, k: usize, v: usize) -> bool {
        let n = self.rel.size;
        for x in 0..n {
            let Some(rx) = self.r[x] else { continue };
            for z in 0..n {
                let Some(lz) = self.l[z] else { continue };
                if z != k && x != v {
                    continue;
                }
                for y in 0..n {
                    if self.rel.contains(x, y, lz) != self.rel.contains(y, z, rx) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, k: usize) {
        let n = self.rel.size;
        if k == n {
            let l: Vec<usize> = self.l.iter().map(|v| v.expect("assigned")).collect();
            self.out.push(RelWitness { l });
            return;
        }
        for v in 0..n {
            if self.r[v].is_some() {
                continue;
            }
            self.l[k] = Some(v);
            self.r[v] = Some(k);
            if self.consistent(k, v) {
                self.run(k + 1);
            }
            self.l[k] = None;
            self.r[v] = None;
        }
    }
}

/// All witnesses, with `l` in lexicographic order.
pub fn search_rel_frobenius(rel: &TernaryRel, caps: &Caps) -> Result<Vec<RelWitness>> {
    if rel.size > caps.rel_size {
        return Err(Error::limit("relation universe size", caps.rel_size));
    }
    if let Some([x, y, z, _]) = associativity_counterexample(rel) {
        return Err(Error::NotAssociative([x, y, z]));
    }
    let mut search = RelSearch {
        rel,
        l: vec![None; rel.size],
        r: vec![None; rel.size],
        out: Vec::new(),
    };
    search.run(0);
    Ok(search.out)
}

/// A relational Frobenius structure built from a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRelation {
    pub rel: TernaryRel,
    pub l: Vec<usize>,
    pub r: Vec<usize>,
}

/// The graph `{(x, y, z) : x·y = z}` of a group multiplication with
/// `l = r = z ↦ z⁻¹·e` for a central `e`. Then `(x, y, l(z)) ∈ R` and
/// `(y, z, r(x)) ∈ R` both say `x·y·z = e`.
pub fn group_relation(table: &[Vec<usize>], e: usize) -> Result<GroupRelation> {
    let n = table.len();
    if n == 0 || table.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
        return Err(Error::NotAGroup("table must be square with entries in range".into()));
    }
    if e >= n {
        return Err(Error::InvalidParameter(format!("dualizer {e} out of range")));
    }
    let mul = |x: usize, y: usize| table[x][y];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if mul(mul(x, y), z) != mul(x, mul(y, z)) {
                    return Err(Error::NotAGroup(format!("not associative at ({x}, {y}, {z})")));
                }
            }
        }
    }
    let id = (0..n)
        .find(|&i| (0..n).all(|x| mul(i, x) == x && mul(x, i) == x))
        .ok_or_else(|| Error::NotAGroup("no two-sided identity".into()))?;
    let inv: Vec<usize> = (0..n)
        .map(|x| {
            (0..n)
                .find(|&y| mul(x, y) == id && mul(y, x) == id)
                .ok_or_else(|| Error::NotAGroup(format!("{x} has no inverse")))
        })
        .collect::<Result<_>>()?;
    if (0..n).any(|x| mul(x, e) != mul(e, x)) {
        return Err(Error::InvalidParameter(format!("dualizer {e} is not central")));
    }
    let rel = TernaryRel::from_fn(n, |x, y, z| mul(x, y) == z);
    let l: Vec<usize> = (0..n).map(|z| mul(inv[z], e)).collect();
    let out = GroupRelation {
        rel,
        r: inverse(&l),
        l,
    };
    let report = verify_rel_frobenius(&out.rel, &out.l, &out.r);
    if !report.all_pass() {
        return Err(Error::WitnessInvalid(format!("{report:?}")));
    }
    Ok(out)
}

/// Addition table of `Z_n`.
pub fn cyclic_group(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect()
}

/// `Z_2 × Z_2` as xor on `0..4`.
pub fn klein_group() -> Vec<Vec<usize>> {
    (0..4).map(|x| (0..4).map(|y| x ^ y).collect()).collect()
}
