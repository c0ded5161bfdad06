//! Frobenius structures on finite quantales.
//!
//! A witness is a pair `(l, r)` of mutually inverse order anti-isomorphisms
//! forming a Galois connection and satisfying `y\l(x) = r(y)/x`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::lattice::Lattice;

use super::laws::{find_pair, find_triple, Check};
use super::Quantale;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    FromDualizing(usize),
    Searched,
    Constructed,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::FromDualizing(d) => write!(f, "dualizing:{d}"),
            Origin::Searched => write!(f, "searched"),
            Origin::Constructed => write!(f, "constructed"),
        }
    }
}

impl FromStr for Origin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "searched" => Ok(Origin::Searched),
            "constructed" => Ok(Origin::Constructed),
            _ => s
                .strip_prefix("dualizing:")
                .and_then(|d| d.parse().ok())
                .map(Origin::FromDualizing)
                .ok_or_else(|| Error::InvalidParameter(format!("unknown witness origin `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusWitness {
    pub l: Vec<usize>,
    pub r: Vec<usize>,
    pub origin: Origin,
}

impl FrobeniusWitness {
    /// True when `l = r`.
    pub fn is_cyclic(&self) -> bool {
        self.l == self.r
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusReport {
    pub antitone_bijection: Check,
    pub mutual_inverse: Check,
    pub galois: Check,
    pub contraposition: Check,
    pub shift: Check,
    pub pairing_associative: Check,
    /// Contraposition, shift and pairing associativity agree. They are
    /// equivalent in the presence of the Galois condition, so this is
    /// vacuously true when that fails.
    pub laws_agree: bool,
}

impl FrobeniusReport {
    pub fn all_pass(&self) -> bool {
        self.checks().iter().all(|(_, c)| c.ok) && self.laws_agree
    }

    pub fn checks(&self) -> [(&'static str, &Check); 6] {
        [
            ("antitone_bijection", &self.antitone_bijection),
            ("mutual_inverse", &self.mutual_inverse),
            ("galois", &self.galois),
            ("contraposition", &self.contraposition),
            ("shift", &self.shift),
            ("pairing_associative", &self.pairing_associative),
        ]
    }
}

pub fn verify_frobenius(q: &Quantale, l: &[usize], r: &[usize]) -> FrobeniusReport {
    let n = q.size();
    let lat = q.carrier();
    if l.len() != n || r.len() != n || l.iter().chain(r).any(|&v| v >= n) {
        let bad = Check {
            ok: false,
            counterexample: None,
        };
        return FrobeniusReport {
            antitone_bijection: bad.clone(),
            mutual_inverse: bad.clone(),
            galois: bad.clone(),
            contraposition: bad.clone(),
            shift: bad.clone(),
            pairing_associative: bad,
            laws_agree: true,
        };
    }
    let antitone = |f: &[usize], x: usize, y: usize| lat.leq(x, y) == lat.leq(f[y], f[x]);
    let antitone_bijection = Check::from_search(find_pair(n, |x, y| {
        antitone(l, x, y) && antitone(r, x, y)
    }));
    let mutual_inverse = Check::from_search(
        (0..n)
            .find(|&x| r[l[x]] != x || l[r[x]] != x)
            .map(|x| vec![x]),
    );
    let galois = Check::from_search(find_pair(n, |x, y| lat.leq(x, l[y]) == lat.leq(y, r[x])));
    let contraposition = Check::from_search(find_pair(n, |x, y| {
        q.left_residual(y, l[x]) == q.right_residual(r[y], x)
    }));
    let shift = Check::from_search(find_triple(n, |x, y, z| {
        let a = lat.leq(q.mult(x, y), l[z]);
        let b = lat.leq(q.mult(y, z), r[x]);
        let c = lat.leq(x, l[q.mult(y, z)]);
        a == b && b == c
    }));
    // π(x, y) = [x ≰ l(y)]; π(x∗y, z) = π(x, y∗z)
    let pairing_associative = Check::from_search(find_triple(n, |x, y, z| {
        lat.leq(q.mult(x, y), l[z]) == lat.leq(x, l[q.mult(y, z)])
    }));
    let laws_agree = !galois.ok
        || (contraposition.ok == shift.ok && shift.ok == pairing_associative.ok);
    FrobeniusReport {
        antitone_bijection,
        mutual_inverse,
        galois,
        contraposition,
        shift,
        pairing_associative,
        laws_agree,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dualizing {
    pub element: usize,
    /// `x\d = d/x` for every `x`.
    pub cyclic: bool,
}

fn is_dualizing(q: &Quantale, d: usize) -> bool {
    (0..q.size()).all(|x| {
        q.left_residual(q.right_residual(d, x), d) == x
            && q.right_residual(d, q.left_residual(x, d)) == x
    })
}

/// All `d` with `(d/x)\d = x = d/(x\d)` for every `x`.
pub fn dualizing_elements(q: &Quantale) -> Vec<Dualizing> {
    (0..q.size())
        .filter(|&d| is_dualizing(q, d))
        .map(|d| Dualizing {
            element: d,
            cyclic: (0..q.size()).all(|x| q.left_residual(x, d) == q.right_residual(d, x)),
        })
        .collect()
}

/// `l(x) = d/x`, `r(x) = x\d`.
pub fn frobenius_from_dualizing(q: &Quantale, d: usize) -> Result<FrobeniusWitness> {
    if d >= q.size() || !is_dualizing(q, d) {
        return Err(Error::NotDualizing(d));
    }
    Ok(FrobeniusWitness {
        l: (0..q.size()).map(|x| q.right_residual(d, x)).collect(),
        r: (0..q.size()).map(|x| q.left_residual(x, d)).collect(),
        origin: Origin::FromDualizing(d),
    })
}

struct IsoSearch<'a> {
    a: &'a Lattice,
    b: &'a Lattice,
    order: Vec<usize>,
    sig_a: Vec<(usize, usize)>,
    sig_b: Vec<(usize, usize)>,
    image: Vec<usize>,
    used: Vec<bool>,
    out: Vec<Vec<usize>>,
}

impl IsoSearch<'_> {
    fn run(&mut self, k: usize) {
        if k == self.order.len() {
            self.out.push(self.image.clone());
            return;
        }
        let x = self.order[k];
        for y in self.b.elements() {
            if self.used[y] || self.sig_b[y] != self.sig_a[x] {
                continue;
            }
            let consistent = self.order[..k].iter().all(|&p| {
                let fp = self.image[p];
                self.a.leq(p, x) == self.b.leq(fp, y) && self.a.leq(x, p) == self.b.leq(y, fp)
            });
            if consistent {
                self.used[y] = true;
                self.image[x] = y;
                self.run(k + 1);
                self.used[y] = false;
            }
        }
    }
}

fn signature(l: &Lattice, x: usize) -> (usize, usize) {
    (l.down_set(x).count_ones(..), l.up_set(x).count_ones(..))
}

/// Every order isomorphism `a → b`, as value tables in lexicographic order.
pub fn order_isomorphisms(a: &Lattice, b: &Lattice) -> Vec<Vec<usize>> {
    if a.size() != b.size() {
        return Vec::new();
    }
    let mut order: Vec<usize> = a.elements().collect();
    order.sort_by_key(|&x| (a.down_set(x).count_ones(..), x));
    let mut search = IsoSearch {
        a,
        b,
        order,
        sig_a: a.elements().map(|x| signature(a, x)).collect(),
        sig_b: b.elements().map(|y| signature(b, y)).collect(),
        image: vec![0; a.size()],
        used: vec![false; b.size()],
        out: Vec::new(),
    };
    search.run(0);
    let mut out = search.out;
    out.sort_unstable();
    out
}

/// Order anti-automorphisms of `l`.
pub fn anti_automorphisms(l: &Lattice) -> Vec<Vec<usize>> {
    order_isomorphisms(l, &l.op())
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (x, &y) in p.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

/// Every Frobenius structure on `q`.
///
/// For unital quantales these are exactly the structures induced by the
/// dualizing elements. Otherwise all anti-automorphisms are tried, which is
/// bounded by `caps.search_carrier`.
pub fn search_frobenius(q: &Quantale, caps: &Caps) -> Result<Vec<FrobeniusWitness>> {
    let passes = |w: &FrobeniusWitness| verify_frobenius(q, &w.l, &w.r).all_pass();
    if q.unit().is_some() {
        return Ok(dualizing_elements(q)
            .into_iter()
            .map(|d| frobenius_from_dualizing(q, d.element).expect("scanned as dualizing"))
            .filter(passes)
            .collect());
    }
    if q.size() > caps.search_carrier {
        return Err(Error::limit("carrier size for anti-isomorphism search", caps.search_carrier));
    }
    Ok(anti_automorphisms(q.carrier())
        .into_iter()
        .map(|l| FrobeniusWitness {
            r: inverse(&l),
            l,
            origin: Origin::Searched,
        })
        .filter(passes)
        .collect())
}

/// `μ_B(b1, b2) = b2 / l⁻¹(b1) = r⁻¹(b2) \ b1` on `op(Q)`.
pub fn dual_multiplication(q: &Quantale, w: &FrobeniusWitness) -> Result<Quantale> {
    let report = verify_frobenius(q, &w.l, &w.r);
    if !report.all_pass() {
        let failed: Vec<&str> = report
            .checks()
            .iter()
            .filter(|(_, c)| !c.ok)
            .map(|(name, _)| *name)
            .collect();
        return Err(Error::WitnessInvalid(failed.join(", ")));
    }
    let n = q.size();
    let mut mult = Vec::with_capacity(n * n);
    for b1 in 0..n {
        for b2 in 0..n {
            let first = q.right_residual(b2, w.r[b1]);
            let second = q.left_residual(w.l[b2], b1);
            if first != second {
                return Err(Error::WitnessInvalid(format!(
                    "the two legs of the dual multiplication differ at ({b1}, {b2})"
                )));
            }
            mult.push(first);
        }
    }
    Quantale::new(std::sync::Arc::new(q.carrier().op()), mult, true)
}
