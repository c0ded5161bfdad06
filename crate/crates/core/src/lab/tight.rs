//! Tight maps: the sup-closure of the one-step maps, which is the image of
//! mix. They form a quantale under composition that always carries a
//! Frobenius structure, with or without a unit.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::par::*;
use crate::quantale::{
    endo_quantale, verify_frobenius, EndoQuantale, FrobeniusReport, FrobeniusWitness, Origin,
    Quantale,
};
use crate::slatt::one_step_values;

/// `∧{g(x) : x ≰ c}`, the largest `d` with `one_step(c, d) ≤ g`.
fn largest_step(l: &Lattice, g: &[usize], c: usize) -> usize {
    l.meet_of(l.elements().filter(|&x| !l.leq(x, c)).map(|x| g[x]))
}

/// True iff `f` is the join of the one-step maps below it.
pub fn is_tight(l: &Lattice, f: &[usize]) -> bool {
    if f.len() != l.size() {
        return false;
    }
    let steps: Vec<usize> = l.elements().map(|c| largest_step(l, f, c)).collect();
    l.elements().all(|x| {
        let below = l.join_of(l.elements().filter(|&c| !l.leq(x, c)).map(|c| steps[c]));
        below == f[x]
    })
}

fn pairing_unchecked(l: &Lattice, f: &[usize], g_steps: &[usize]) -> bool {
    l.elements().any(|c| !l.leq(f[g_steps[c]], c))
}

/// `⊤` iff some `one_step(c, d) ≤ g` has `f(d) ≰ c`.
pub fn tight_pairing(l: &Lattice, f: &[usize], g: &[usize]) -> Result<bool> {
    if !is_tight(l, f) || !is_tight(l, g) {
        return Err(Error::NotTight);
    }
    let steps: Vec<usize> = l.elements().map(|c| largest_step(l, g, c)).collect();
    Ok(pairing_unchecked(l, f, &steps))
}

#[derive(Clone, Debug)]
pub struct TightQuantale {
    base: Arc<Lattice>,
    maps: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    quantale: Quantale,
    pairing: Vec<bool>,
    negation: Option<FrobeniusWitness>,
}

/// The tight maps of `l` under composition, with their pairing table.
pub fn tight_maps(l: &Arc<Lattice>, caps: &Caps) -> Result<TightQuantale> {
    let limit = caps.hom_maps.min(caps.table_elements);
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut maps: Vec<Vec<usize>> = Vec::new();
    for a in l.elements() {
        for b in l.elements() {
            let f = one_step_values(l, a, b);
            if seen.insert(f.clone()) {
                maps.push(f);
            }
        }
    }
    // join closure; every new map is joined with everything found so far
    let mut next = 0;
    while next < maps.len() {
        let f = maps[next].clone();
        let mut k = 0;
        while k <= next {
            let joined: Vec<usize> = f.iter().zip(&maps[k]).map(|(&a, &b)| l.join(a, b)).collect();
            if seen.insert(joined.clone()) {
                if maps.len() >= limit {
                    return Err(Error::limit("tight maps", limit));
                }
                maps.push(joined);
            }
            k += 1;
        }
        next += 1;
    }
    maps.sort_unstable();
    let n = maps.len();
    let index: HashMap<Vec<usize>, usize> =
        maps.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let order = Lattice::from_leq(n, |i, j| {
        maps[i].iter().zip(&maps[j]).all(|(&a, &b)| l.leq(a, b))
    })?;
    let mult: Vec<Option<usize>> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let (maps, index) = (&maps, &index);
            (0..n).map(move |j| {
                let composite: Vec<usize> = maps[i].iter().map(|&y| maps[j][y]).collect();
                index.get(&composite).copied()
            })
        })
        .collect();
    let mult: Vec<usize> = mult.into_iter().collect::<Option<_>>().ok_or(Error::NotTight)?;
    let unit = (0..n).find(|&e| (0..n).all(|x| mult[e * n + x] == x && mult[x * n + e] == x));
    let quantale = Quantale::new_unchecked(Arc::new(order), mult, unit);
    let steps: Vec<Vec<usize>> = maps
        .iter()
        .map(|g| l.elements().map(|c| largest_step(l, g, c)).collect())
        .collect();
    let pairing: Vec<bool> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let (maps, steps) = (&maps, &steps);
            (0..n).map(move |j| pairing_unchecked(l, &maps[i], &steps[j]))
        })
        .collect();
    Ok(TightQuantale {
        base: l.clone(),
        maps,
        index,
        quantale,
        pairing,
        negation: None,
    })
}

/// Tight maps together with the negation `l(g) = ∨{f : π(f, g) = ⊥}`.
pub fn tight_frobenius(l: &Arc<Lattice>, caps: &Caps) -> Result<TightQuantale> {
    let mut t = tight_maps(l, caps)?;
    t.negation = t.compute_negation();
    Ok(t)
}

impl TightQuantale {
    pub fn base(&self) -> &Arc<Lattice> {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// Value tables, in lexicographic order.
    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn index_of(&self, f: &[usize]) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        self.quantale.carrier()
    }

    pub fn quantale(&self) -> &Quantale {
        &self.quantale
    }

    pub fn pairing(&self, i: usize, j: usize) -> bool {
        self.pairing[i * self.len() + j]
    }

    pub fn negation(&self) -> Option<&FrobeniusWitness> {
        self.negation.as_ref()
    }

    /// Indices `f` with `π(f, g) = ⊥`.
    pub fn orthogonal(&self, g: usize) -> Vec<usize> {
        (0..self.len()).filter(|&f| !self.pairing(f, g)).collect()
    }

    /// `None` when some orthogonal set is not a principal down-set.
    fn compute_negation(&self) -> Option<FrobeniusWitness> {
        let order = self.lattice();
        let mut l = Vec::with_capacity(self.len());
        for g in 0..self.len() {
            let members = self.orthogonal(g);
            let top = order.join_of(members.iter().copied());
            if self.pairing(top, g) || order.down_set(top).count_ones(..) != members.len() {
                return None;
            }
            l.push(top);
        }
        Some(FrobeniusWitness {
            r: l.clone(),
            l,
            origin: Origin::Constructed,
        })
    }

    /// Verification of the negation on the tight quantale.
    pub fn verify(&self) -> Option<FrobeniusReport> {
        self.negation
            .as_ref()
            .map(|w| verify_frobenius(&self.quantale, &w.l, &w.r))
    }
}

/// The tight negation transported to the endo quantale when every
/// sup-map is tight, and checked there.
pub fn endo_frobenius_with(endo: &EndoQuantale, tight: &TightQuantale) -> Result<Option<FrobeniusWitness>> {
    if tight.len() != endo.hom.len() {
        return Ok(None);
    }
    let Some(neg) = tight.negation() else {
        return Err(Error::WitnessInvalid("tight negation is not well defined".into()));
    };
    let to_endo = |i: usize| {
        endo.hom
            .index_of(&tight.maps()[i])
            .expect("all sup-maps are tight")
    };
    let mut l = vec![0; tight.len()];
    for i in 0..tight.len() {
        l[to_endo(i)] = to_endo(neg.l[i]);
    }
    let w = FrobeniusWitness {
        r: l.clone(),
        l,
        origin: Origin::Constructed,
    };
    if !verify_frobenius(&endo.quantale, &w.l, &w.r).all_pass() {
        return Err(Error::WitnessInvalid("tight negation fails on the endo quantale".into()));
    }
    Ok(Some(w))
}

pub fn endo_frobenius(l: &Arc<Lattice>, caps: &Caps) -> Result<Option<FrobeniusWitness>> {
    let endo = endo_quantale(l, caps)?;
    let tight = tight_frobenius(l, caps)?;
    endo_frobenius_with(&endo, &tight)
}
