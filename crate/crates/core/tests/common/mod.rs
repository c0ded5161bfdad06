//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use froblab_core::lattice::family::{boolean, chain, product};
use froblab_core::lattice::enumerate_lattices;
use froblab_core::quantale::Quantale;
use froblab_core::rel::TernaryRel;
use froblab_core::{Caps, Lattice};
use rand::Rng;

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Smallest relabeled order matrix over all permutations.
pub fn order_form(n: usize, leq: impl Fn(usize, usize) -> bool) -> Vec<bool> {
    let matrix: Vec<bool> = (0..n * n).map(|i| leq(i / n, i % n)).collect();
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut m = vec![false; n * n];
            for x in 0..n {
                for y in 0..n {
                    m[p[x] * n + p[y]] = matrix[x * n + y];
                }
            }
            m
        })
        .min()
        .unwrap_or_default()
}

fn has_joins(n: usize, leq: &[bool]) -> bool {
    (0..n).all(|x| {
        (0..n).all(|y| {
            let ubs: Vec<usize> = (0..n).filter(|&z| leq[x * n + z] && leq[y * n + z]).collect();
            ubs.iter().any(|&u| ubs.iter().all(|&v| leq[u * n + v]))
        })
    })
}

/// Isomorphism classes of `n`-element lattices, built from every partial
/// order on the `n - 2` inner points with a bottom and top adjoined.
pub fn oracle_classes(n: usize) -> BTreeSet<Vec<bool>> {
    let mut out = BTreeSet::new();
    if n <= 2 {
        out.insert(order_form(n, |x, y| x <= y));
        return out;
    }
    let k = n - 2;
    let off: Vec<(usize, usize)> = (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
    for mask in 0u32..(1 << off.len()) {
        let mut inner = vec![false; k * k];
        for a in 0..k {
            inner[a * k + a] = true;
        }
        for (bit, &(a, b)) in off.iter().enumerate() {
            inner[a * k + b] = mask >> bit & 1 == 1;
        }
        let antisymmetric = (0..k).all(|a| (0..k).all(|b| a == b || !(inner[a * k + b] && inner[b * k + a])));
        let transitive = (0..k).all(|a| {
            (0..k).all(|b| (0..k).all(|c| !(inner[a * k + b] && inner[b * k + c]) || inner[a * k + c]))
        });
        if !antisymmetric || !transitive {
            continue;
        }
        // 0 is bottom, n - 1 is top, inner point a is a + 1
        let leq = |x: usize, y: usize| x == 0 || y == n - 1 || (x != n - 1 && y != 0 && inner[(x - 1) * k + (y - 1)]);
        let matrix: Vec<bool> = (0..n * n).map(|i| leq(i / n, i % n)).collect();
        if has_joins(n, &matrix) {
            out.insert(order_form(n, leq));
        }
    }
    out
}

pub fn lattice_form(l: &Lattice) -> Vec<bool> {
    order_form(l.size(), |x, y| l.leq(x, y))
}

pub fn lattices_up_to(n: usize) -> Vec<Arc<Lattice>> {
    enumerate_lattices(n, &Caps::default())
        .expect("enumeration")
        .into_iter()
        .map(Arc::new)
        .collect()
}

/// All `(l, r)` permutation pairs satisfying the relational law, by a
/// double loop over `n!²` candidates.
pub fn naive_rel_witnesses(r: &TernaryRel) -> Vec<Vec<usize>> {
    let n = r.size();
    let perms = permutations(n);
    let mut out = Vec::new();
    for l in &perms {
        for inv in &perms {
            let inverse = (0..n).all(|x| inv[l[x]] == x);
            let law = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| r.contains(x, y, l[z]) == r.contains(y, z, inv[x]))));
            if inverse && law {
                out.push(l.clone());
            }
        }
    }
    out
}

pub fn random_relation(rng: &mut impl Rng, n: usize, p: f64) -> TernaryRel {
    let keep: Vec<bool> = (0..n * n * n).map(|_| rng.random_bool(p)).collect();
    TernaryRel::from_fn(n, |x, y, z| keep[(x * n + y) * n + z])
}

pub fn random_semigroup(rng: &mut impl Rng, k: usize) -> Vec<Vec<usize>> {
    loop {
        let t: Vec<Vec<usize>> = (0..k).map(|_| (0..k).map(|_| rng.random_range(0..k)).collect()).collect();
        let assoc = (0..k).all(|x| (0..k).all(|y| (0..k).all(|z| t[t[x][y]][z] == t[x][t[y][z]])));
        if assoc {
            return t;
        }
    }
}

/// Subsets of a semigroup under `AB = {st : s ∈ A, t ∈ B}`.
pub fn powerset_quantale(table: &[Vec<usize>]) -> Quantale {
    let k = table.len();
    let carrier = Arc::new(boolean(k).unwrap());
    let n = 1usize << k;
    let mut mult = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            for s in (0..k).filter(|s| a >> s & 1 == 1) {
                for t in (0..k).filter(|t| b >> t & 1 == 1) {
                    mult[a * n + b] |= 1 << table[s][t];
                }
            }
        }
    }
    Quantale::new(carrier, mult, true).expect("powerset quantale")
}

/// A random table on join-irreducibles extended by joins, kept only if it
/// is a quantale.
pub fn bilinear_quantale(rng: &mut impl Rng, l: &Arc<Lattice>) -> Option<Quantale> {
    let j = l.join_irreducibles();
    let n = l.size();
    let pick = |rng: &mut _, a: usize, b: usize| -> usize {
        match Rng::random_range(rng, 0..5) {
            0 => l.bottom(),
            1 => l.meet(a, b),
            2 => a,
            3 => b,
            _ => Rng::random_range(rng, 0..n),
        }
    };
    let mut m = vec![0; j.len() * j.len()];
    for (i, &a) in j.iter().enumerate() {
        for (k, &b) in j.iter().enumerate() {
            m[i * j.len() + k] = pick(rng, a, b);
        }
    }
    let mut mult = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let mut acc = l.bottom();
            for (i, &a) in j.iter().enumerate() {
                for (k, &b) in j.iter().enumerate() {
                    if l.leq(a, x) && l.leq(b, y) {
                        acc = l.join(acc, m[i * j.len() + k]);
                    }
                }
            }
            mult[x * n + y] = acc;
        }
    }
    Quantale::new(l.clone(), mult, true).ok()
}

/// Carriers of at most eight elements.
pub fn quantale_carriers() -> Vec<Arc<Lattice>> {
    let mut out = lattices_up_to(6);
    for l in [
        chain(7).unwrap(),
        chain(8).unwrap(),
        boolean(3).unwrap(),
        product(&chain(2).unwrap(), &chain(4).unwrap()).unwrap(),
    ] {
        out.push(Arc::new(l));
    }
    out
}

/// A valid quantale on at most eight elements.
pub fn random_quantale(rng: &mut impl Rng, carriers: &[Arc<Lattice>]) -> Quantale {
    if rng.random_bool(0.4) {
        let k = rng.random_range(1..=3);
        return powerset_quantale(&random_semigroup(rng, k));
    }
    loop {
        let l = &carriers[rng.random_range(0..carriers.len())];
        if let Some(q) = bilinear_quantale(rng, l) {
            return q;
        }
    }
}
