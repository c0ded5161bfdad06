//! Isomorphism-invariant codes for small lattices.
//!
//! Elements are first partitioned by iterated degree/height invariants. The
//! code is then the lexicographically least order matrix over all labelings
//! that respect the partition, found by backtracking with prefix pruning.

use super::Lattice;

fn refine(l: &Lattice) -> Vec<usize> {
    let n = l.size();
    let lower: Vec<Vec<usize>> = l.elements().map(|x| l.lower_covers(x)).collect();
    let upper: Vec<Vec<usize>> = l.elements().map(|x| l.upper_covers(x)).collect();
    let ranks = l.ranks();
    let initial: Vec<Vec<usize>> = l
        .elements()
        .map(|x| {
            vec![
                ranks[x],
                l.down_set(x).count_ones(..),
                l.up_set(x).count_ones(..),
                lower[x].len(),
                upper[x].len(),
            ]
        })
        .collect();
    let mut colors = rank_signatures(&initial);
    loop {
        let sigs: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                let mut lo: Vec<usize> = lower[x].iter().map(|&y| colors[y]).collect();
                let mut hi: Vec<usize> = upper[x].iter().map(|&y| colors[y]).collect();
                lo.sort_unstable();
                hi.sort_unstable();
                let mut sig = vec![colors[x], usize::MAX];
                sig.extend(lo);
                sig.push(usize::MAX);
                sig.extend(hi);
                sig
            })
            .collect();
        let next = rank_signatures(&sigs);
        let before = colors.iter().max().copied().unwrap_or(0);
        let after = next.iter().max().copied().unwrap_or(0);
        colors = next;
        if after == before {
            return colors;
        }
    }
}

fn rank_signatures(sigs: &[Vec<usize>]) -> Vec<usize> {
    let mut distinct: Vec<&Vec<usize>> = sigs.iter().collect();
    distinct.sort();
    distinct.dedup();
    sigs.iter()
        .map(|s| distinct.binary_search(&s).expect("signature present"))
        .collect()
}

struct Search<'a> {
    lattice: &'a Lattice,
    cell_of_position: Vec<usize>,
    members: Vec<Vec<usize>>,
    used: Vec<bool>,
    perm: Vec<usize>,
    current: Vec<bool>,
    best: Option<Vec<bool>>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) {
        let n = self.lattice.size();
        if pos == n {
            if self.best.as_ref().is_none_or(|b| self.current < *b) {
                self.best = Some(self.current.clone());
            }
            return;
        }
        let cell = self.cell_of_position[pos];
        for k in 0..self.members[cell].len() {
            let e = self.members[cell][k];
            if self.used[e] {
                continue;
            }
            let start = self.current.len();
            for i in 0..pos {
                let other = self.perm[i];
                self.current.push(self.lattice.leq(other, e));
                self.current.push(self.lattice.leq(e, other));
            }
            let worse = self
                .best
                .as_ref()
                .is_some_and(|b| self.current[..] > b[..self.current.len()]);
            if !worse {
                self.used[e] = true;
                self.perm.push(e);
                self.run(pos + 1);
                self.perm.pop();
                self.used[e] = false;
            }
            self.current.truncate(start);
        }
    }
}

/// Byte code with `canonical_code(a) == canonical_code(b)` exactly when `a`
/// and `b` are isomorphic.
pub fn canonical_code(l: &Lattice) -> Vec<u8> {
    let n = l.size();
    let colors = refine(l);
    let cells = colors.iter().max().map_or(0, |m| m + 1);
    let mut members = vec![Vec::new(); cells];
    for (x, &c) in colors.iter().enumerate() {
        members[c].push(x);
    }
    let mut cell_of_position = Vec::with_capacity(n);
    for (c, m) in members.iter().enumerate() {
        cell_of_position.extend(std::iter::repeat_n(c, m.len()));
    }
    let mut search = Search {
        lattice: l,
        cell_of_position,
        members,
        used: vec![false; n],
        perm: Vec::with_capacity(n),
        current: Vec::with_capacity(n * n),
        best: None,
    };
    search.run(0);
    let bits = search.best.unwrap_or_default();
    let mut code = (n as u32).to_le_bytes().to_vec();
    for chunk in bits.chunks(8) {
        code.push(
            chunk
                .iter()
                .enumerate()
                .fold(0u8, |b, (i, &bit)| b | ((bit as u8) << i)),
        );
    }
    code
}

pub fn is_isomorphic(a: &Lattice, b: &Lattice) -> bool {
    a.size() == b.size() && canonical_code(a) == canonical_code(b)
}
