//! Finite quantales and their residuals.
//!
//! Residuals follow `x ∗ y ≤ z ⇔ x ≤ z/y ⇔ y ≤ x\z`. Both residual tables
//! are computed once at construction, by joining only the join-irreducibles
//! that satisfy the inequality.

mod endo;
mod frobenius;
mod laws;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::par::*;

pub use endo::{endo_quantale, EndoQuantale};
pub use frobenius::{
    anti_automorphisms, dual_multiplication, dualizing_elements, frobenius_from_dualizing,
    order_isomorphisms, search_frobenius, verify_frobenius, Dualizing, FrobeniusReport,
    FrobeniusWitness, Origin,
};
pub use laws::{check_actions, check_equivariance, check_residuation, Check};

#[derive(Clone, Debug)]
pub struct Quantale {
    carrier: Arc<Lattice>,
    mult: Vec<usize>,
    unit: Option<usize>,
    /// `x\z` at `x * n + z`
    under: Vec<usize>,
    /// `z/y` at `z * n + y`
    over: Vec<usize>,
}

impl PartialEq for Quantale {
    fn eq(&self, other: &Self) -> bool {
        self.mult == other.mult && self.unit == other.unit && *self.carrier == *other.carrier
    }
}

impl Eq for Quantale {}

/// Validates a multiplication table given as rows.
pub fn make_quantale(carrier: Arc<Lattice>, mult: &[Vec<usize>], detect_unit: bool) -> Result<Quantale> {
    let n = carrier.size();
    if mult.len() != n || mult.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidParameter(format!(
            "multiplication table must be {n}×{n}"
        )));
    }
    let flat: Vec<usize> = mult.iter().flatten().copied().collect();
    Quantale::new(carrier, flat, detect_unit)
}

impl Quantale {
    /// `mult` is row-major: `x ∗ y` at `x * n + y`.
    pub fn new(carrier: Arc<Lattice>, mult: Vec<usize>, detect_unit: bool) -> Result<Quantale> {
        let n = carrier.size();
        if mult.len() != n * n || mult.iter().any(|&v| v >= n) {
            return Err(Error::InvalidParameter(format!(
                "multiplication table must be {n}×{n} with entries below {n}"
            )));
        }
        check_distributive(&carrier, &mult)?;
        check_associative(n, &mult)?;
        let unit = if detect_unit {
            (0..n).find(|&e| (0..n).all(|x| mult[e * n + x] == x && mult[x * n + e] == x))
        } else {
            None
        };
        Ok(Quantale::new_unchecked(carrier, mult, unit))
    }

    pub(crate) fn new_unchecked(carrier: Arc<Lattice>, mult: Vec<usize>, unit: Option<usize>) -> Quantale {
        let n = carrier.size();
        let irreducibles = carrier.join_irreducibles();
        let l = &*carrier;
        let under: Vec<usize> = (0..n)
            .into_par_iter()
            .flat_map_iter(|x| {
                let irr = &irreducibles;
                let mult = &mult;
                (0..n).map(move |z| {
                    l.join_of(irr.iter().copied().filter(|&j| l.leq(mult[x * n + j], z)))
                })
            })
            .collect();
        let over: Vec<usize> = (0..n)
            .into_par_iter()
            .flat_map_iter(|z| {
                let irr = &irreducibles;
                let mult = &mult;
                (0..n).map(move |y| {
                    l.join_of(irr.iter().copied().filter(|&j| l.leq(mult[j * n + y], z)))
                })
            })
            .collect();
        Quantale {
            carrier,
            mult,
            unit,
            under,
            over,
        }
    }

    pub fn carrier(&self) -> &Arc<Lattice> {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    #[inline]
    pub fn mult(&self, x: usize, y: usize) -> usize {
        self.mult[x * self.size() + y]
    }

    pub fn mult_table(&self) -> &[usize] {
        &self.mult
    }

    pub fn mult_rows(&self) -> Vec<Vec<usize>> {
        self.mult.chunks(self.size().max(1)).map(<[usize]>::to_vec).collect()
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    /// `x\z`, the largest `y` with `x ∗ y ≤ z`.
    #[inline]
    pub fn left_residual(&self, x: usize, z: usize) -> usize {
        self.under[x * self.size() + z]
    }

    /// `z/y`, the largest `x` with `x ∗ y ≤ z`.
    #[inline]
    pub fn right_residual(&self, z: usize, y: usize) -> usize {
        self.over[z * self.size() + y]
    }

    /// `(x\z, z/x)`.
    pub fn residuals(&self, x: usize, z: usize) -> (usize, usize) {
        (self.left_residual(x, z), self.right_residual(z, x))
    }

    /// Left action of `Q` on `op(Q)`: `(y, z) ↦ z/y`.
    pub fn lact(&self, y: usize, z: usize) -> usize {
        self.right_residual(z, y)
    }

    /// Right action of `Q` on `op(Q)`: `(z, x) ↦ x\z`.
    pub fn ract(&self, z: usize, x: usize) -> usize {
        self.left_residual(x, z)
    }
}

fn check_distributive(l: &Lattice, mult: &[usize]) -> Result<()> {
    let n = l.size();
    let at = |x: usize, y: usize| mult[x * n + y];
    let bottom = l.bottom();
    for x in 0..n {
        if at(x, bottom) != bottom || at(bottom, x) != bottom {
            return Err(Error::NotSupDistributive(format!(
                "{x} does not annihilate bottom"
            )));
        }
    }
    let bad = (0..n).into_par_iter().find_map_first(|x| {
        for y in 0..n {
            for z in y + 1..n {
                let yz = l.join(y, z);
                if at(x, yz) != l.join(at(x, y), at(x, z)) {
                    return Some(format!("{x} ∗ ({y} ∨ {z})"));
                }
                if at(yz, x) != l.join(at(y, x), at(z, x)) {
                    return Some(format!("({y} ∨ {z}) ∗ {x}"));
                }
            }
        }
        None
    });
    match bad {
        Some(msg) => Err(Error::NotSupDistributive(msg)),
        None => Ok(()),
    }
}

fn check_associative(n: usize, mult: &[usize]) -> Result<()> {
    let at = |x: usize, y: usize| mult[x * n + y];
    let bad = (0..n).into_par_iter().find_map_first(|x| {
        for y in 0..n {
            let xy = at(x, y);
            for z in 0..n {
                if at(xy, z) != at(x, at(y, z)) {
                    return Some([x, y, z]);
                }
            }
        }
        None
    });
    match bad {
        Some(t) => Err(Error::NotAssociative(t)),
        None => Ok(()),
    }
}
