use serde::{Deserialize, Serialize};

use crate::par::*;

use super::Quantale;

/// Outcome of one exhaustive law check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub ok: bool,
    /// The first failing tuple, if any.
    pub counterexample: Option<Vec<usize>>,
}

impl Check {
    pub fn pass() -> Check {
        Check {
            ok: true,
            counterexample: None,
        }
    }

    pub fn fail(at: Vec<usize>) -> Check {
        Check {
            ok: false,
            counterexample: Some(at),
        }
    }

    pub(crate) fn from_search(found: Option<Vec<usize>>) -> Check {
        found.map_or_else(Check::pass, Check::fail)
    }
}

/// Lexicographically first triple over `0..n` failing `ok`.
pub(crate) fn find_triple(n: usize, ok: impl Fn(usize, usize, usize) -> bool + Sync) -> Option<Vec<usize>> {
    (0..n).into_par_iter().find_map_first(|x| {
        (0..n).find_map(|y| (0..n).find(|&z| !ok(x, y, z)).map(|z| vec![x, y, z]))
    })
}

pub(crate) fn find_pair(n: usize, ok: impl Fn(usize, usize) -> bool + Sync) -> Option<Vec<usize>> {
    (0..n)
        .into_par_iter()
        .find_map_first(|x| (0..n).find(|&y| !ok(x, y)).map(|y| vec![x, y]))
}

/// `x ∗ y ≤ z ⇔ x ≤ z/y ⇔ y ≤ x\z` for all triples.
pub fn check_residuation(q: &Quantale) -> Check {
    let l = q.carrier();
    Check::from_search(find_triple(q.size(), |x, y, z| {
        let a = l.leq(q.mult(x, y), z);
        a == l.leq(x, q.right_residual(z, y)) && a == l.leq(y, q.left_residual(x, z))
    }))
}

/// `z ↦ z/y` is a left action and `z ↦ x\z` a right action of `Q` on
/// `op(Q)`: `z/(x∗y) = (z/y)/x` and `(x∗y)\z = y\(x\z)`.
pub fn check_actions(q: &Quantale) -> Check {
    Check::from_search(find_triple(q.size(), |x, y, z| {
        q.right_residual(z, q.mult(x, y)) == q.right_residual(q.right_residual(z, y), x)
            && q.left_residual(q.mult(x, y), z) == q.left_residual(y, q.left_residual(x, z))
    }))
}

/// `(x\z)/y = x\(z/y)`.
pub fn check_equivariance(q: &Quantale) -> Check {
    Check::from_search(find_triple(q.size(), |x, y, z| {
        q.right_residual(q.left_residual(x, z), y) == q.left_residual(x, q.right_residual(z, y))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::family::*;
    use crate::quantale::tests::meet_quantale;

    #[test]
    fn meet_quantale_on_boolean_two() {
        let q = meet_quantale(boolean(2).unwrap());
        assert!(check_residuation(&q).ok);
        assert!(check_actions(&q).ok);
        assert!(check_equivariance(&q).ok);
    }

    #[test]
    fn failing_checks_carry_a_counterexample() {
        assert_eq!(Check::from_search(Some(vec![1, 2])).counterexample, Some(vec![1, 2]));
        assert!(!Check::fail(vec![0]).ok);
        assert_eq!(find_pair(3, |x, y| x + y < 4), Some(vec![2, 2]));
    }
}
