//! Invariant factor decompositions of abelian subgroups.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::structure::is_abelian;

/// Invariant factors `d_1 | d_2 | ... | d_k` (all `> 1`) together with basis
/// elements of exactly those orders whose span is the whole subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub factors: Vec<usize>,
    pub basis: Vec<usize>,
}

impl AbelianInvariants {
    /// Number of cyclic factors, i.e. the rank of `A / A^p` for a p-group.
    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

/// Computes the invariant factor decomposition of an abelian subgroup.
///
/// Repeatedly adds an element whose order modulo the span `S` built so far is
/// as large as possible and equals its order in the group. Such an element
/// always exists and `S + <x>` stays a direct summand, so the collected
/// orders are the invariant factors.
pub fn abelian_invariants(a: &Subgroup<'_>) -> Result<AbelianInvariants> {
    if !is_abelian(a) {
        return Err(Error::NotAbelian("subgroup"));
    }
    let g = a.group();
    let mut basis: Vec<usize> = Vec::new();
    let mut span = g.span(&[]);
    while span.order() < a.order() {
        let mut best: Option<(usize, usize)> = None;
        for &x in a.elements() {
            let mut y = x;
            let mut k = 1;
            while !span.contains(y) {
                y = g.mul(y, x);
                k += 1;
            }
            let admissible = k > 1 && g.element_order(x) == k;
            match best {
                Some((bk, _)) if bk >= k => {}
                _ if admissible => best = Some((k, x)),
                _ => {}
            }
        }
        let (_, x) =
            best.ok_or_else(|| Error::Internal("no liftable element of maximal order".into()))?;
        basis.push(x);
        span = g.span(&basis);
    }
    basis.reverse();
    let factors = basis.iter().map(|&b| g.element_order(b)).collect();
    Ok(AbelianInvariants { factors, basis })
}

/// Coordinates of every element of an abelian subgroup with respect to an
/// invariant basis: `x = prod basis[i]^coords[x][i]`.
#[derive(Debug, Clone)]
pub struct Coordinates {
    coords: HashMap<usize, Vec<usize>>,
}

impl Coordinates {
    pub fn new(g: &FiniteGroup, inv: &AbelianInvariants) -> Self {
        let mut coords = HashMap::new();
        let mut tuple = vec![0usize; inv.factors.len()];
        loop {
            let x = tuple
                .iter()
                .zip(&inv.basis)
                .fold(g.identity(), |acc, (&c, &b)| g.mul(acc, g.pow(b, c as i64)));
            coords.insert(x, tuple.clone());
            if !advance(&mut tuple, &inv.factors) {
                break;
            }
        }
        Coordinates { coords }
    }

    pub fn of(&self, x: usize) -> &[usize] {
        &self.coords[&x]
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

/// Mixed-radix increment; returns false after the last tuple.
pub(crate) fn advance(tuple: &mut [usize], radices: &[usize]) -> bool {
    for i in (0..tuple.len()).rev() {
        tuple[i] += 1;
        if tuple[i] < radices[i] {
            return true;
        }
        tuple[i] = 0;
    }
    false
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
