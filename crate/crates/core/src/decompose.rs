//! Internal direct products `G = H x K` with `H` abelian and non-trivial and
//! `K` non-abelian.
//!
//! The search for such a decomposition only needs two restricted families:
//!
//! * `H` commutes with itself and with `K`, hence with `HK = G`, so `H` lies
//!   in `Z(G)`. Every abelian direct factor splits into cyclic ones and each
//!   cyclic summand of `H` is again a direct factor (with a non-abelian
//!   complement), so the smallest factors are cyclic subgroups of `Z(G)`.
//! * `G/K ≅ H` is abelian, so `K` contains `G'`. With `Q = G/G'`, `H` must
//!   meet `G'` trivially and `K/G'` must be a complement of the image of `H`
//!   in `Q`. Complements of a cyclic `<h>` in an abelian group are exactly
//!   the kernels of retractions `Q -> <h>`, which are enumerated directly
//!   through the invariant basis of `Q`.

use std::collections::BTreeSet;

use crate::abelian::{abelian_invariants, advance, gcd, Coordinates};
use crate::error::{DecompositionError, Error, Result};
use crate::group::{small_generating_set, FiniteGroup, Subgroup};
use crate::structure::{center, derived_subgroup, is_abelian, is_normal};

/// A witnessed internal direct product `G = H x K`.
#[derive(Debug, Clone)]
pub struct DirectDecomposition<'g> {
    h: Subgroup<'g>,
    k: Subgroup<'g>,
    factorization: Vec<(usize, usize)>,
}

impl<'g> DirectDecomposition<'g> {
    pub fn group(&self) -> &'g FiniteGroup {
        self.h.group()
    }

    pub fn h(&self) -> &Subgroup<'g> {
        &self.h
    }

    pub fn k(&self) -> &Subgroup<'g> {
        &self.k
    }

    /// `(x_H, x_K)` with `x = x_H x_K`.
    pub fn factor(&self, x: usize) -> (usize, usize) {
        self.factorization[x]
    }

    pub fn factorization(&self) -> &[(usize, usize)] {
        &self.factorization
    }
}

/// Checks that the subgroups generated by `h_gens` and `k_gens` form a direct
/// product `G = H x K` with `H` non-trivial abelian and `K` non-abelian, and
/// tabulates the factorization of every element.
pub fn verify_decomposition<'g>(
    g: &'g FiniteGroup,
    h_gens: &[usize],
    k_gens: &[usize],
) -> Result<DirectDecomposition<'g>> {
    let h = g.closure(h_gens)?;
    let k = g.closure(k_gens)?;
    if h.is_trivial() {
        return Err(DecompositionError::TrivialH.into());
    }
    if !is_abelian(&h) {
        return Err(DecompositionError::NonAbelianH.into());
    }
    if is_abelian(&k) {
        return Err(DecompositionError::AbelianK.into());
    }
    if !is_normal(&h) {
        return Err(DecompositionError::NotNormal("H").into());
    }
    if !is_normal(&k) {
        return Err(DecompositionError::NotNormal("K").into());
    }
    if h.elements().iter().any(|&x| x != 0 && k.contains(x)) {
        return Err(DecompositionError::NontrivialIntersection.into());
    }
    let product = h.order() * k.order();
    if product != g.order() {
        return Err(DecompositionError::ProductNotWhole {
            product,
            order: g.order(),
        }
        .into());
    }
    if !h
        .generators()
        .iter()
        .all(|&a| k.generators().iter().all(|&b| g.commutes(a, b)))
    {
        return Err(DecompositionError::NotCommuting.into());
    }
    let mut factorization = vec![(usize::MAX, usize::MAX); g.order()];
    for &a in h.elements() {
        for &b in k.elements() {
            factorization[g.mul(a, b)] = (a, b);
        }
    }
    if factorization.iter().any(|&(a, _)| a == usize::MAX) {
        return Err(Error::Internal("factorization is not total".into()));
    }
    Ok(DirectDecomposition {
        h,
        k,
        factorization,
    })
}

/// Finds the canonical decomposition `G = H x K` with `H` a non-trivial
/// abelian direct factor, or `None` when `G` is purely non-abelian.
///
/// Canonical means smallest `|H|`, then the lexicographically smallest
/// element set of `H`, then of `K`.
pub fn find_abelian_direct_factor(g: &FiniteGroup) -> Result<Option<DirectDecomposition<'_>>> {
    if g.is_abelian() {
        return Err(Error::AbelianGroup);
    }
    if !g.is_p_group() {
        return Err(Error::NotPGroup { order: g.order() });
    }
    let z = center(g);
    let d = derived_subgroup(g);
    let (q, proj) = g.quotient(&d);
    let inv = abelian_invariants(&q.whole())?;
    let coords = Coordinates::new(&q, &inv);

    let mut seen = BTreeSet::new();
    let mut candidates: Vec<Subgroup<'_>> = Vec::new();
    for &x in &z.elements()[1..] {
        let c = g.span(&[x]);
        if seen.insert(c.elements().to_vec()) {
            candidates.push(c);
        }
    }
    candidates.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));

    for h in &candidates {
        if h.elements().iter().any(|&x| x != 0 && d.contains(x)) {
            continue;
        }
        if let Some(k) = smallest_complement(g, &q, &proj, &inv.factors, &coords, h) {
            let k_gens = small_generating_set(g, &k);
            return verify_decomposition(g, h.generators(), &k_gens).map(Some);
        }
    }
    Ok(None)
}

/// The lexicographically smallest `K ⊇ G'` with `K/G'` a complement of the
/// image of the cyclic subgroup `h` in `Q = G/G'`.
fn smallest_complement(
    g: &FiniteGroup,
    q: &FiniteGroup,
    proj: &[usize],
    factors: &[usize],
    coords: &Coordinates,
    h: &Subgroup<'_>,
) -> Option<Vec<usize>> {
    let m = h.order();
    let hbar = proj[h.generators()[0]];
    let hc = coords.of(hbar);
    // a retraction sends basis element i to hbar^(t_i), with d_i t_i = 0 mod m
    let steps: Vec<usize> = factors.iter().map(|&d| m / gcd(m, d)).collect();
    let radices: Vec<usize> = factors.iter().map(|&d| gcd(m, d)).collect();
    let mut tuple = vec![0usize; factors.len()];
    let mut best: Option<Vec<usize>> = None;
    loop {
        let t: Vec<usize> = tuple.iter().zip(&steps).map(|(&j, &s)| j * s).collect();
        let on_h: usize = hc.iter().zip(&t).map(|(&c, &ti)| c * ti).sum();
        if on_h % m == 1 % m {
            let in_kernel: Vec<bool> = (0..q.order())
                .map(|y| {
                    coords
                        .of(y)
                        .iter()
                        .zip(&t)
                        .map(|(&c, &ti)| c * ti)
                        .sum::<usize>()
                        % m
                        == 0
                })
                .collect();
            let k: Vec<usize> = (0..g.order()).filter(|&x| in_kernel[proj[x]]).collect();
            if best.as_ref().is_none_or(|b| k < *b) {
                best = Some(k);
            }
        }
        if !advance(&mut tuple, &radices) {
            break;
        }
    }
    best
}

/// Folds `G = H_1 x H_2 x ... x H_n` into `H_1 x K` with `K = H_2 ... H_n`.
///
/// `H_1` must be abelian and non-trivial; the remaining factors must be
/// non-abelian, normal, and each must meet the product of the earlier ones
/// trivially. Factor indices in errors are 1-based.
pub fn fold_multifactor<'g>(
    g: &'g FiniteGroup,
    factor_gens: &[Vec<usize>],
) -> Result<DirectDecomposition<'g>> {
    if factor_gens.len() < 2 {
        return Err(DecompositionError::TooFewFactors(factor_gens.len()).into());
    }
    let role = |index, reason| -> Error { DecompositionError::FactorRole { index, reason }.into() };
    let first = g.closure(&factor_gens[0])?;
    if first.is_trivial() {
        return Err(role(1, "the abelian factor must be non-trivial"));
    }
    if !is_abelian(&first) {
        return Err(role(1, "the first factor must be abelian"));
    }
    let mut k: Option<Subgroup<'g>> = None;
    for (i, gens) in factor_gens.iter().enumerate().skip(1) {
        let f = g.closure(gens)?;
        if is_abelian(&f) {
            return Err(role(i + 1, "must be non-abelian"));
        }
        if !is_normal(&f) {
            return Err(role(i + 1, "must be normal"));
        }
        k = Some(match k {
            None => f,
            Some(prev) => {
                if f.elements().iter().any(|&x| x != 0 && prev.contains(x)) {
                    return Err(role(i + 1, "meets the earlier factors non-trivially"));
                }
                let joined = prev.join(&f);
                if joined.order() != prev.order() * f.order() {
                    return Err(Error::Internal(
                        "join of trivially meeting normal subgroups has wrong order".into(),
                    ));
                }
                joined
            }
        });
    }
    let k_gens: Vec<usize> = factor_gens[1..].iter().flatten().copied().collect();
    verify_decomposition(g, &factor_gens[0], &k_gens)
}

/// True iff `G` has no non-trivial abelian direct factor.
pub fn is_purely_nonabelian(g: &FiniteGroup) -> Result<bool> {
    Ok(find_abelian_direct_factor(g)?.is_none())
}
