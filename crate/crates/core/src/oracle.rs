//! Brute-force enumeration of central and inner automorphisms for small
//! groups, used to cross-check the constructed automorphism.
//!
//! Central automorphisms are exactly the bijective maps `x -> x f(x)` with
//! `f: G -> Z(G)` a homomorphism. Such `f` factor through `G/G'`, so they are
//! enumerated by sending an invariant basis of `G/G'` to central elements of
//! admissible order. Every enumerated map is re-verified, so a bug in this
//! parametrization cannot pass silently.

use std::collections::BTreeSet;

use crate::abelian::{abelian_invariants, advance, gcd, Coordinates};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::map::GroupMap;
use crate::structure::{center, derived_subgroup};
use crate::verify::{is_automorphism, is_central_in, OracleSummary};

/// Largest group order the oracle will enumerate.
pub const ORACLE_CAP: usize = 512;

/// A homomorphism `G -> Z(G)` as an image table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HomToCenter {
    pub image: Vec<usize>,
}

fn check_cap(g: &FiniteGroup) -> Result<()> {
    if g.order() > ORACLE_CAP {
        return Err(Error::EnumerationCap {
            order: g.order(),
            cap: ORACLE_CAP,
        });
    }
    if !g.is_p_group() {
        return Err(Error::NotPGroup { order: g.order() });
    }
    Ok(())
}

/// All homomorphisms `G -> Z(G)`, sorted by image table.
pub fn enumerate_homs_to_center(g: &FiniteGroup) -> Result<Vec<HomToCenter>> {
    check_cap(g)?;
    let n = g.order();
    let z = center(g);
    let d = derived_subgroup(g);
    let (q, proj) = g.quotient(&d);
    let inv_q = abelian_invariants(&q.whole())?;
    let coords = Coordinates::new(&q, &inv_q);
    let inv_z = abelian_invariants(&z)?;

    let choices: Vec<Vec<usize>> = inv_q
        .factors
        .iter()
        .map(|&f| {
            z.elements()
                .iter()
                .copied()
                .filter(|&c| g.pow(c, f as i64) == 0)
                .collect()
        })
        .collect();
    let expected: usize = inv_q
        .factors
        .iter()
        .map(|&f| inv_z.factors.iter().map(|&e| gcd(f, e)).product::<usize>())
        .product();
    let found: usize = choices.iter().map(Vec::len).product();
    if found != expected {
        return Err(Error::Internal(format!(
            "expected {expected} homomorphisms, parametrized {found}"
        )));
    }

    let radices: Vec<usize> = choices.iter().map(Vec::len).collect();
    let mut tuple = vec![0usize; radices.len()];
    let mut homs = Vec::with_capacity(expected);
    loop {
        let images: Vec<usize> = tuple.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        let on_quotient: Vec<usize> = (0..q.order())
            .map(|y| {
                coords
                    .of(y)
                    .iter()
                    .zip(&images)
                    .fold(0, |acc, (&k, &img)| g.mul(acc, g.pow(img, k as i64)))
            })
            .collect();
        let image: Vec<usize> = (0..n).map(|x| on_quotient[proj[x]]).collect();
        let multiplicative =
            (0..n).all(|x| (0..n).all(|y| image[g.mul(x, y)] == g.mul(image[x], image[y])));
        if !multiplicative {
            return Err(Error::Internal(
                "enumerated map is not a homomorphism".into(),
            ));
        }
        homs.push(HomToCenter { image });
        if !advance(&mut tuple, &radices) {
            break;
        }
    }
    homs.sort();
    Ok(homs)
}

/// All central automorphisms, sorted by image table.
pub fn central_automorphisms(g: &FiniteGroup) -> Result<Vec<GroupMap<'_>>> {
    let z = center(g);
    let mut out = Vec::new();
    for f in enumerate_homs_to_center(g)? {
        let image: Vec<usize> = (0..g.order()).map(|x| g.mul(x, f.image[x])).collect();
        let map = GroupMap::on(g, image)?;
        if !map.is_bijective() {
            continue;
        }
        if !is_automorphism(&map) || !is_central_in(&map, &z) {
            return Err(Error::Internal(
                "enumerated central map failed re-verification".into(),
            ));
        }
        out.push(map);
    }
    out.sort_by(|a, b| a.image().cmp(b.image()));
    Ok(out)
}

/// Conjugation by every element, deduplicated and sorted by image table.
pub fn inner_automorphisms(g: &FiniteGroup) -> Vec<GroupMap<'_>> {
    let tables: BTreeSet<Vec<usize>> = (0..g.order())
        .map(|y| GroupMap::conjugation(g, y).into_image())
        .collect();
    tables
        .into_iter()
        .map(|t| GroupMap::on(g, t).expect("conjugation table"))
        .collect()
}

/// Order of an automorphism by repeated composition.
fn order_by_iteration(map: &GroupMap<'_>) -> usize {
    let mut power = map.clone();
    let mut k = 1;
    while !power.is_identity() {
        power = map.compose(&power);
        k += 1;
    }
    k
}

/// True iff `alpha` is central, not inner, and of order `p`, all decided by
/// enumeration.
pub fn oracle_cross_check(g: &FiniteGroup, alpha: &GroupMap<'_>) -> Result<bool> {
    Ok(oracle_summary(g, alpha)?.cross_check)
}

pub fn oracle_summary(g: &FiniteGroup, alpha: &GroupMap<'_>) -> Result<OracleSummary> {
    check_cap(g)?;
    let p = g.prime().expect("checked p-group") as usize;
    let homs = enumerate_homs_to_center(g)?;
    let central = central_automorphisms(g)?;
    let inner = inner_automorphisms(g);
    let in_central = central
        .binary_search_by(|m| m.image().cmp(alpha.image()))
        .is_ok();
    let in_inner = inner
        .binary_search_by(|m| m.image().cmp(alpha.image()))
        .is_ok();
    let cross_check =
        in_central && !in_inner && alpha.is_bijective() && order_by_iteration(alpha) == p;
    Ok(OracleSummary {
        cross_check,
        homs_to_center: homs.len(),
        central_automorphisms: central.len(),
        inner_automorphisms: inner.len(),
    })
}
