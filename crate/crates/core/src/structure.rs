//! Structural subgroups of p-groups: center, derived subgroup, `G^p`,
//! Frattini subgroup, `Omega_1`, and index-p subgroups.
//!
//! Commutators follow `[x, y] = x^-1 y^-1 x y` and `[x, y, z] = [[x, y], z]`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelian::{abelian_invariants, advance, Coordinates};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// Groups up to this order get the commutator identities checked on all triples.
pub const LEMMA_EXHAUSTIVE_LIMIT: usize = 128;
/// Random triples sampled above [`LEMMA_EXHAUSTIVE_LIMIT`].
pub const LEMMA_SAMPLES: usize = 100_000;
const LEMMA_SEED: u64 = 0x5eed_1e44;

fn require_prime(g: &FiniteGroup) -> Result<u64> {
    g.prime().ok_or(Error::NotPGroup { order: g.order() })
}

pub fn is_abelian(s: &Subgroup<'_>) -> bool {
    let g = s.group();
    let gens = s.generators();
    gens.iter()
        .enumerate()
        .all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.commutes(a, b)))
}

/// Whether `s` is normal in its parent: every generator conjugate of every
/// generator of `s` stays in `s`.
pub fn is_normal(s: &Subgroup<'_>) -> bool {
    let g = s.group();
    g.generators().iter().all(|&t| {
        let ti = g.inv(t);
        s.generators()
            .iter()
            .all(|&u| s.contains(g.mul(g.mul(ti, u), t)))
    })
}

/// Elements of `s` commuting with every element of `of`.
pub fn centralizer<'g>(s: &Subgroup<'g>, of: &Subgroup<'_>) -> Subgroup<'g> {
    let g = s.group();
    let elems = s
        .elements()
        .iter()
        .copied()
        .filter(|&x| of.generators().iter().all(|&y| g.commutes(x, y)))
        .collect();
    Subgroup::from_closed_set(g, elems)
}

/// `Z(G)`.
pub fn center(g: &FiniteGroup) -> Subgroup<'_> {
    let whole = g.whole();
    centralizer(&whole, &whole)
}

/// `Z(S)` for a subgroup `S`.
pub fn subgroup_center<'g>(s: &Subgroup<'g>) -> Subgroup<'g> {
    centralizer(s, s)
}

/// `G'`, the closure of all pairwise commutators.
pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup<'_> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut comms = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let c = g.commutator(x, y);
            if !std::mem::replace(&mut seen[c], true) {
                comms.push(c);
            }
        }
    }
    comms.sort_unstable();
    g.span(&comms).reduced()
}

/// `G^p`, generated by all p-th powers.
pub fn agemo(g: &FiniteGroup) -> Result<Subgroup<'_>> {
    let p = require_prime(g)?;
    let mut powers: Vec<usize> = (0..g.order()).map(|x| g.pow(x, p as i64)).collect();
    powers.sort_unstable();
    powers.dedup();
    Ok(g.span(&powers).reduced())
}

/// `Phi(G)`: `G^2` for `p = 2`, otherwise `G' G^p`.
pub fn frattini(g: &FiniteGroup) -> Result<Subgroup<'_>> {
    let p = require_prime(g)?;
    let power = agemo(g)?;
    if p == 2 {
        Ok(power)
    } else {
        Ok(derived_subgroup(g).join(&power).reduced())
    }
}

/// `Omega_1(A)`: generated by the elements of order p in `A`.
pub fn omega1<'g>(a: &Subgroup<'g>) -> Result<Subgroup<'g>> {
    let g = a.group();
    let p = require_prime(g)? as usize;
    let seed: Vec<usize> = a
        .elements()
        .iter()
        .copied()
        .filter(|&x| g.element_order(x) == p)
        .collect();
    Ok(g.span(&seed).reduced())
}

/// Kernels of all surjections from an abelian subgroup onto `C_p`, as sorted
/// element lists. Each kernel arises from a non-zero coefficient vector over
/// the invariant basis, normalized so its first non-zero entry is 1.
fn index_p_kernels(a: &Subgroup<'_>, p: usize) -> Result<Vec<Vec<usize>>> {
    let g = a.group();
    let inv = abelian_invariants(a)?;
    if inv.factors.iter().any(|d| d % p != 0) {
        return Err(Error::Internal(
            "invariant factor not divisible by p".into(),
        ));
    }
    let coords = Coordinates::new(g, &inv);
    let r = inv.rank();
    let radices = vec![p; r];
    let mut coeffs = vec![0usize; r];
    let mut kernels = Vec::new();
    while advance(&mut coeffs, &radices) {
        if coeffs.iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        let kernel: Vec<usize> = a
            .elements()
            .iter()
            .copied()
            .filter(|&x| {
                coords
                    .of(x)
                    .iter()
                    .zip(&coeffs)
                    .map(|(&u, &c)| u * c)
                    .sum::<usize>()
                    % p
                    == 0
            })
            .collect();
        kernels.push(kernel);
    }
    kernels.sort();
    Ok(kernels)
}

/// All index-p subgroups of an abelian p-subgroup, sorted by element set.
/// There are `(p^r - 1)/(p - 1)` of them where `r` is the rank of `A/A^p`.
pub fn maximal_subgroups<'g>(a: &Subgroup<'g>) -> Result<Vec<Subgroup<'g>>> {
    if !is_abelian(a) {
        return Err(Error::NotAbelian("subgroup"));
    }
    let p = require_prime(a.group())? as usize;
    Ok(index_p_kernels(a, p)?
        .into_iter()
        .map(|k| Subgroup::from_closed_set(a.group(), k))
        .collect())
}

/// All normal subgroups of index p, obtained as kernels of surjections
/// `G -> G/G' -> C_p`. In a p-group these are exactly the maximal subgroups.
pub fn index_p_normal_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup<'_>>> {
    let p = require_prime(g)? as usize;
    let d = derived_subgroup(g);
    let (q, proj) = g.quotient(&d);
    let kernels = index_p_kernels(&q.whole(), p)?;
    let mut subs: Vec<Subgroup<'_>> = kernels
        .into_iter()
        .map(|k| {
            let mut inside = vec![false; q.order()];
            for c in k {
                inside[c] = true;
            }
            let elems = (0..g.order()).filter(|&x| inside[proj[x]]).collect();
            Subgroup::from_closed_set(g, elems)
        })
        .collect();
    subs.sort_by(|a, b| a.elements().cmp(b.elements()));
    Ok(subs)
}

/// `Phi(G)` as the intersection of all maximal subgroups.
pub fn frattini_via_maximal(g: &FiniteGroup) -> Result<Subgroup<'_>> {
    let maximals = index_p_normal_subgroups(g)?;
    let mut acc = g.whole();
    for m in &maximals {
        acc = acc.intersection(m);
    }
    Ok(acc)
}

/// `d(G)`, the minimal number of generators: the rank of `G/Phi(G)`.
pub fn generator_rank(g: &FiniteGroup) -> Result<usize> {
    let p = require_prime(g)? as usize;
    let mut quotient = g.order() / frattini(g)?.order();
    let mut rank = 0;
    while quotient > 1 {
        quotient /= p;
        rank += 1;
    }
    Ok(rank)
}

/// `[x, y] = x^-1 y^-1 x y`.
pub fn commutator(g: &FiniteGroup, x: usize, y: usize) -> Result<usize> {
    g.check_index(x)?;
    g.check_index(y)?;
    Ok(g.commutator(x, y))
}

/// Checks `[x, yz] = [x, z][x, y][x, y, z]` and `[xy, z] = [x, z][x, z, y][y, z]`
/// on one triple.
pub fn lemma_identities_hold(g: &FiniteGroup, x: usize, y: usize, z: usize) -> bool {
    let c = |a, b| g.commutator(a, b);
    let m = |a, b| g.mul(a, b);
    let xy = c(x, y);
    let xz = c(x, z);
    let first = c(x, m(y, z)) == m(m(xz, xy), c(xy, z));
    let second = c(m(x, y), z) == m(m(xz, c(xz, y)), c(y, z));
    first && second
}

/// Both commutator identities on every triple for groups of order at most
/// [`LEMMA_EXHAUSTIVE_LIMIT`], otherwise on [`LEMMA_SAMPLES`] seeded random triples.
pub fn verify_lemma_identities(g: &FiniteGroup) -> bool {
    let n = g.order();
    if n <= LEMMA_EXHAUSTIVE_LIMIT {
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| lemma_identities_hold(g, x, y, z))))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(LEMMA_SEED);
        (0..LEMMA_SAMPLES).all(|_| {
            let (x, y, z) = (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            );
            lemma_identities_hold(g, x, y, z)
        })
    }
}
