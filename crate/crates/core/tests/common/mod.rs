//! Brute-force reference computations that share no code path with the
//! library beyond table lookups.

#![allow(dead_code)]

use std::collections::BTreeSet;

use pgroup::catalogue::catalogue;
use pgroup::{build_group, FiniteGroup};

pub fn catalogue_groups(max_order: usize) -> Vec<(&'static str, FiniteGroup)> {
    catalogue()
        .into_iter()
        .map(|e| (e.name, build_group(&e.spec).unwrap()))
        .filter(|(_, g)| g.order() <= max_order)
        .collect()
}

/// Closure by multiplying all pairs until nothing new appears.
pub fn naive_closure(g: &FiniteGroup, seed: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = seed.iter().copied().collect();
    set.insert(0);
    loop {
        let elems: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &a in &elems {
            for &b in &elems {
                set.insert(g.mul(a, b));
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

/// Every subgroup, as sorted element sets.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier = vec![vec![0usize]];
    found.insert(vec![0]);
    while let Some(s) = frontier.pop() {
        for x in 0..g.order() {
            if s.binary_search(&x).is_ok() {
                continue;
            }
            let mut seed = s.clone();
            seed.push(x);
            let t: Vec<usize> = naive_closure(g, &seed).into_iter().collect();
            if found.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    found.into_iter().collect()
}

pub fn brute_center(g: &FiniteGroup) -> Vec<usize> {
    (0..g.order())
        .filter(|&x| (0..g.order()).all(|y| g.commutes(x, y)))
        .collect()
}

pub fn brute_is_normal(g: &FiniteGroup, s: &[usize]) -> bool {
    let set: BTreeSet<usize> = s.iter().copied().collect();
    (0..g.order()).all(|y| {
        s.iter()
            .all(|&x| set.contains(&g.mul(g.mul(g.inv(y), x), y)))
    })
}

pub fn brute_commute(g: &FiniteGroup, a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|&x| b.iter().all(|&y| g.commutes(x, y)))
}

pub fn brute_is_abelian(g: &FiniteGroup, s: &[usize]) -> bool {
    brute_commute(g, s, s)
}

/// Maximal subgroups from the full lattice.
pub fn brute_maximal_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let subs = all_subgroups(g);
    let proper: Vec<&Vec<usize>> = subs.iter().filter(|s| s.len() < g.order()).collect();
    proper
        .iter()
        .filter(|s| {
            !proper
                .iter()
                .any(|t| t.len() > s.len() && s.iter().all(|x| t.binary_search(x).is_ok()))
        })
        .map(|s| (*s).clone())
        .collect()
}

/// Number of homomorphisms `src -> tgt` with image in `allowed`, by trying
/// every assignment of generator images.
pub fn brute_hom_count(src: &FiniteGroup, tgt: &FiniteGroup, allowed: &[usize]) -> usize {
    let k = src.generators().len();
    let mut tuple = vec![0usize; k];
    let mut count = 0;
    loop {
        let images: Vec<usize> = tuple.iter().map(|&i| allowed[i]).collect();
        if src.extend_homomorphism(tgt, &images).is_some() {
            count += 1;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return count;
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < allowed.len() {
                break;
            }
            tuple[i] = 0;
        }
    }
}
