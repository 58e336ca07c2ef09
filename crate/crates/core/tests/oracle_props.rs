mod common;

use common::{brute_center, brute_hom_count, catalogue_groups};
use pgroup::construct::{build_alpha, choose_alpha_data};
use pgroup::decompose::find_abelian_direct_factor;
use pgroup::oracle::{
    central_automorphisms, enumerate_homs_to_center, inner_automorphisms, oracle_cross_check,
};
use pgroup::verify::{is_automorphism, is_central, is_inner};
use pgroup::{FiniteGroup, GroupMap};

fn small_p_groups(max: usize) -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = catalogue_groups(max)
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .collect();
    for n in [2usize, 3, 4, 8, 9, 27] {
        out.push((format!("C{n}"), FiniteGroup::cyclic(n).unwrap()));
    }
    out
}

#[test]
fn hom_counts_match_generator_image_scan() {
    for (name, g) in small_p_groups(81) {
        let z = brute_center(&g);
        let homs = enumerate_homs_to_center(&g).unwrap();
        assert_eq!(homs.len(), brute_hom_count(&g, &g, &z), "{name}");
        for f in &homs {
            assert!(f.image.iter().all(|y| z.binary_search(y).is_ok()));
        }
    }
}

/// Automorphisms with central displacement, found by trying every generator
/// image tuple.
fn brute_central_automorphisms(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let z = brute_center(g);
    let gens = g.generators();
    // alpha(x) = x c with c central, so only central translates are candidates
    let choices: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| z.iter().map(|&c| g.mul(x, c)).collect())
        .collect();
    let mut tuple = vec![0usize; gens.len()];
    let mut out = Vec::new();
    loop {
        let images: Vec<usize> = tuple.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        if let Some(table) = g.extend_homomorphism(g, &images) {
            let mut seen = vec![false; g.order()];
            table.iter().for_each(|&y| seen[y] = true);
            let central =
                (0..g.order()).all(|x| z.binary_search(&g.mul(g.inv(x), table[x])).is_ok());
            if seen.iter().all(|&b| b) && central {
                out.push(table);
            }
        }
        let mut i = tuple.len();
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < z.len() {
                break;
            }
            tuple[i] = 0;
        }
    }
}

#[test]
fn central_automorphisms_have_no_omissions() {
    for (name, g) in small_p_groups(81) {
        let found: Vec<Vec<usize>> = central_automorphisms(&g)
            .unwrap()
            .into_iter()
            .map(GroupMap::into_image)
            .collect();
        assert_eq!(found, brute_central_automorphisms(&g), "{name}");
    }
}

#[test]
fn central_members_pass_verify() {
    for (name, g) in catalogue_groups(512) {
        for m in central_automorphisms(&g).unwrap() {
            assert!(is_automorphism(&m) && is_central(&m), "{name}");
        }
    }
}

#[test]
fn inner_count_is_index_of_center() {
    for (name, g) in small_p_groups(512) {
        assert_eq!(
            inner_automorphisms(&g).len(),
            g.order() / brute_center(&g).len(),
            "{name}"
        );
    }
}

#[test]
fn constructed_alpha_passes_oracle_and_is_disjoint_from_inner() {
    for (name, g) in catalogue_groups(512) {
        let Some(dec) = find_abelian_direct_factor(&g).unwrap() else {
            continue;
        };
        let alpha = build_alpha(&dec, &choose_alpha_data(&dec).unwrap());
        assert!(oracle_cross_check(&g, &alpha).unwrap(), "{name}");
        assert!(is_inner(&alpha).is_none());
        assert!(
            !inner_automorphisms(&g)
                .iter()
                .any(|m| m.image() == alpha.image()),
            "{name}"
        );
        for y in 0..g.order() {
            let conj = GroupMap::conjugation(&g, y);
            assert!(is_inner(&conj).is_some(), "{name}");
        }
    }
}
