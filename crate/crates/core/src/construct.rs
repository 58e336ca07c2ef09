//! The central automorphism built from a decomposition `G = H x K`.
//!
//! With `M` a maximal subgroup of `H`, `h ∈ H \ M` and `g` a non-identity
//! element of `Omega_1(Z(K))`, every element factors as `m h^i k` and the map
//! `m h^i k -> m h^i k g^i` is an automorphism. It is computed in the closed
//! form `x -> x g^nu(x)`, where `nu: G -> Z/p` reads `i` off the coset of the
//! `H`-component modulo `M`; its kernel is `MK`.

use crate::decompose::DirectDecomposition;
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::map::GroupMap;
use crate::structure::{maximal_subgroups, omega1, subgroup_center};

/// User-pinned choices for `M`, `h` and `g`. Unset fields use the canonical
/// choice.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AlphaOverrides {
    pub m_generators: Option<Vec<usize>>,
    pub h: Option<usize>,
    pub g: Option<usize>,
}

pub const G_VIOLATION: &str = "g must be a non-identity element of Ω₁(Z(K))";
pub const H_VIOLATION: &str = "h must be an element of H outside M";
pub const M_VIOLATION: &str = "M must be a maximal subgroup of H";

/// The data `(M, h, g, nu)` defining the automorphism.
#[derive(Debug, Clone)]
pub struct AlphaSpec<'g> {
    m: Subgroup<'g>,
    h: usize,
    g: usize,
    nu: Vec<usize>,
    prime: usize,
}

impl<'g> AlphaSpec<'g> {
    pub fn m(&self) -> &Subgroup<'g> {
        &self.m
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn g(&self) -> usize {
        self.g
    }

    /// The exponent `i` of `x = m h^i k`, in `0..p`.
    pub fn nu(&self, x: usize) -> usize {
        self.nu[x]
    }

    pub fn prime(&self) -> usize {
        self.prime
    }
}

/// Canonical choices: the first maximal subgroup of `H`, the smallest element
/// of `H \ M`, and the smallest non-identity element of `Omega_1(Z(K))`.
pub fn choose_alpha_data<'g>(dec: &DirectDecomposition<'g>) -> Result<AlphaSpec<'g>> {
    choose_alpha_data_with(dec, &AlphaOverrides::default())
}

pub fn choose_alpha_data_with<'g>(
    dec: &DirectDecomposition<'g>,
    overrides: &AlphaOverrides,
) -> Result<AlphaSpec<'g>> {
    let grp = dec.group();
    let p = grp.prime().ok_or(Error::NotPGroup { order: grp.order() })? as usize;
    let h_sub = dec.h();

    let m = match &overrides.m_generators {
        Some(gens) => {
            let m = grp.closure(gens)?;
            if !m.is_subgroup_of(h_sub) || m.order() * p != h_sub.order() {
                return Err(Error::AlphaData(M_VIOLATION.into()));
            }
            m
        }
        None => {
            let maximals = maximal_subgroups(h_sub)?;
            let pick = match overrides.h {
                Some(h) => maximals.into_iter().find(|m| !m.contains(h)),
                None => maximals.into_iter().next(),
            };
            pick.ok_or_else(|| Error::AlphaData(H_VIOLATION.into()))?
        }
    };

    let h = match overrides.h {
        Some(h) => {
            grp.check_index(h)?;
            if !h_sub.contains(h) || m.contains(h) {
                return Err(Error::AlphaData(H_VIOLATION.into()));
            }
            h
        }
        None => *h_sub
            .elements()
            .iter()
            .find(|&&x| !m.contains(x))
            .ok_or_else(|| Error::Internal("M is all of H".into()))?,
    };

    let omega = omega1(&subgroup_center(dec.k()))?;
    let g = match overrides.g {
        Some(g) => {
            grp.check_index(g)?;
            if g == 0 || !omega.contains(g) {
                return Err(Error::AlphaData(G_VIOLATION.into()));
            }
            g
        }
        None => *omega.elements().get(1).ok_or_else(|| {
            Error::Internal("Ω₁(Z(K)) is trivial for a non-trivial p-group K".into())
        })?,
    };
    if grp.pow(g, p as i64) != 0 {
        return Err(Error::Internal("g does not have order p".into()));
    }

    // h generates H/M, so the cosets h^i M for i in 0..p cover H
    let mut coset_of = vec![usize::MAX; grp.order()];
    let mut hp = 0;
    for i in 0..p {
        for &x in m.elements() {
            coset_of[grp.mul(hp, x)] = i;
        }
        hp = grp.mul(hp, h);
    }
    let nu: Vec<usize> = (0..grp.order())
        .map(|x| coset_of[dec.factor(x).0])
        .collect();
    if nu.contains(&usize::MAX) {
        return Err(Error::Internal("cosets of M do not cover H".into()));
    }
    if nu[h] != 1 || nu[g] != 0 {
        return Err(Error::Internal(
            "exponent map inconsistent with h or g".into(),
        ));
    }
    Ok(AlphaSpec {
        m,
        h,
        g,
        nu,
        prime: p,
    })
}

/// `x -> x g^nu(x)`.
pub fn build_alpha<'g>(dec: &DirectDecomposition<'g>, spec: &AlphaSpec<'g>) -> GroupMap<'g> {
    let grp = dec.group();
    let powers: Vec<usize> = (0..spec.prime).map(|i| grp.pow(spec.g, i as i64)).collect();
    let image = (0..grp.order())
        .map(|x| grp.mul(x, powers[spec.nu[x]]))
        .collect();
    GroupMap::on(grp, image).expect("image table has the right shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::{lookup, symbol_index};
    use crate::decompose::{find_abelian_direct_factor, verify_decomposition};
    use crate::map::displacement;
    use crate::spec::build_group;
    use crate::structure::center;
    use crate::FiniteGroup;

    fn named(name: &str) -> (FiniteGroup, crate::catalogue::CatalogueEntry) {
        let e = lookup(name).unwrap();
        (build_group(&e.spec).unwrap(), e)
    }

    #[test]
    fn c2xd4_choices_are_forced() {
        let (g, e) = named("C2xD4");
        let sym = |s| symbol_index(&e, &g, s).unwrap();
        let dec = verify_decomposition(&g, &[sym("a")], &[sym("r"), sym("s")]).unwrap();
        let spec = choose_alpha_data(&dec).unwrap();
        assert!(spec.m().is_trivial());
        assert_eq!(spec.h(), sym("a"));
        assert_eq!(spec.g(), g.pow(sym("r"), 2));

        let alpha = build_alpha(&dec, &spec);
        assert_eq!(alpha.apply(sym("a")), g.mul(sym("a"), g.pow(sym("r"), 2)));
        for &k in dec.k().elements() {
            assert_eq!(alpha.apply(k), k);
        }
        assert_eq!(displacement(&alpha, spec.h()), spec.g());
    }

    #[test]
    fn c3xheis27_picks_smaller_central_element() {
        let (g, _) = named("C3xHeis27");
        let dec = find_abelian_direct_factor(&g).unwrap().unwrap();
        let zk = subgroup_center(dec.k());
        let nontrivial: Vec<usize> = zk.elements()[1..].to_vec();
        assert_eq!(nontrivial.len(), 2);
        let spec = choose_alpha_data(&dec).unwrap();
        assert_eq!(spec.g(), nontrivial[0]);
    }

    #[test]
    fn nu_vanishes_on_mk_and_alpha_is_central() {
        for name in ["C2xD4", "C4xD4", "C3xModular27", "C9xHeis27"] {
            let (g, _) = named(name);
            let dec = find_abelian_direct_factor(&g).unwrap().unwrap();
            let spec = choose_alpha_data(&dec).unwrap();
            let mk = spec.m().join(dec.k());
            let alpha = build_alpha(&dec, &spec);
            let z = center(&g);
            for x in 0..g.order() {
                assert_eq!(spec.nu(x) == 0, mk.contains(x), "{name}");
                assert_eq!(alpha.apply(x) == x, spec.nu(x) == 0, "{name}");
                let d = displacement(&alpha, x);
                assert!(z.contains(d));
                assert_eq!(d, g.pow(spec.g(), spec.nu(x) as i64));
            }
            assert_eq!(alpha.apply(spec.g()), spec.g());
        }
    }

    #[test]
    fn override_violations() {
        let (g, e) = named("C2xD4");
        let sym = |s| symbol_index(&e, &g, s).unwrap();
        let dec = verify_decomposition(&g, &[sym("a")], &[sym("r"), sym("s")]).unwrap();
        let bad_g = AlphaOverrides {
            g: Some(0),
            ..Default::default()
        };
        assert_eq!(
            choose_alpha_data_with(&dec, &bad_g).unwrap_err(),
            Error::AlphaData(G_VIOLATION.into())
        );
        let g_not_central = AlphaOverrides {
            g: Some(sym("s")),
            ..Default::default()
        };
        assert!(choose_alpha_data_with(&dec, &g_not_central).is_err());
        let h_in_k = AlphaOverrides {
            h: Some(sym("r")),
            ..Default::default()
        };
        assert_eq!(
            choose_alpha_data_with(&dec, &h_in_k).unwrap_err(),
            Error::AlphaData(H_VIOLATION.into())
        );
        let m_too_big = AlphaOverrides {
            m_generators: Some(vec![sym("a")]),
            ..Default::default()
        };
        assert_eq!(
            choose_alpha_data_with(&dec, &m_too_big).unwrap_err(),
            Error::AlphaData(M_VIOLATION.into())
        );
    }

    #[test]
    fn override_h_selects_compatible_m() {
        let (g, _) = named("C4xD4");
        let dec = find_abelian_direct_factor(&g).unwrap().unwrap();
        // in a cyclic H of order 4 any generator lies outside the unique maximal subgroup
        let hgen = dec
            .h()
            .elements()
            .iter()
            .copied()
            .rfind(|&x| g.element_order(x) == 4)
            .unwrap();
        let spec = choose_alpha_data_with(
            &dec,
            &AlphaOverrides {
                h: Some(hgen),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(spec.h(), hgen);
        assert_eq!(spec.nu(hgen), 1);
    }
}
