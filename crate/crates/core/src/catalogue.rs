//! Built-in named groups.

use crate::spec::GroupSpec;

/// Verdicts a catalogue entry is expected to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expected {
    /// Whether the group has a non-trivial abelian direct factor.
    pub applicable: bool,
    pub prime: u64,
    /// `|H|` and `|K|` of the canonical decomposition, when applicable.
    pub factor_orders: Option<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct CatalogueEntry {
    pub name: &'static str,
    pub spec: GroupSpec,
    /// Names for the built group's generators, in generator order.
    pub symbols: &'static [&'static str],
    pub expected: Option<Expected>,
}

fn d4() -> GroupSpec {
    // <r, s | r^4, s^2, s r s = r^-1>
    GroupSpec::semidirect(GroupSpec::cyclic(4), GroupSpec::cyclic(2), &[&["g0^-1"]])
}

fn q8() -> GroupSpec {
    // regular representation of the quaternion group
    GroupSpec::Permutation {
        degree: 8,
        generators: vec!["(1,2,4,7)(3,6,8,5)".into(), "(1,3,4,8)(2,5,7,6)".into()],
    }
}

fn heisenberg27() -> GroupSpec {
    // (C3 x C3) ⋊ C3 with u -> u, v -> u v: exponent 3
    GroupSpec::semidirect(
        GroupSpec::product(vec![GroupSpec::cyclic(3), GroupSpec::cyclic(3)]),
        GroupSpec::cyclic(3),
        &[&["g0", "g0*g1"]],
    )
}

fn modular27() -> GroupSpec {
    // C9 ⋊ C3 with x -> x^4: exponent 9
    GroupSpec::semidirect(GroupSpec::cyclic(9), GroupSpec::cyclic(3), &[&["g0^4"]])
}

/// Base `C9 x C3 = <x> x <b>` acted on by `y: x -> x b, b -> b`.
pub fn paper_example_k() -> GroupSpec {
    GroupSpec::semidirect(
        GroupSpec::product(vec![GroupSpec::cyclic(9), GroupSpec::cyclic(3)]),
        GroupSpec::cyclic(3),
        &[&["g0*g1", "g1"]],
    )
}

/// `(C3 x C9) x ((C9 x C3) ⋊ C3)` for a given `C3` action on `C9 x C3`.
pub fn paper_example_shape(k: GroupSpec) -> GroupSpec {
    GroupSpec::product(vec![GroupSpec::cyclic(3), GroupSpec::cyclic(9), k])
}

fn entry(
    name: &'static str,
    spec: GroupSpec,
    symbols: &'static [&'static str],
    prime: u64,
    factor_orders: Option<(usize, usize)>,
) -> CatalogueEntry {
    CatalogueEntry {
        name,
        spec,
        symbols,
        expected: Some(Expected {
            applicable: factor_orders.is_some(),
            prime,
            factor_orders,
        }),
    }
}

/// All built-in groups, in report order.
pub fn catalogue() -> Vec<CatalogueEntry> {
    use GroupSpec as S;
    vec![
        entry("D4", d4(), &["r", "s"], 2, None),
        entry("Q8", q8(), &["i", "j"], 2, None),
        entry("heisenberg27", heisenberg27(), &["u", "v", "w"], 3, None),
        entry("modular27", modular27(), &["x", "y"], 3, None),
        entry(
            "C2xD4",
            S::product(vec![S::cyclic(2), d4()]),
            &["a", "r", "s"],
            2,
            Some((2, 8)),
        ),
        entry(
            "C2xQ8",
            S::product(vec![S::cyclic(2), q8()]),
            &["a", "i", "j"],
            2,
            Some((2, 8)),
        ),
        entry(
            "C4xD4",
            S::product(vec![S::cyclic(4), d4()]),
            &["a", "r", "s"],
            2,
            Some((4, 8)),
        ),
        entry(
            "C2xC2xD4",
            S::product(vec![S::cyclic(2), S::cyclic(2), d4()]),
            &["a", "b", "r", "s"],
            2,
            Some((2, 16)),
        ),
        entry(
            "C3xHeis27",
            S::product(vec![S::cyclic(3), heisenberg27()]),
            &["a", "u", "v", "w"],
            3,
            Some((3, 27)),
        ),
        entry(
            "C3xModular27",
            S::product(vec![S::cyclic(3), modular27()]),
            &["a", "x", "y"],
            3,
            Some((3, 27)),
        ),
        entry(
            "C9xHeis27",
            S::product(vec![S::cyclic(9), heisenberg27()]),
            &["a", "u", "v", "w"],
            3,
            Some((9, 27)),
        ),
        entry(
            "paper3_7",
            paper_example_shape(paper_example_k()),
            &["a", "z", "x", "b", "y"],
            3,
            Some((3, 729)),
        ),
    ]
}

pub fn lookup(name: &str) -> Option<CatalogueEntry> {
    catalogue().into_iter().find(|e| e.name == name)
}

/// Resolves a generator symbol of a catalogue entry to an element index of
/// the built group.
pub fn symbol_index(
    entry: &CatalogueEntry,
    group: &crate::FiniteGroup,
    symbol: &str,
) -> Option<usize> {
    let pos = entry.symbols.iter().position(|&s| s == symbol)?;
    group.generators().get(pos).copied()
}
