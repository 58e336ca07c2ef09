//! Declarative group specifications and their JSON form.
//!
//! A spec file is a single object `{"construct": <node>}` where each node is
//! tagged by `"kind"`:
//!
//! ```json
//! {"construct": {"kind": "direct_product", "factors": [
//!     {"kind": "cyclic", "order": 2},
//!     {"kind": "semidirect",
//!      "base": {"kind": "cyclic", "order": 4},
//!      "actor": {"kind": "cyclic", "order": 2},
//!      "action": [["g0^-1"]]}
//! ]}}
//! ```
//!
//! Semidirect actions list, for each actor generator, the images of the base
//! generators as words in `g0, g1, ...`. Permutation generators use cycle
//! notation on points `1..=degree`.

use serde::{Deserialize, Serialize};

use crate::catalogue;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP};

/// Largest accepted permutation degree.
pub const MAX_DEGREE: usize = 1 << 16;

const MAX_NESTING: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    Cyclic {
        order: usize,
    },
    DirectProduct {
        factors: Vec<GroupSpec>,
    },
    Semidirect {
        base: Box<GroupSpec>,
        actor: Box<GroupSpec>,
        action: Vec<Vec<String>>,
    },
    Permutation {
        degree: usize,
        generators: Vec<String>,
    },
    Builtin {
        name: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub construct: GroupSpec,
}

impl SpecFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }
}

impl GroupSpec {
    pub fn cyclic(order: usize) -> Self {
        GroupSpec::Cyclic { order }
    }

    pub fn product(factors: Vec<GroupSpec>) -> Self {
        GroupSpec::DirectProduct { factors }
    }

    pub fn semidirect(base: GroupSpec, actor: GroupSpec, action: &[&[&str]]) -> Self {
        GroupSpec::Semidirect {
            base: Box::new(base),
            actor: Box::new(actor),
            action: action
                .iter()
                .map(|imgs| imgs.iter().map(|s| s.to_string()).collect())
                .collect(),
        }
    }

    pub fn builtin(name: &str) -> Self {
        GroupSpec::Builtin {
            name: name.to_string(),
        }
    }
}

/// Builds the group described by `spec` with the default order cap.
pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    build_group_capped(spec, DEFAULT_ORDER_CAP)
}

pub fn build_group_capped(spec: &GroupSpec, cap: usize) -> Result<FiniteGroup> {
    build(spec, cap, 0)
}

fn build(spec: &GroupSpec, cap: usize, depth: usize) -> Result<FiniteGroup> {
    if depth > MAX_NESTING {
        return Err(Error::InvalidSpec("spec nested too deeply".into()));
    }
    match spec {
        GroupSpec::Cyclic { order } => FiniteGroup::cyclic_capped(*order, cap),
        GroupSpec::DirectProduct { factors } => {
            if factors.is_empty() {
                return Err(Error::InvalidSpec(
                    "direct_product needs at least one factor".into(),
                ));
            }
            let built = factors
                .iter()
                .map(|f| build(f, cap, depth + 1))
                .collect::<Result<Vec<_>>>()?;
            let refs: Vec<&FiniteGroup> = built.iter().collect();
            FiniteGroup::direct_product_many(&refs, cap)
        }
        GroupSpec::Semidirect {
            base,
            actor,
            action,
        } => {
            let base = build(base, cap, depth + 1)?;
            let actor = build(actor, cap, depth + 1)?;
            if !base.is_abelian() {
                return Err(Error::InvalidSpec("semidirect base must be abelian".into()));
            }
            if !is_cyclic(&actor) {
                return Err(Error::InvalidSpec("semidirect actor must be cyclic".into()));
            }
            if action.len() != actor.generators().len() {
                return Err(Error::BadAction(format!(
                    "actor has {} generators but {} actions were given",
                    actor.generators().len(),
                    action.len()
                )));
            }
            let tables = action
                .iter()
                .map(|images| action_table(&base, images))
                .collect::<Result<Vec<_>>>()?;
            FiniteGroup::semidirect(&base, &actor, &tables, cap)
        }
        GroupSpec::Permutation { degree, generators } => {
            if *degree == 0 || *degree > MAX_DEGREE {
                return Err(Error::BadPermutation(format!(
                    "degree {degree} out of range"
                )));
            }
            let perms = generators
                .iter()
                .map(|g| parse_cycles(*degree, g))
                .collect::<Result<Vec<_>>>()?;
            FiniteGroup::from_permutations(*degree, &perms, cap)
        }
        GroupSpec::Builtin { name } => {
            let entry =
                catalogue::lookup(name).ok_or_else(|| Error::UnknownBuiltin(name.clone()))?;
            build(&entry.spec, cap, depth + 1)
        }
    }
}

fn is_cyclic(g: &FiniteGroup) -> bool {
    (0..g.order()).any(|x| g.element_order(x) == g.order())
}

/// Image table of the base automorphism sending `g_i` to the `i`-th word.
fn action_table(base: &FiniteGroup, images: &[String]) -> Result<Vec<usize>> {
    let gens = base.generators();
    if images.len() != gens.len() {
        return Err(Error::BadAction(format!(
            "base has {} generators but {} images were given",
            gens.len(),
            images.len()
        )));
    }
    let imgs = images
        .iter()
        .map(|w| eval_word(base, &parse_word(w)?))
        .collect::<Result<Vec<_>>>()?;
    let table = base
        .extend_homomorphism(base, &imgs)
        .ok_or_else(|| Error::BadAction("generator images do not define a homomorphism".into()))?;
    if !base.is_automorphism_table(&table) {
        return Err(Error::BadAction(
            "generator images do not define a bijection".into(),
        ));
    }
    Ok(table)
}

/// A word in group generators: `(generator index, exponent)` factors.
pub type Word = Vec<(usize, i64)>;

/// Parses words such as `g0^2*g1^-1`, `g1 g0` or `1` (the empty word).
/// Factors are separated by `*` or whitespace.
pub fn parse_word(text: &str) -> Result<Word> {
    let mut word = Vec::new();
    for token in text.split(|c: char| c == '*' || c.is_whitespace()) {
        if token.is_empty() || token == "1" || token == "e" {
            continue;
        }
        let rest = token
            .strip_prefix('g')
            .ok_or_else(|| Error::BadWord(format!("unexpected token `{token}`")))?;
        let (index, exp) = match rest.split_once('^') {
            Some((i, e)) => (i, e),
            None => (rest, "1"),
        };
        let index: usize = index
            .parse()
            .map_err(|_| Error::BadWord(format!("bad generator index in `{token}`")))?;
        let exp: i64 = exp
            .parse()
            .map_err(|_| Error::BadWord(format!("bad exponent in `{token}`")))?;
        word.push((index, exp));
    }
    Ok(word)
}

/// Evaluates a word in the generators of `g`.
pub fn eval_word(g: &FiniteGroup, word: &[(usize, i64)]) -> Result<usize> {
    let gens = g.generators();
    let mut acc = g.identity();
    for &(i, e) in word {
        let &gen = gens
            .get(i)
            .ok_or_else(|| Error::BadWord(format!("generator g{i} does not exist")))?;
        acc = g.mul(acc, g.pow(gen, e));
    }
    Ok(acc)
}

/// Parses cycle notation such as `(1,2,3)(4 5)` into a 0-based image vector.
/// `()` and the empty string denote the identity.
pub fn parse_cycles(degree: usize, text: &str) -> Result<Vec<u32>> {
    if degree > MAX_DEGREE {
        return Err(Error::BadPermutation(format!(
            "degree {degree} out of range"
        )));
    }
    let mut perm: Vec<u32> = (0..degree as u32).collect();
    let mut moved = vec![false; degree];
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body_end = rest
            .strip_prefix('(')
            .and_then(|r| r.find(')'))
            .ok_or_else(|| Error::BadPermutation(format!("malformed cycle in `{text}`")))?;
        let body = &rest[1..=body_end];
        rest = rest[body_end + 2..].trim_start();
        let points = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                let p: usize = s
                    .parse()
                    .map_err(|_| Error::BadPermutation(format!("bad point `{s}`")))?;
                if p == 0 || p > degree {
                    return Err(Error::BadPermutation(format!(
                        "point {p} outside 1..={degree}"
                    )));
                }
                Ok(p - 1)
            })
            .collect::<Result<Vec<_>>>()?;
        if points.len() < 2 {
            continue;
        }
        for &p in &points {
            if std::mem::replace(&mut moved[p], true) {
                return Err(Error::BadPermutation(format!("point {} repeated", p + 1)));
            }
        }
        for (i, &p) in points.iter().enumerate() {
            perm[p] = points[(i + 1) % points.len()] as u32;
        }
    }
    Ok(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_words() {
        assert_eq!(parse_word("g0^2*g1^-1").unwrap(), vec![(0, 2), (1, -1)]);
        assert_eq!(parse_word("g1 g0").unwrap(), vec![(1, 1), (0, 1)]);
        assert!(parse_word("1").unwrap().is_empty());
        assert!(parse_word("").unwrap().is_empty());
        assert!(parse_word("x2").is_err());
        assert!(parse_word("g^2").is_err());
        assert!(parse_word("g0^").is_err());
    }

    #[test]
    fn parses_cycles() {
        assert_eq!(parse_cycles(4, "(1,2,3,4)").unwrap(), vec![1, 2, 3, 0]);
        assert_eq!(parse_cycles(4, "(1 3)(2 4)").unwrap(), vec![2, 3, 0, 1]);
        assert_eq!(parse_cycles(3, "()").unwrap(), vec![0, 1, 2]);
        assert!(parse_cycles(3, "(1,4)").is_err());
        assert!(parse_cycles(3, "(1,2)(2,3)").is_err());
        assert!(parse_cycles(3, "(1,2").is_err());
        assert!(parse_cycles(3, "1,2)").is_err());
    }

    #[test]
    fn spec_json_roundtrip() {
        let text = r#"{"construct": {"kind": "direct_product", "factors": [
            {"kind": "cyclic", "order": 2},
            {"kind": "semidirect", "base": {"kind": "cyclic", "order": 4},
             "actor": {"kind": "cyclic", "order": 2}, "action": [["g0^-1"]]}]}}"#;
        let spec = SpecFile::from_json(text).unwrap();
        let g = build_group(&spec.construct).unwrap();
        assert_eq!(g.order(), 16);
        assert!(!g.is_abelian());
        let again = serde_json::to_string(&spec).unwrap();
        assert_eq!(SpecFile::from_json(&again).unwrap(), spec);
    }

    #[test]
    fn rejects_malformed_specs() {
        assert!(SpecFile::from_json("{").is_err());
        assert!(SpecFile::from_json(r#"{"construct": {"kind": "torus"}}"#).is_err());
        assert!(SpecFile::from_json(r#"{"construct": {"kind": "cyclic"}}"#).is_err());
        assert!(
            SpecFile::from_json(r#"{"construct": {"kind": "cyclic", "order": 2}, "x": 1}"#)
                .is_err()
        );
        let empty = GroupSpec::product(vec![]);
        assert!(build_group(&empty).is_err());
        assert!(matches!(
            build_group(&GroupSpec::builtin("nope")),
            Err(Error::UnknownBuiltin(_))
        ));
    }

    #[test]
    fn semidirect_validation() {
        let c9 = GroupSpec::cyclic(9);
        let c3 = GroupSpec::cyclic(3);
        // x -> x^4 has order 3 in Aut(C9)
        let ok = GroupSpec::semidirect(c9.clone(), c3.clone(), &[&["g0^4"]]);
        assert_eq!(build_group(&ok).unwrap().order(), 27);
        // x -> x^2 has order 6, not compatible with C3
        let bad = GroupSpec::semidirect(c9.clone(), c3.clone(), &[&["g0^2"]]);
        assert!(matches!(build_group(&bad), Err(Error::BadAction(_))));
        // x -> x^3 is not bijective
        let bad = GroupSpec::semidirect(c9.clone(), c3.clone(), &[&["g0^3"]]);
        assert!(matches!(build_group(&bad), Err(Error::BadAction(_))));
        let wrong_arity = GroupSpec::semidirect(c9.clone(), c3.clone(), &[&["g0", "g0"]]);
        assert!(build_group(&wrong_arity).is_err());
        let nonabelian_base =
            GroupSpec::semidirect(GroupSpec::builtin("D4"), c3.clone(), &[&["g0", "g1"]]);
        assert!(matches!(
            build_group(&nonabelian_base),
            Err(Error::InvalidSpec(_))
        ));
        let noncyclic_actor = GroupSpec::semidirect(
            c9,
            GroupSpec::product(vec![c3.clone(), c3]),
            &[&["g0"], &["g0"]],
        );
        assert!(matches!(
            build_group(&noncyclic_actor),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn permutation_degree_mismatch() {
        let spec = GroupSpec::Permutation {
            degree: 3,
            generators: vec!["(1,5)".into()],
        };
        assert!(matches!(build_group(&spec), Err(Error::BadPermutation(_))));
        let spec = GroupSpec::Permutation {
            degree: 0,
            generators: vec![],
        };
        assert!(build_group(&spec).is_err());
    }

    #[test]
    fn nested_cap_is_enforced() {
        let spec = GroupSpec::product(vec![GroupSpec::cyclic(101), GroupSpec::cyclic(101)]);
        assert!(matches!(
            build_group(&spec),
            Err(Error::OrderCapExceeded { .. })
        ));
        let perm = GroupSpec::Permutation {
            degree: 8,
            generators: vec!["(1,2,3,4,5,6,7,8)".into(), "(1,2)".into()],
        };
        assert!(matches!(
            build_group_capped(&perm, 1000),
            Err(Error::OrderCapExceeded { .. })
        ));
    }
}
