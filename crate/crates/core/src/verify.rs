//! Exhaustive checks of the properties claimed for the constructed
//! automorphism, and the end-to-end theorem pipeline.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::construct::{build_alpha, choose_alpha_data_with, AlphaOverrides, AlphaSpec};
use crate::decompose::{find_abelian_direct_factor, DirectDecomposition};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::map::{displacement, GroupMap};
use crate::structure::{agemo, center, derived_subgroup, frattini};

/// Maps on groups up to this order are checked multiplicative on all pairs.
/// Above it, `f(x g) = f(x) f(g)` over all `x` and generators `g` is used,
/// which is equally exact.
pub const EXHAUSTIVE_LIMIT: usize = 4096;

/// Bijective and multiplicative.
pub fn is_automorphism(map: &GroupMap<'_>) -> bool {
    let g = map.source();
    if !std::ptr::eq(g, map.target()) || !map.is_bijective() {
        return false;
    }
    let n = g.order();
    if n <= EXHAUSTIVE_LIMIT {
        (0..n).all(|x| (0..n).all(|y| map.apply(g.mul(x, y)) == g.mul(map.apply(x), map.apply(y))))
    } else {
        g.generators()
            .iter()
            .all(|&t| (0..n).all(|x| map.apply(g.mul(x, t)) == g.mul(map.apply(x), map.apply(t))))
    }
}

/// Every displacement `x^-1 map(x)` lies in `Z(G)`.
pub fn is_central(map: &GroupMap<'_>) -> bool {
    is_central_in(map, &center(map.source()))
}

pub fn is_central_in(map: &GroupMap<'_>, z: &Subgroup<'_>) -> bool {
    (0..map.source().order()).all(|x| z.contains(displacement(map, x)))
}

/// Least `k >= 1` with `map^k = id`: the lcm of the cycle lengths of the
/// permutation `map`.
pub fn map_order(map: &GroupMap<'_>) -> usize {
    let n = map.source().order();
    let mut seen = vec![false; n];
    let mut order = 1usize;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = map.apply(x);
            len += 1;
        }
        order = order / crate::abelian::gcd(order, len) * len;
    }
    order
}

/// Some `y` with `map(x) = y^-1 x y` for all `x`, if the map is inner.
///
/// Inner automorphisms correspond to cosets of `Z(G)`, so only the smallest
/// element of each coset is tried. A returned witness is re-checked on every
/// element.
pub fn is_inner(map: &GroupMap<'_>) -> Option<usize> {
    let g = map.source();
    let z = center(g);
    // inner maps fix the center pointwise
    if z.elements().iter().any(|&c| map.apply(c) != c) {
        return None;
    }
    let n = g.order();
    let mut covered = vec![false; n];
    for y in 0..n {
        if covered[y] {
            continue;
        }
        for &c in z.elements() {
            covered[g.mul(y, c)] = true;
        }
        let yi = g.inv(y);
        let agrees = |x: usize| map.apply(x) == g.mul(g.mul(yi, x), y);
        if g.generators().iter().all(|&t| agrees(t)) && (0..n).all(agrees) {
            return Some(y);
        }
    }
    None
}

pub fn fixes_subgroup_elementwise(map: &GroupMap<'_>, s: &Subgroup<'_>) -> bool {
    s.elements().iter().all(|&x| map.apply(x) == x)
}

/// The seven named verdicts of the theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Checks {
    pub is_automorphism: bool,
    pub is_central: bool,
    pub has_order_p: bool,
    pub is_non_inner: bool,
    pub fixes_derived: bool,
    pub fixes_agemo: bool,
    pub fixes_frattini: bool,
}

impl Checks {
    pub fn all(&self) -> bool {
        self.is_automorphism
            && self.is_central
            && self.has_order_p
            && self.is_non_inner
            && self.fixes_derived
            && self.fixes_agemo
            && self.fixes_frattini
    }

    pub fn named(&self) -> [(&'static str, bool); 7] {
        [
            ("is_automorphism", self.is_automorphism),
            ("is_central", self.is_central),
            ("has_order_p", self.has_order_p),
            ("is_non_inner", self.is_non_inner),
            ("fixes_derived", self.fixes_derived),
            ("fixes_agemo", self.fixes_agemo),
            ("fixes_frattini", self.fixes_frattini),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionSummary {
    pub h_order: usize,
    pub k_order: usize,
    pub h_generators: Vec<String>,
    pub k_generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImageEntry {
    pub element: String,
    pub image: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlphaSummary {
    pub m_order: usize,
    pub m_generators: Vec<String>,
    pub h: String,
    pub g: String,
    /// Images of the generators of `G`.
    pub images: Vec<ImageEntry>,
    pub order: usize,
    /// Number of elements fixed by the map.
    pub fixed_points: usize,
    pub inner_witness: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleSummary {
    pub cross_check: bool,
    pub homs_to_center: usize,
    pub central_automorphisms: usize,
    pub inner_automorphisms: usize,
}

/// Outcome of the theorem pipeline on one group. Field order is the JSON key
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TheoremReport {
    pub group: String,
    pub order: usize,
    pub prime: Option<u64>,
    pub applicable: bool,
    pub decomposition: Option<DecompositionSummary>,
    pub alpha: Option<AlphaSummary>,
    pub checks: Option<Checks>,
    pub oracle: Option<OracleSummary>,
    pub timings_ms: BTreeMap<String, u64>,
}

impl TheoremReport {
    /// Applicable and every verdict (and the oracle, when run) true.
    pub fn passed(&self) -> bool {
        self.applicable
            && self.checks.is_some_and(|c| c.all())
            && self.oracle.is_none_or(|o| o.cross_check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }
}

fn labels(g: &FiniteGroup, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| g.label(x).to_string()).collect()
}

pub fn summarize_decomposition(dec: &DirectDecomposition<'_>) -> DecompositionSummary {
    let g = dec.group();
    DecompositionSummary {
        h_order: dec.h().order(),
        k_order: dec.k().order(),
        h_generators: labels(g, dec.h().generators()),
        k_generators: labels(g, dec.k().generators()),
    }
}

pub fn summarize_alpha(
    spec: &AlphaSpec<'_>,
    alpha: &GroupMap<'_>,
    inner_witness: Option<usize>,
) -> AlphaSummary {
    let g = alpha.source();
    AlphaSummary {
        m_order: spec.m().order(),
        m_generators: labels(g, spec.m().generators()),
        h: g.label(spec.h()).to_string(),
        g: g.label(spec.g()).to_string(),
        images: g
            .generators()
            .iter()
            .map(|&x| ImageEntry {
                element: g.label(x).to_string(),
                image: g.label(alpha.apply(x)).to_string(),
            })
            .collect(),
        order: map_order(alpha),
        fixed_points: (0..g.order()).filter(|&x| alpha.apply(x) == x).count(),
        inner_witness: inner_witness.map(|y| g.label(y).to_string()),
    }
}

/// Runs every check on `alpha`. Returns the verdicts and the inner witness,
/// if any.
pub fn check_alpha(alpha: &GroupMap<'_>) -> Result<(Checks, Option<usize>)> {
    let g = alpha.source();
    let p = g.prime().ok_or(Error::NotPGroup { order: g.order() })? as usize;
    let is_automorphism = is_automorphism(alpha);
    // the remaining predicates presuppose a bijection
    if !is_automorphism {
        let none = Checks {
            is_automorphism,
            is_central: false,
            has_order_p: false,
            is_non_inner: false,
            fixes_derived: false,
            fixes_agemo: false,
            fixes_frattini: false,
        };
        return Ok((none, None));
    }
    let witness = is_inner(alpha);
    let checks = Checks {
        is_automorphism,
        is_central: is_central(alpha),
        has_order_p: map_order(alpha) == p,
        is_non_inner: witness.is_none(),
        fixes_derived: fixes_subgroup_elementwise(alpha, &derived_subgroup(g)),
        fixes_agemo: fixes_subgroup_elementwise(alpha, &agemo(g)?),
        fixes_frattini: fixes_subgroup_elementwise(alpha, &frattini(g)?),
    };
    Ok((checks, witness))
}

/// Decompose, construct and check. A purely non-abelian group yields a
/// report with `applicable = false` rather than an error.
pub fn run_theorem_pipeline(g: &FiniteGroup, name: &str) -> Result<TheoremReport> {
    run_theorem_pipeline_with(g, name, &AlphaOverrides::default())
}

pub fn run_theorem_pipeline_with(
    g: &FiniteGroup,
    name: &str,
    overrides: &AlphaOverrides,
) -> Result<TheoremReport> {
    if !g.is_p_group() {
        return Err(Error::NotPGroup { order: g.order() });
    }
    let mut timings = BTreeMap::new();
    let mut clock = Instant::now();
    let mut lap = |key: &str, timings: &mut BTreeMap<String, u64>| {
        timings.insert(key.to_string(), clock.elapsed().as_millis() as u64);
        clock = Instant::now();
    };

    let dec = find_abelian_direct_factor(g)?;
    lap("decompose", &mut timings);
    let mut report = TheoremReport {
        group: name.to_string(),
        order: g.order(),
        prime: g.prime(),
        applicable: dec.is_some(),
        decomposition: None,
        alpha: None,
        checks: None,
        oracle: None,
        timings_ms: BTreeMap::new(),
    };
    let Some(dec) = dec else {
        report.timings_ms = timings;
        return Ok(report);
    };
    let spec = choose_alpha_data_with(&dec, overrides)?;
    let alpha = build_alpha(&dec, &spec);
    lap("construct", &mut timings);
    let (checks, witness) = check_alpha(&alpha)?;
    lap("verify", &mut timings);

    report.decomposition = Some(summarize_decomposition(&dec));
    report.alpha = Some(summarize_alpha(&spec, &alpha, witness));
    report.checks = Some(checks);
    report.timings_ms = timings;
    Ok(report)
}
