//! Command implementations behind the `pgroup` binary. Every command returns
//! a serializable report; the exit code is a function of that report alone.

use std::path::Path;

use pgroup::catalogue::{catalogue, lookup, paper_example_shape, symbol_index, CatalogueEntry};
use pgroup::construct::{build_alpha, choose_alpha_data_with, AlphaOverrides};
use pgroup::decompose::find_abelian_direct_factor;
use pgroup::oracle::{oracle_summary, ORACLE_CAP};
use pgroup::spec::eval_word;
use pgroup::structure::{agemo, center, derived_subgroup, frattini};
use pgroup::verify::{
    fixes_subgroup_elementwise, is_automorphism, is_central, is_inner, map_order,
    run_theorem_pipeline_with, summarize_alpha, summarize_decomposition, ImageEntry, TheoremReport,
};
use pgroup::{build_group, Error, FiniteGroup, GroupMap, GroupSpec, SpecFile};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_APPLICABLE: i32 = 3;

/// Exit code for a finished theorem report.
pub fn exit_code(report: &TheoremReport) -> i32 {
    if !report.applicable {
        EXIT_NOT_APPLICABLE
    } else if report.checks.is_some_and(|c| !c.all())
        || report.oracle.is_some_and(|o| !o.cross_check)
    {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    }
}

/// Exit code for a library error.
pub fn error_code(err: &Error) -> i32 {
    match err {
        Error::Internal(_) => EXIT_VIOLATION,
        _ => EXIT_USAGE,
    }
}

/// A group loaded from `builtin:NAME` or from a spec file.
pub struct Loaded {
    pub name: String,
    pub group: FiniteGroup,
    pub entry: Option<CatalogueEntry>,
}

pub fn load(arg: &str) -> Result<Loaded, Error> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        let entry = lookup(name).ok_or_else(|| Error::UnknownBuiltin(name.to_string()))?;
        let group = build_group(&entry.spec)?;
        return Ok(Loaded {
            name: name.to_string(),
            group,
            entry: Some(entry),
        });
    }
    let text =
        std::fs::read_to_string(arg).map_err(|e| Error::InvalidSpec(format!("{arg}: {e}")))?;
    let spec = SpecFile::from_json(&text)?;
    let group = build_group(&spec.construct)?;
    let entry = match &spec.construct {
        GroupSpec::Builtin { name } => lookup(name),
        _ => None,
    };
    let name = Path::new(arg)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| arg.to_string());
    Ok(Loaded { name, group, entry })
}

/// Resolves an element given as a label (`(1,[2|0])`), or as a product of
/// powers of generator names: catalogue symbols or `g0, g1, ...`.
pub fn resolve_element(loaded: &Loaded, text: &str) -> Result<usize, Error> {
    let g = &loaded.group;
    let text = text.trim();
    if let Some(x) = g.find_label(text) {
        return Ok(x);
    }
    let bad = || Error::BadWord(text.to_string());
    let mut word = Vec::new();
    for token in text
        .split(|c: char| c == '*' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        let (sym, exp) = match token.split_once('^') {
            Some((s, e)) => (s, e.parse::<i64>().map_err(|_| bad())?),
            None => (token, 1),
        };
        if sym == "1" || sym == "e" {
            continue;
        }
        let by_symbol = loaded
            .entry
            .as_ref()
            .and_then(|e| symbol_index(e, g, sym))
            .and_then(|x| g.generators().iter().position(|&y| y == x));
        let pos = match by_symbol {
            Some(pos) => pos,
            None => sym
                .strip_prefix('g')
                .and_then(|i| i.parse::<usize>().ok())
                .ok_or_else(bad)?,
        };
        word.push((pos, exp));
    }
    eval_word(g, &word)
}

/// Override labels for `M`, `h` and `g`.
#[derive(Debug, Clone, Default)]
pub struct OverrideLabels {
    pub m: Vec<String>,
    pub h: Option<String>,
    pub g: Option<String>,
}

pub fn resolve_overrides(
    loaded: &Loaded,
    labels: &OverrideLabels,
) -> Result<AlphaOverrides, Error> {
    let m_generators = if labels.m.is_empty() {
        None
    } else {
        Some(
            labels
                .m
                .iter()
                .map(|t| resolve_element(loaded, t))
                .collect::<Result<Vec<_>, _>>()?,
        )
    };
    Ok(AlphaOverrides {
        m_generators,
        h: labels
            .h
            .as_deref()
            .map(|t| resolve_element(loaded, t))
            .transpose()?,
        g: labels
            .g
            .as_deref()
            .map(|t| resolve_element(loaded, t))
            .transpose()?,
    })
}

/// Full pipeline with the canonical choices. The oracle is not run.
pub fn cmd_check(loaded: &Loaded) -> Result<TheoremReport, Error> {
    run_theorem_pipeline_with(&loaded.group, &loaded.name, &AlphaOverrides::default())
}

/// Decomposition and `alpha` only, unless `verify` is set.
pub fn cmd_construct(
    loaded: &Loaded,
    labels: &OverrideLabels,
    verify: bool,
) -> Result<TheoremReport, Error> {
    let overrides = resolve_overrides(loaded, labels)?;
    if verify {
        return run_theorem_pipeline_with(&loaded.group, &loaded.name, &overrides);
    }
    let g = &loaded.group;
    if !g.is_p_group() {
        return Err(Error::NotPGroup { order: g.order() });
    }
    let dec = find_abelian_direct_factor(g)?;
    let mut report = TheoremReport {
        group: loaded.name.clone(),
        order: g.order(),
        prime: g.prime(),
        applicable: dec.is_some(),
        decomposition: None,
        alpha: None,
        checks: None,
        oracle: None,
        timings_ms: Default::default(),
    };
    if let Some(dec) = dec {
        let spec = choose_alpha_data_with(&dec, &overrides)?;
        let alpha = build_alpha(&dec, &spec);
        report.decomposition = Some(summarize_decomposition(&dec));
        report.alpha = Some(summarize_alpha(&spec, &alpha, None));
    }
    Ok(report)
}

/// Full pipeline plus the brute-force cross-check.
pub fn cmd_oracle(loaded: &Loaded, labels: &OverrideLabels) -> Result<TheoremReport, Error> {
    let g = &loaded.group;
    if g.order() > ORACLE_CAP {
        return Err(Error::EnumerationCap {
            order: g.order(),
            cap: ORACLE_CAP,
        });
    }
    let overrides = resolve_overrides(loaded, labels)?;
    let mut report = run_theorem_pipeline_with(g, &loaded.name, &overrides)?;
    if let Some(dec) = find_abelian_direct_factor(g)? {
        let alpha = build_alpha(&dec, &choose_alpha_data_with(&dec, &overrides)?);
        report.oracle = Some(oracle_summary(g, &alpha)?);
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogueRow {
    pub report: TheoremReport,
    /// Whether applicability, `p`, `|H|` and `|K|` agree with the entry.
    pub matches_expected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogueRun {
    pub max_order: usize,
    pub rows: Vec<CatalogueRow>,
    pub passed: bool,
}

impl CatalogueRun {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            EXIT_OK
        } else {
            EXIT_VIOLATION
        }
    }
}

fn catalogue_row(loaded: &Loaded) -> Result<CatalogueRow, Error> {
    let report = if loaded.group.order() <= ORACLE_CAP {
        cmd_oracle(loaded, &OverrideLabels::default())?
    } else {
        cmd_check(loaded)?
    };
    let expected = loaded.entry.as_ref().and_then(|e| e.expected);
    let matches_expected = expected.is_none_or(|e| {
        let orders = report
            .decomposition
            .as_ref()
            .map(|d| (d.h_order, d.k_order));
        e.applicable == report.applicable
            && Some(e.prime) == report.prime
            && e.factor_orders == orders
    });
    Ok(CatalogueRow {
        report,
        matches_expected,
    })
}

/// Every catalogue entry up to `max_order`, evaluated concurrently and
/// reported in catalogue order. Not-applicable entries do not fail the run.
/// Without `timings` the output is byte-for-byte reproducible.
pub fn cmd_catalogue(max_order: usize, timings: bool) -> Result<CatalogueRun, Error> {
    let entries: Vec<Loaded> = catalogue()
        .into_iter()
        .map(|e| {
            build_group(&e.spec).map(|group| Loaded {
                name: e.name.to_string(),
                group,
                entry: Some(e),
            })
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .filter(|l| l.group.order() <= max_order)
        .collect();
    let mut rows = entries
        .par_iter()
        .map(catalogue_row)
        .collect::<Result<Vec<_>, _>>()?;
    if !timings {
        rows.iter_mut().for_each(|r| r.report.timings_ms.clear());
    }
    let passed = rows
        .iter()
        .all(|r| r.matches_expected && exit_code(&r.report) != EXIT_VIOLATION);
    Ok(CatalogueRun {
        max_order,
        rows,
        passed,
    })
}

pub const PAPER_ORDER: usize = 2187;
pub const PAPER_CENTER_ORDER: usize = 243;
pub const PAPER_AUT_COUNT: u64 = 76_527_504;

/// Verdicts for the explicitly given map `x -> x c^2, z -> z a^2 c,
/// a -> a c^2`, fixing `y` and `b`, where `c = x^3` and `d = [x, y]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitChecks {
    pub order: usize,
    pub has_order_3: bool,
    pub is_central: bool,
    pub is_non_inner: bool,
    pub fixes_derived: bool,
    pub fixes_agemo: bool,
    pub fixes_frattini: bool,
    /// `G^3` equals `<x^3, y^3, z^3>`.
    pub agemo_from_cubes: bool,
    pub fixes_c_and_d: bool,
}

impl ExplicitChecks {
    pub fn all(&self) -> bool {
        self.has_order_3
            && self.is_central
            && self.is_non_inner
            && self.fixes_derived
            && self.fixes_agemo
            && self.fixes_frattini
            && self.agemo_from_cubes
            && self.fixes_c_and_d
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Realization {
    /// Images of `x` and `b` under the action of `y`.
    pub action: Vec<ImageEntry>,
    pub report: TheoremReport,
    pub center_order: usize,
    pub center_matches: bool,
    /// `None` when the explicit map does not extend to an automorphism.
    pub explicit_alpha: Option<ExplicitChecks>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PaperExampleReport {
    pub order: usize,
    pub expected_center_order: usize,
    pub realizations: Vec<Realization>,
    pub realizable_explicit: usize,
    /// Stated but not recomputed here.
    pub unchecked_automorphism_count: u64,
    pub passed: bool,
}

impl PaperExampleReport {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            EXIT_OK
        } else {
            EXIT_VIOLATION
        }
    }
}

/// Order-3 automorphisms of `C9 x C3 = <x> x <b>`, as images of `(x, b)`.
pub fn order_three_actions() -> Result<Vec<(usize, usize)>, Error> {
    let base = build_group(&GroupSpec::product(vec![
        GroupSpec::cyclic(9),
        GroupSpec::cyclic(3),
    ]))?;
    let [x, b] = [base.generators()[0], base.generators()[1]];
    let mut out = Vec::new();
    for ix in 0..base.order() {
        for ib in 0..base.order() {
            let Some(table) = base.extend_homomorphism(&base, &[ix, ib]) else {
                continue;
            };
            let Ok(phi) = GroupMap::on(&base, table) else {
                continue;
            };
            if !phi.is_bijective() || phi.is_identity() {
                continue;
            }
            if phi.compose(&phi).compose(&phi).is_identity() {
                out.push((phi.apply(x), phi.apply(b)));
            }
        }
    }
    Ok(out)
}

fn word_of(base: &FiniteGroup, y: usize) -> String {
    // labels of C9 x C3 are "(i,j)"
    let label = base.label(y);
    let (i, j) = label
        .trim_matches(|c| c == '(' || c == ')')
        .split_once(',')
        .expect("product label");
    format!("g0^{i}*g1^{j}")
}

fn realization_spec(images: (usize, usize)) -> Result<(GroupSpec, Vec<ImageEntry>), Error> {
    let base = build_group(&GroupSpec::product(vec![
        GroupSpec::cyclic(9),
        GroupSpec::cyclic(3),
    ]))?;
    let (wx, wb) = (word_of(&base, images.0), word_of(&base, images.1));
    let k = GroupSpec::semidirect(
        GroupSpec::product(vec![GroupSpec::cyclic(9), GroupSpec::cyclic(3)]),
        GroupSpec::cyclic(3),
        &[&[wx.as_str(), wb.as_str()]],
    );
    let action = vec![
        ImageEntry {
            element: "x".into(),
            image: base.label(images.0).to_string(),
        },
        ImageEntry {
            element: "b".into(),
            image: base.label(images.1).to_string(),
        },
    ];
    Ok((paper_example_shape(k), action))
}

fn explicit_alpha(g: &FiniteGroup) -> Result<Option<ExplicitChecks>, Error> {
    // generator order of the shape: a, z, x, b, y
    let [a, z, x, b, y] = <[usize; 5]>::try_from(g.generators())
        .map_err(|_| Error::Internal("unexpected generators".into()))?;
    let c = g.pow(x, 3);
    let d = g.commutator(x, y);
    let images = [
        g.mul(a, g.pow(c, 2)),
        g.mul(g.mul(z, g.pow(a, 2)), c),
        g.mul(x, g.pow(c, 2)),
        b,
        y,
    ];
    let Some(table) = g.extend_homomorphism(g, &images) else {
        return Ok(None);
    };
    let alpha = GroupMap::on(g, table)?;
    if !is_automorphism(&alpha) {
        return Ok(None);
    }
    let order = map_order(&alpha);
    let gp = agemo(g)?;
    let cubes = g.closure(&[g.pow(x, 3), g.pow(y, 3), g.pow(z, 3)])?;
    Ok(Some(ExplicitChecks {
        order,
        has_order_3: order == 3,
        is_central: is_central(&alpha),
        is_non_inner: is_inner(&alpha).is_none(),
        fixes_derived: fixes_subgroup_elementwise(&alpha, &derived_subgroup(g)),
        fixes_agemo: fixes_subgroup_elementwise(&alpha, &gp),
        fixes_frattini: fixes_subgroup_elementwise(&alpha, &frattini(g)?),
        agemo_from_cubes: gp.elements() == cubes.elements(),
        fixes_c_and_d: alpha.apply(c) == c && alpha.apply(d) == d,
    }))
}

fn realize(images: (usize, usize)) -> Result<Realization, Error> {
    let (spec, action) = realization_spec(images)?;
    let g = build_group(&spec)?;
    let report = run_theorem_pipeline_with(&g, "paper3_7", &AlphaOverrides::default())?;
    let center_order = center(&g).order();
    Ok(Realization {
        action,
        report,
        center_order,
        center_matches: center_order == PAPER_CENTER_ORDER,
        explicit_alpha: explicit_alpha(&g)?,
    })
}

/// Every realization of `(C3 x C9) x ((C9 x C3) ⋊ C3)` over the order-3
/// automorphisms of `C9 x C3`, each run through the pipeline, plus the
/// explicit map wherever it extends to an automorphism.
pub fn cmd_paper_example(timings: bool) -> Result<PaperExampleReport, Error> {
    let actions = order_three_actions()?;
    let mut realizations = actions
        .par_iter()
        .map(|&a| realize(a))
        .collect::<Result<Vec<_>, _>>()?;
    if !timings {
        realizations
            .iter_mut()
            .for_each(|r| r.report.timings_ms.clear());
    }
    if realizations.is_empty() {
        return Err(Error::Internal(
            "no realization of the example shape".into(),
        ));
    }
    let passed = realizations.iter().all(|r| {
        r.report.order == PAPER_ORDER
            && r.report.prime == Some(3)
            && r.report.passed()
            && r.explicit_alpha.is_none_or(|e| e.all())
    });
    Ok(PaperExampleReport {
        order: PAPER_ORDER,
        expected_center_order: PAPER_CENTER_ORDER,
        realizable_explicit: realizations
            .iter()
            .filter(|r| r.explicit_alpha.is_some())
            .count(),
        realizations,
        unchecked_automorphism_count: PAPER_AUT_COUNT,
        passed,
    })
}

/// Plain-text rendering of a theorem report.
pub fn render_report(r: &TheoremReport) -> String {
    let mut out = format!("{} (order {}", r.group, r.order);
    if let Some(p) = r.prime {
        out += &format!(", p = {p}");
    }
    out += ")\n";
    if !r.applicable {
        out += "  purely non-abelian: no non-trivial abelian direct factor\n";
        return out;
    }
    if let Some(d) = &r.decomposition {
        out += &format!(
            "  H = <{}> (order {}), K = <{}> (order {})\n",
            d.h_generators.join(", "),
            d.h_order,
            d.k_generators.join(", "),
            d.k_order
        );
    }
    if let Some(a) = &r.alpha {
        out += &format!(
            "  M = <{}> (order {}), h = {}, g = {}\n",
            a.m_generators.join(", "),
            a.m_order,
            a.h,
            a.g
        );
        for e in &a.images {
            out += &format!("  alpha({}) = {}\n", e.element, e.image);
        }
        out += &format!("  order {}, {} fixed points\n", a.order, a.fixed_points);
    }
    if let Some(c) = &r.checks {
        for (name, ok) in c.named() {
            out += &format!("  {name:<16} {}\n", if ok { "yes" } else { "NO" });
        }
    }
    if let Some(o) = &r.oracle {
        out += &format!(
            "  oracle: cross-check {}, {} homs to Z, {} central, {} inner\n",
            if o.cross_check { "passed" } else { "FAILED" },
            o.homs_to_center,
            o.central_automorphisms,
            o.inner_automorphisms
        );
    }
    for (k, v) in &r.timings_ms {
        out += &format!("  {k}: {v} ms\n");
    }
    out
}

pub fn render_catalogue(run: &CatalogueRun) -> String {
    let mut out = format!(
        "{:<14} {:>6} {:>2} {:>6} {:>6} {:<8} {:<8}\n",
        "group", "order", "p", "|H|", "|K|", "verdict", "oracle"
    );
    for row in &run.rows {
        let r = &row.report;
        let (h, k) = r
            .decomposition
            .as_ref()
            .map_or(("-".to_string(), "-".to_string()), |d| {
                (d.h_order.to_string(), d.k_order.to_string())
            });
        let verdict = match exit_code(r) {
            EXIT_OK => "pass",
            EXIT_NOT_APPLICABLE => "n/a",
            _ => "FAIL",
        };
        let oracle = r
            .oracle
            .map_or("-", |o| if o.cross_check { "pass" } else { "FAIL" });
        let mark = if row.matches_expected {
            ""
        } else {
            "  (unexpected)"
        };
        out += &format!(
            "{:<14} {:>6} {:>2} {:>6} {:>6} {:<8} {:<8}{mark}\n",
            r.group,
            r.order,
            r.prime.map_or("-".to_string(), |p| p.to_string()),
            h,
            k,
            verdict,
            oracle
        );
    }
    out
}

pub fn render_paper_example(rep: &PaperExampleReport) -> String {
    let mut out = format!(
        "{} realizations of order {}, explicit map realizable in {}\n",
        rep.realizations.len(),
        rep.order,
        rep.realizable_explicit
    );
    for r in &rep.realizations {
        let action: Vec<String> = r
            .action
            .iter()
            .map(|e| format!("{} -> {}", e.element, e.image))
            .collect();
        out += &format!(
            "  y: {:<28} pipeline {}  |Z| = {}{}  explicit {}\n",
            action.join(", "),
            if r.report.passed() { "pass" } else { "FAIL" },
            r.center_order,
            if r.center_matches {
                ""
            } else {
                " (expected 243)"
            },
            match r.explicit_alpha {
                None => "unrealizable",
                Some(e) if e.all() => "pass",
                Some(_) => "FAIL",
            }
        );
    }
    out += &format!(
        "  automorphism count {} not checked\n",
        rep.unchecked_automorphism_count
    );
    out
}
