use std::process::{Command, Output};

use pgroup::TheoremReport;
use pgroup_cli::{cmd_construct, load, resolve_element, CatalogueRun, OverrideLabels};

fn pgroup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pgroup"))
        .args(args)
        .output()
        .unwrap()
}

fn temp_file(name: &str, content: &str) -> String {
    let dir = std::env::temp_dir().join(format!("pgroup-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn check_exit_codes() {
    assert_eq!(pgroup(&["check", "builtin:C2xD4"]).status.code(), Some(0));
    assert_eq!(pgroup(&["check", "builtin:Q8"]).status.code(), Some(3));
    assert_eq!(pgroup(&["check", "builtin:nope"]).status.code(), Some(2));
    assert_eq!(pgroup(&["check"]).status.code(), Some(2));
    let bad = temp_file("bad.json", "{\"construct\": {\"kind\": \"cyclic\"}}");
    assert_eq!(pgroup(&["check", &bad]).status.code(), Some(2));
    let missing = temp_file("missing.json", "");
    assert_eq!(
        pgroup(&["check", &format!("{missing}.absent")])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn non_p_groups_and_abelian_groups_are_usage_errors() {
    let s3 = temp_file(
        "s3.json",
        r#"{"construct": {"kind": "permutation", "degree": 3, "generators": ["(1,2,3)", "(1,2)"]}}"#,
    );
    let out = pgroup(&["check", &s3]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a p-group"));
    let c8 = temp_file(
        "c8.json",
        r#"{"construct": {"kind": "cyclic", "order": 8}}"#,
    );
    assert_eq!(pgroup(&["check", &c8]).status.code(), Some(2));
}

#[test]
fn spec_file_matches_builtin() {
    let spec = temp_file(
        "c2d4.json",
        r#"{"construct": {"kind": "direct_product", "factors": [
            {"kind": "cyclic", "order": 2},
            {"kind": "semidirect", "base": {"kind": "cyclic", "order": 4},
             "actor": {"kind": "cyclic", "order": 2}, "action": [["g0^-1"]]}]}}"#,
    );
    let from_file = pgroup(&["check", &spec]);
    assert_eq!(from_file.status.code(), Some(0));
    let from_builtin = pgroup(&["check", "builtin:C2xD4"]);
    let a = TheoremReport::from_json(&String::from_utf8(from_file.stdout).unwrap()).unwrap();
    let b = TheoremReport::from_json(&String::from_utf8(from_builtin.stdout).unwrap()).unwrap();
    assert_eq!(a.group, "c2d4");
    assert_eq!(
        (a.decomposition, a.alpha, a.checks),
        (b.decomposition, b.alpha, b.checks)
    );
}

#[test]
fn report_round_trips_byte_for_byte() {
    let out = temp_file("report.json", "");
    assert_eq!(
        pgroup(&["oracle", "builtin:C3xHeis27", "--out", &out])
            .status
            .code(),
        Some(0)
    );
    let text = std::fs::read_to_string(&out).unwrap();
    let report = TheoremReport::from_json(&text).unwrap();
    assert!(report.oracle.unwrap().cross_check);
    assert_eq!(report.to_json() + "\n", text);
    let keys: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("  \""))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    assert_eq!(
        keys,
        [
            "group",
            "order",
            "prime",
            "applicable",
            "decomposition",
            "alpha",
            "checks",
            "oracle",
            "timings_ms"
        ]
    );
}

#[test]
fn repeated_checks_are_identical() {
    let a = pgroup(&["check", "builtin:C9xHeis27"]).stdout;
    let b = pgroup(&["check", "builtin:C9xHeis27"]).stdout;
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn timings_only_on_request() {
    let plain = TheoremReport::from_json(
        &String::from_utf8(pgroup(&["check", "builtin:C2xD4"]).stdout).unwrap(),
    )
    .unwrap();
    assert!(plain.timings_ms.is_empty());
    let timed = TheoremReport::from_json(
        &String::from_utf8(pgroup(&["check", "builtin:C2xD4", "--timings"]).stdout).unwrap(),
    )
    .unwrap();
    assert_eq!(
        timed.timings_ms.keys().collect::<Vec<_>>(),
        ["construct", "decompose", "verify"]
    );
}

#[test]
fn construct_c2xd4_moves_a_by_r_squared() {
    let loaded = load("builtin:C2xD4").unwrap();
    let report = cmd_construct(&loaded, &OverrideLabels::default(), false).unwrap();
    assert!(report.checks.is_none());
    let g = &loaded.group;
    let a = resolve_element(&loaded, "a").unwrap();
    let ar2 = resolve_element(&loaded, "a*r^2").unwrap();
    let alpha = report.alpha.unwrap();
    let image_of = |x: usize| {
        alpha
            .images
            .iter()
            .find(|e| e.element == g.label(x))
            .unwrap()
            .image
            .clone()
    };
    assert_eq!(image_of(a), g.label(ar2));
    for s in ["r", "s"] {
        let x = resolve_element(&loaded, s).unwrap();
        assert_eq!(image_of(x), g.label(x));
    }
}

#[test]
fn construct_overrides() {
    let out = pgroup(&["construct", "builtin:C2xD4", "--g", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr)
        .contains("g must be a non-identity element of Ω₁(Z(K))"));

    let out = pgroup(&[
        "construct",
        "builtin:C4xD4",
        "--h",
        "a^3",
        "--M",
        "a^2",
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = TheoremReport::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(report.alpha.unwrap().m_order, 2);

    let out = pgroup(&["construct", "builtin:C4xD4", "--M", "a"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("M must be a maximal subgroup of H"));
    assert_eq!(
        pgroup(&["construct", "builtin:C4xD4", "--h", "zz"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn construct_order_2187_with_verify() {
    let out = pgroup(&["construct", "builtin:paper3_7", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let report = TheoremReport::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(report.prime, Some(3));
    assert!(report.passed());
}

#[test]
fn oracle_respects_cap() {
    assert_eq!(
        pgroup(&["oracle", "builtin:paper3_7"]).status.code(),
        Some(2)
    );
    assert_eq!(pgroup(&["oracle", "builtin:D4"]).status.code(), Some(3));
}

#[test]
fn catalogue_bounds() {
    let out = pgroup(&["catalogue", "--max-order", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let run: CatalogueRun = serde_json::from_slice(&out.stdout).unwrap();
    assert!(run.rows.is_empty());

    let out = pgroup(&["catalogue", "--max-order", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let run: CatalogueRun = serde_json::from_slice(&out.stdout).unwrap();
    let names: Vec<&str> = run.rows.iter().map(|r| r.report.group.as_str()).collect();
    for name in [
        "C2xD4",
        "Q8",
        "D4",
        "heisenberg27",
        "modular27",
        "C2xQ8",
        "C4xD4",
    ] {
        assert!(names.contains(&name), "{name}");
    }
    assert!(run.rows.iter().all(|r| r.matches_expected));
    assert!(run
        .rows
        .iter()
        .filter(|r| r.report.applicable)
        .all(|r| r.report.oracle.is_some_and(|o| o.cross_check)));

    let human = pgroup(&["catalogue", "--max-order", "16", "--human"]);
    let text = String::from_utf8(human.stdout).unwrap();
    assert!(text
        .lines()
        .any(|l| l.starts_with("C2xD4") && l.contains("pass")));
}

#[test]
fn json_and_human_conflict() {
    assert_eq!(
        pgroup(&["check", "builtin:D4", "--json", "--human"])
            .status
            .code(),
        Some(2)
    );
}
