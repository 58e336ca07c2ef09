//! The checked-in fuzz seeds are meaningful inputs, not parse failures.

use std::fs;
use std::path::PathBuf;

use pgroup::spec::{build_group_capped, eval_word, parse_cycles, parse_word};
use pgroup::{build_group, GroupSpec, SpecFile, TheoremReport};

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<(String, Vec<u8>)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                fs::read(e.path()).unwrap(),
            )
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "{target} has no seeds");
    out
}

#[test]
fn spec_seeds_build() {
    for (name, bytes) in seeds("group_spec_json") {
        let spec = SpecFile::from_json(std::str::from_utf8(&bytes).unwrap()).unwrap();
        let g = build_group_capped(&spec.construct, 256).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(g.is_associative(), "{name}");
    }
}

#[test]
fn permutation_seeds_parse() {
    for (name, bytes) in seeds("permutation_cycles") {
        let degree = bytes[0] as usize;
        let perm = parse_cycles(degree, std::str::from_utf8(&bytes[1..]).unwrap())
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(perm.len(), degree);
    }
}

#[test]
fn word_seeds_evaluate() {
    let g = build_group(&GroupSpec::builtin("C2xD4")).unwrap();
    for (name, bytes) in seeds("word_parse") {
        let word = parse_word(std::str::from_utf8(&bytes).unwrap())
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(eval_word(&g, &word).unwrap() < g.order());
    }
}

#[test]
fn report_seeds_round_trip() {
    for (name, bytes) in seeds("report_json") {
        let text = std::str::from_utf8(&bytes).unwrap();
        let report = TheoremReport::from_json(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(report.to_json() + "\n", text, "{name}");
    }
}
