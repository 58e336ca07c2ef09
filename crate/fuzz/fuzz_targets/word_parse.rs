#![no_main]

use libfuzzer_sys::fuzz_target;
use pgroup::spec::{eval_word, parse_word};
use pgroup::{build_group, GroupSpec};

fuzz_target!(|text: &str| {
    let Ok(word) = parse_word(text) else { return };
    let g = build_group(&GroupSpec::builtin("C2xD4")).unwrap();
    if let Ok(x) = eval_word(&g, &word) {
        assert!(x < g.order());
    }
});
