#![no_main]

use libfuzzer_sys::fuzz_target;
use pgroup::spec::build_group_capped;
use pgroup::SpecFile;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(spec) = SpecFile::from_json(text) else {
        return;
    };
    if let Ok(g) = build_group_capped(&spec.construct, 256) {
        assert!(g.order() <= 256);
        assert!(g.is_associative());
    }
});
