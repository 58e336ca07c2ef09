#![no_main]

use libfuzzer_sys::fuzz_target;
use pgroup::spec::parse_cycles;

fuzz_target!(|input: (u8, &str)| {
    let degree = input.0 as usize;
    if let Ok(perm) = parse_cycles(degree, input.1) {
        assert_eq!(perm.len(), degree);
        let mut seen = vec![false; degree];
        for &p in &perm {
            assert!(!seen[p as usize]);
            seen[p as usize] = true;
        }
    }
});
