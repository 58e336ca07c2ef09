#![no_main]

use libfuzzer_sys::fuzz_target;
use pgroup::TheoremReport;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(report) = TheoremReport::from_json(text) else {
        return;
    };
    let again = report.to_json();
    assert_eq!(TheoremReport::from_json(&again).unwrap(), report);
    assert_eq!(TheoremReport::from_json(&again).unwrap().to_json(), again);
});
