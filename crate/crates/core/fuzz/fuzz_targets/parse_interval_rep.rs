#![no_main]
use dimkit::io::{parse_interval_rep, write_interval_rep};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(rep) = parse_interval_rep(text) {
        let again = parse_interval_rep(&write_interval_rep(&rep)).unwrap();
        assert_eq!(again, rep);
        let _ = rep.graph();
    }
});
