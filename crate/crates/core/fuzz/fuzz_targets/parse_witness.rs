#![no_main]
use dimkit::io::{parse_witness, write_witness};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(gs) = parse_witness(text) {
        assert_eq!(parse_witness(&write_witness(&gs)).unwrap(), gs);
    }
});
