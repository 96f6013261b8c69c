#![no_main]
use dimkit::io::{parse_realizer, write_realizer};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_realizer(text) {
        // the element count is lost when the realizer is empty
        let n = r.0.first().map_or(0, |e| e.0.len());
        assert_eq!(parse_realizer(&write_realizer(n, &r)).unwrap(), r);
    }
});
