#![no_main]
use dimkit::io::{parse_vertex_map, write_vertex_map};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = parse_vertex_map(text) {
        assert_eq!(parse_vertex_map(&write_vertex_map(&m)).unwrap(), m);
    }
});
