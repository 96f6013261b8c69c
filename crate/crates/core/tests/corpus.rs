//! Replays the checked-in fuzz seeds with the same round-trip checks the
//! fuzz targets make.

use std::fs;
use std::path::Path;

use dimkit::io;

fn seeds(target: &str) -> Vec<String> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out.iter().map(|p| fs::read_to_string(p).unwrap()).collect()
}

#[test]
fn graph_seeds() {
    let mut accepted = 0;
    for s in seeds("parse_graph") {
        if let Ok(g) = io::parse_graph(&s) {
            assert_eq!(io::parse_graph(&io::write_graph(&g)).unwrap(), g);
            accepted += 1;
        }
    }
    assert!(accepted > 0);
}

#[test]
fn poset_seeds() {
    for s in seeds("parse_poset") {
        if let Ok(p) = io::parse_poset(&s) {
            assert_eq!(io::parse_poset(&io::write_poset(&p)).unwrap(), p);
        }
    }
}

#[test]
fn witness_seeds() {
    for s in seeds("parse_witness") {
        if let Ok(gs) = io::parse_witness(&s) {
            assert_eq!(io::parse_witness(&io::write_witness(&gs)).unwrap(), gs);
        }
    }
}

#[test]
fn realizer_seeds() {
    for s in seeds("parse_realizer") {
        if let Ok(r) = io::parse_realizer(&s) {
            let n = r.0.first().map_or(0, |e| e.0.len());
            assert_eq!(io::parse_realizer(&io::write_realizer(n, &r)).unwrap(), r);
        }
    }
}

#[test]
fn interval_seeds() {
    for s in seeds("parse_interval_rep") {
        if let Ok(rep) = io::parse_interval_rep(&s) {
            assert_eq!(io::parse_interval_rep(&io::write_interval_rep(&rep)).unwrap(), rep);
        }
    }
}

#[test]
fn vertex_map_seeds() {
    for s in seeds("parse_vertex_map") {
        if let Ok(m) = io::parse_vertex_map(&s) {
            assert_eq!(io::parse_vertex_map(&io::write_vertex_map(&m)).unwrap(), m);
        }
    }
}
