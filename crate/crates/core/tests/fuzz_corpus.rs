//! Replays the checked-in fuzz corpus through the fuzz target bodies.

use std::fs;
use std::path::Path;

#[path = "../fuzz/src/core_checks.rs"]
mod core_checks;

fn replay(target: &str, body: fn(&[u8])) {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut count = 0;
    for entry in fs::read_dir(&dir).expect("corpus directory exists") {
        let path = entry.unwrap().path();
        body(&fs::read(&path).unwrap());
        count += 1;
    }
    assert!(count > 0, "empty corpus for {target}");
}

#[test]
fn scalar_corpus() {
    replay("scalar", core_checks::scalar);
}

#[test]
fn uh_element_corpus() {
    replay("uh_element", core_checks::uh_element);
}

#[test]
fn labels_corpus() {
    replay("labels", core_checks::labels);
}

#[test]
fn json_decoders_corpus() {
    replay("json_decoders", core_checks::json_decoders);
}
