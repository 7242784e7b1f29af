#![no_main]

use graph_dispersion::{clustering, graph6};
use libfuzzer_sys::fuzz_target;

// The line-oriented stream path: every line is decoded independently and
// accepted graphs feed the exact-arithmetic statistics without panicking.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Ok(g) = graph6::decode(line) {
            let report = clustering::clustering_report(&g);
            assert_eq!(report.local.len(), g.vertex_count());
        }
    }
});
