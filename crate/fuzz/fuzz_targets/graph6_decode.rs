#![no_main]

use graph_dispersion::graph6;
use libfuzzer_sys::fuzz_target;

// Decoding arbitrary text must never panic, and anything accepted must be
// a canonical encoding: decoded graphs satisfy the handshake invariant and
// re-encode to the exact input.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = graph6::decode(text) {
        let degree_sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
        assert_eq!(graph6::encode(&g).unwrap(), text);
    }
});
