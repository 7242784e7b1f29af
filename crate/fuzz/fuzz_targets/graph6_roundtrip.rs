#![no_main]

use graph_dispersion::{graph6, Graph};
use libfuzzer_sys::fuzz_target;

// Encode-then-decode is the identity on every graph the encoder accepts.
// The graph is built from the raw bytes: first byte picks the order,
// the rest feed the upper-triangle edge bits.
fuzz_target!(|data: &[u8]| {
    let Some((&first, bits)) = data.split_first() else {
        return;
    };
    let n = (first as usize % 62) + 1;
    let mut edges = Vec::new();
    let mut index = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = match bits.get(index / 8) {
                Some(b) => *b,
                None => break 'outer,
            };
            if byte >> (index % 8) & 1 == 1 {
                edges.push((i, j));
            }
            index += 1;
        }
    }
    let g = Graph::build(n, &edges).expect("in-range simple edges");
    let encoded = graph6::encode(&g).expect("n < 63");
    assert_eq!(graph6::decode(&encoded).expect("own encoding decodes"), g);
});
