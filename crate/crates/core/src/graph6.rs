//! graph6 text codec for the `n < 63` subset of the format.
//!
//! Layout: one header byte `63 + n`, then the upper triangle of the
//! adjacency matrix in column-major order, packed 6 bits per byte
//! (most significant bit first), zero-padded to a byte boundary.
//! Decoding is strict: every accepted string is the canonical encoding
//! of its graph, so `encode(decode(s)) == s`.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("orders >= 63 are not supported (extended headers out of scope)")]
    UnsupportedOrder,
    #[error("zero-vertex graph is not representable")]
    ZeroVertices,
    #[error("invalid graph6 byte 0x{byte:02x} at offset {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated body: expected {expected} bytes after header, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits in final body byte")]
    NonzeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A graph6 line kept together with its decoded graph, for streams whose
/// output must echo the original text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph6Record {
    pub text: String,
    pub graph: Graph,
}

/// Decodes one line into a record carrying both representations.
pub fn decode_record(s: &str) -> Result<Graph6Record, Graph6Error> {
    Ok(Graph6Record {
        text: s.to_string(),
        graph: decode(s)?,
    })
}

const OFFSET: u8 = 63;

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decodes a canonical graph6 string with `n < 63`.
pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.as_bytes();
    let header = *bytes.first().ok_or(Graph6Error::Empty)?;
    if header == b'~' {
        return Err(Graph6Error::UnsupportedOrder);
    }
    if !(OFFSET..=125).contains(&header) {
        return Err(Graph6Error::InvalidByte {
            offset: 0,
            byte: header,
        });
    }
    let n = (header - OFFSET) as usize;
    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }
    let expected = body_len(n);
    let body = &bytes[1..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            got: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData {
            offset: 1 + expected,
        });
    }
    for (i, &b) in body.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                offset: 1 + i,
                byte: b,
            });
        }
    }
    let nbits = n * (n - 1) / 2;
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit_index / 6] - OFFSET;
            if byte >> (5 - bit_index % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
        }
    }
    // Padding bits beyond the triangle must be zero.
    for pad in nbits..expected * 6 {
        let byte = body[pad / 6] - OFFSET;
        if byte >> (5 - pad % 6) & 1 == 1 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::build(n, &edges)?)
}

/// Encodes a graph with `n < 63` as canonical graph6.
pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n >= 63 {
        return Err(Graph6Error::UnsupportedOrder);
    }
    let mut out = vec![OFFSET + n as u8];
    let mut current = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            current <<= 1;
            if g.has_edge(i, j) {
                current |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + current);
                current = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (current << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_round_trip() {
        let g = decode("A_").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(encode(&g).unwrap(), "A_");
    }

    #[test]
    fn empty_pair() {
        let g = decode("A?").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(encode(&g).unwrap(), "A?");
    }

    #[test]
    fn path_and_triangle() {
        let p3 = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let s = encode(&p3).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s, "Bg");
        assert_eq!(decode(&s).unwrap(), p3);

        let k3 = Graph::build(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(encode(&k3).unwrap(), "Bw");
    }

    #[test]
    fn single_vertex() {
        let g = Graph::build(1, &[]).unwrap();
        let s = encode(&g).unwrap();
        assert_eq!(s, "@");
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(decode("?"), Err(Graph6Error::ZeroVertices));
        assert_eq!(decode("~~~"), Err(Graph6Error::UnsupportedOrder));
        assert_eq!(
            decode("B"),
            Err(Graph6Error::Truncated {
                expected: 1,
                got: 0
            })
        );
        assert_eq!(
            decode("A_?"),
            Err(Graph6Error::TrailingData { offset: 2 })
        );
        assert_eq!(
            decode("A "),
            Err(Graph6Error::InvalidByte {
                offset: 1,
                byte: b' '
            })
        );
        // 6-bit word 100001 sets a padding bit behind K_2's single edge bit.
        assert_eq!(decode("A`"), Err(Graph6Error::NonzeroPadding));
    }

    #[test]
    fn encode_rejects_large_order() {
        let edges: Vec<(usize, usize)> = (0..62).map(|i| (i, i + 1)).collect();
        let g = Graph::build(63, &edges).unwrap();
        assert_eq!(encode(&g), Err(Graph6Error::UnsupportedOrder));
    }

    #[test]
    fn round_trip_random_graphs() {
        let mut state = 0xdeadbeefcafef00du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for n in 1..=20usize {
            for _ in 0..10 {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if next() % 3 == 0 {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::build(n, &edges).unwrap();
                let s = encode(&g).unwrap();
                assert_eq!(s.len(), 1 + (n * (n - 1) / 2).div_ceil(6));
                assert_eq!(decode(&s).unwrap(), g);
            }
        }
    }
}
