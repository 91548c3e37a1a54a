//! The graph6 text format: a one-line ASCII encoding of a simple undirected
//! graph. A record is a size header followed by the upper triangle of the
//! adjacency matrix in column-major order, packed MSB-first into 6-bit
//! groups, each stored as `byte = 63 + value`.
//!
//! Orders `0..=62` use a single header byte; orders `63..=258047` use the
//! extended header `'~' b1 b2 b3`. Larger graphs (the 8-byte header form)
//! are out of the supported range.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count representable with the 4-byte extended header.
pub const MAX_GRAPH6_ORDER: usize = 258_047;

const OFFSET: u8 = 63;
const EXTENDED: u8 = 126; // '~'

fn byte_value(bytes: &[u8], offset: usize) -> Result<u32> {
    let b = *bytes.get(offset).ok_or_else(|| Error::Graph6 {
        offset,
        reason: "record truncated".into(),
    })?;
    if !(OFFSET..=EXTENDED).contains(&b) {
        return Err(Error::Graph6 {
            offset,
            reason: format!("byte {b} outside the printable range 63..=126"),
        });
    }
    Ok((b - OFFSET) as u32)
}

/// Parses a single graph6 record. A trailing newline is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 {
            offset: 0,
            reason: "empty input".into(),
        });
    }

    let (n, mut pos) = if bytes[0] == EXTENDED {
        if bytes.get(1) == Some(&EXTENDED) {
            return Err(Error::Graph6 {
                offset: 1,
                reason: format!("8-byte size header: order exceeds the supported maximum {MAX_GRAPH6_ORDER}"),
            });
        }
        let mut n: u32 = 0;
        for i in 1..4 {
            n = (n << 6) | byte_value(bytes, i)?;
        }
        (n as usize, 4)
    } else {
        (byte_value(bytes, 0)? as usize, 1)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    if bytes.len() != pos + body_len {
        return Err(Error::Graph6 {
            offset: bytes.len().min(pos + body_len),
            reason: format!(
                "expected {} body bytes for order {n}, found {}",
                body_len,
                bytes.len() - pos
            ),
        });
    }

    let mut edges = Vec::new();
    let mut bit_idx = 0usize;
    'outer: for col in 1..n as u32 {
        for row in 0..col {
            if bit_idx >= bits {
                break 'outer;
            }
            let byte = byte_value(bytes, pos + bit_idx / 6)?;
            if (byte >> (5 - bit_idx % 6)) & 1 == 1 {
                edges.push((row, col));
            }
            bit_idx += 1;
        }
    }

    // Padding bits beyond the triangle must be zero.
    if bits % 6 != 0 {
        let last = pos + body_len - 1;
        let byte = byte_value(bytes, last)?;
        let pad = 6 - bits % 6;
        if byte & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6 {
                offset: last,
                reason: "nonzero padding bits".into(),
            });
        }
    }
    pos += body_len;
    debug_assert_eq!(pos, bytes.len());

    Graph::from_edges(n, edges)
}

/// Encodes a graph as a graph6 record (no trailing newline).
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::Graph6Range {
            n,
            max: MAX_GRAPH6_ORDER,
        });
    }

    let mut out = Vec::new();
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else {
        out.push(EXTENDED);
        for shift in [12u32, 6, 0] {
            out.push(OFFSET + ((n >> shift) & 0x3f) as u8);
        }
    }

    let bits = n * n.saturating_sub(1) / 2;
    let body_start = out.len();
    out.resize(body_start + bits.div_ceil(6), OFFSET);
    let mut bit_idx = 0usize;
    for col in 1..n as u32 {
        for row in 0..col {
            if g.has_edge(row, col) {
                out[body_start + bit_idx / 6] += 1 << (5 - bit_idx % 6);
            }
            bit_idx += 1;
        }
    }

    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Permutation;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn k2_and_empty_pair() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.edge_count()), (2, 1));
        assert_eq!(write_graph6(&k2).unwrap(), "A_");

        let e2 = parse_graph6("A?").unwrap();
        assert_eq!((e2.n(), e2.edge_count()), (2, 0));
        assert_eq!(write_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(write_graph6(&Graph::empty(0)).unwrap(), "?");
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("\n"), Err(Error::Graph6 { offset: 0, .. })));
    }

    #[test]
    fn truncation_and_excess_are_errors() {
        // n=5 needs ceil(10/6) = 2 body bytes.
        assert!(parse_graph6("D").is_err());
        assert!(parse_graph6("Dq").is_err());
        assert!(parse_graph6("Dqc_").is_err());
    }

    #[test]
    fn nonzero_padding_rejected() {
        // n=2: one meaningful bit, five padding bits.
        let bad = String::from_utf8(vec![63 + 2, 63 + 0b000001]).unwrap();
        assert!(matches!(
            parse_graph6(&bad),
            Err(Error::Graph6 { offset: 1, .. })
        ));
    }

    #[test]
    fn out_of_range_byte_names_offset() {
        let err = parse_graph6("A\x20").unwrap_err();
        assert!(matches!(err, Error::Graph6 { offset: 1, .. }));
    }

    #[test]
    fn extended_header_roundtrip() {
        let g = families::cycle(100);
        let s = write_graph6(&g).unwrap();
        assert_eq!(s.as_bytes()[0], b'~');
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_orders_beyond_supported_range() {
        let s = "~~??????";
        assert!(matches!(
            parse_graph6(s),
            Err(Error::Graph6 { offset: 1, .. })
        ));
    }

    #[test]
    fn random_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let n = rng.random_range(1..=20);
            let g = families::random_graph(n, 0.4, &mut rng);
            let back = parse_graph6(&write_graph6(&g).unwrap()).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn trailing_newline_tolerated() {
        let g = parse_graph6("A_\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn permuted_graph_encodes_differently_but_same_size() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = families::random_graph(9, 0.5, &mut rng);
        let p = Permutation::random(9, &mut rng);
        let h = g.apply_permutation(&p).unwrap();
        assert_eq!(write_graph6(&g).unwrap().len(), write_graph6(&h).unwrap().len());
    }
}
