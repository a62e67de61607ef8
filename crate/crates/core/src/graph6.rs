//! graph6 codec for graphs of order at most 62 (single-byte order header).
//!
//! The upper triangle of the adjacency matrix is read column by column
//! (`(0,1), (0,2), (1,2), (0,3), ..`), packed big-endian into 6-bit groups,
//! and each group is offset by 63.

use crate::error::ParseError;
use crate::graph::{Graph, VertexSet, MAX_ORDER};

pub const HEADER: &str = ">>graph6<<";

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decode one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let (skip, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, text),
    };
    let bytes = body.trim_end().as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(ParseError::Empty);
    };
    if !(63..=126).contains(&first) {
        return Err(ParseError::BadByte { offset: skip, byte: first });
    }
    let n = (first - 63) as usize;
    if n > MAX_ORDER {
        return Err(ParseError::OrderTooLarge { offset: skip, n });
    }
    let data = &bytes[1..];
    if let Some(pos) = data.iter().position(|b| !(63..=126).contains(b)) {
        return Err(ParseError::BadByte {
            offset: skip + 1 + pos,
            byte: data[pos],
        });
    }
    let expected = data_len(n);
    if data.len() != expected {
        return Err(ParseError::BadLength {
            offset: skip + 1,
            expected,
            found: data.len(),
        });
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = data[k / 6] - 63;
            if (group >> (5 - k % 6)) & 1 == 1 {
                adj[i] = adj[i].with(j);
                adj[j] = adj[j].with(i);
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = data[expected - 1] - 63;
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(ParseError::NonZeroPadding {
                offset: skip + expected,
            });
        }
    }
    Ok(Graph::from_adjacency(adj).expect("decoded adjacency is symmetric"))
}

/// Encode as a graph6 line without header or newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(63 + n as u8);
    let mut group = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(63 + group);
                group = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push(63 + (group << (6 - k % 6)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&encode_graph6(self))
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_graph6(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Hand decoded: n byte 'C' = 67 -> 4; '~' = 126 -> 63 = 0b111111, all six
    // upper-triangle pairs present.
    #[test]
    fn k4_is_c_tilde() {
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(encode_graph6(&Graph::complete(4)), "C~");
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), Graph::complete(4));
    }

    #[test]
    fn single_vertex() {
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        assert_eq!(encode_graph6(&Graph::empty(0)), "?");
    }

    // Reference strings as produced by networkx.to_graph6_bytes for the
    // same labelings.
    #[test]
    fn reference_strings() {
        assert_eq!(encode_graph6(&Graph::path(3)), "Bg");
        assert_eq!(encode_graph6(&Graph::cycle(5)), "Dhc");
        assert_eq!(encode_graph6(&Graph::petersen()), "I?LRCecq?");
    }

    #[test]
    fn serde_uses_graph6() {
        let json = serde_json::to_string(&Graph::complete(4)).unwrap();
        assert_eq!(json, "\"C~\"");
        assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), Graph::complete(4));
        assert!(serde_json::from_str::<Graph>("\"Bh\"").is_err());
    }

    #[test]
    fn errors_name_offsets() {
        assert_eq!(parse_graph6(""), Err(ParseError::Empty));
        assert_eq!(
            parse_graph6("C}~"),
            Err(ParseError::BadLength { offset: 1, expected: 1, found: 2 })
        );
        assert_eq!(
            parse_graph6("C!"),
            Err(ParseError::BadByte { offset: 1, byte: b'!' })
        );
        assert_eq!(
            parse_graph6("~??"),
            Err(ParseError::OrderTooLarge { offset: 0, n: 63 })
        );
        assert_eq!(
            parse_graph6("1"),
            Err(ParseError::BadByte { offset: 0, byte: b'1' })
        );
        // 'B' = 3 vertices, 3 bits used, low 3 padding bits must be zero
        assert_eq!(
            parse_graph6("Bh"),
            Err(ParseError::NonZeroPadding { offset: 1 })
        );
        assert!(matches!(
            parse_graph6(">>graph6<<C!"),
            Err(ParseError::BadByte { offset: 11, .. })
        ));
    }
}
