//! The graph6 text format.
//!
//! Bytes are in `63..=126`. The order is one byte `63 + n` for `n <= 62`, or
//! `126` followed by three 6-bit bytes for larger orders. The upper triangle
//! follows in column-major pair order `(0,1), (0,2), (1,2), (0,3), ...`,
//! packed six bits per byte, most significant bit first, zero padded.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and trailing
/// whitespace are tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end();
    let (base, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(
            base + pos,
            format!("byte {:#04x} is outside 63..=126", body[pos]),
        ));
    }
    let Some(&first) = body.first() else {
        return Err(err(base, "empty input"));
    };
    let (n, mut pos) = if first < 126 {
        ((first - 63) as usize, 1)
    } else {
        if body.get(1) == Some(&126) {
            return Err(err(base + 1, "orders above 258047 are not supported"));
        }
        if body.len() < 4 {
            return Err(err(base + body.len(), "truncated order field"));
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_ORDER {
        return Err(err(base, format!("order {n} exceeds {MAX_ORDER}")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = pos + bits.div_ceil(6);
    if body.len() != expected {
        return Err(err(
            base + body.len().min(expected),
            format!(
                "expected {expected} bytes for order {n}, found {}",
                body.len()
            ),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    let mut word = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                word = body[pos] - 63;
                pos += 1;
            }
            if word >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph as graph6, without header or trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.extend([
            126,
            63 + (n >> 12) as u8,
            63 + (n >> 6 & 63) as u8,
            63 + (n & 63) as u8,
        ]);
    }
    let mut k = 0;
    let mut word = 0u8;
    for j in 1..n {
        for i in 0..j {
            word = word << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(63 + word);
                word = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(63 + (word << (6 - k % 6)));
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn decodes_small_examples() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4, Family::Complete(4).build().unwrap());
    }

    #[test]
    fn encodes_small_examples() {
        assert_eq!(write_graph6(&Family::Complete(1).build().unwrap()), "@");
        assert_eq!(write_graph6(&Family::Complete(2).build().unwrap()), "A_");
        assert_eq!(write_graph6(&Family::Complete(4).build().unwrap()), "C~");
    }

    #[test]
    fn known_nauty_strings() {
        // Petersen graph as printed by nauty's `named` utilities.
        let petersen = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!((petersen.order(), petersen.size()), (10, 15));
        assert!(petersen.degrees().iter().all(|&d| d == 3));
        // Example from the petgraph test-suite.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
    }

    #[test]
    fn header_and_whitespace_tolerated() {
        let g = parse_graph6(">>graph6<<C~\n").unwrap();
        assert_eq!(g.size(), 6);
    }

    #[test]
    fn large_order_field() {
        let g = Family::Cycle(64).build().unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let g63 = Family::Path(63).build().unwrap();
        assert_eq!(parse_graph6(&write_graph6(&g63)).unwrap(), g63);
    }

    #[test]
    fn malformed_inputs() {
        match parse_graph6("C~~") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph6("C\u{7f}") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph6(">>graph6<<C ") {
            // trailing whitespace is trimmed, so this is a short body
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 11),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_graph6("").is_err());
        // order 65
        assert!(matches!(parse_graph6("~??A"), Err(Error::Graph6 { .. })));
    }
}
