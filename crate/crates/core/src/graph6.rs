//! graph6 text encoding.
//!
//! Header: one byte `n + 63` for `n <= 62`, otherwise `~` followed by three
//! bytes holding `n` in 18 bits. Body: the upper triangle read column by
//! column (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte,
//! most significant first, each byte offset by 63.

use crate::error::GraphError;
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let bad = |msg: &str| GraphError::Graph6(format!("{msg} in `{text}`"));
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(&format!("byte {b} outside 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(bad("unsupported or truncated long header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    };
    if n > MAX_ORDER {
        return Err(GraphError::OrderTooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(bad(&format!(
            "expected {expected} data bytes for order {n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(bad("nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Decodes one graph per non-empty line.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>, GraphError> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| decode(l.trim()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_bw() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(encode(&k3), "Bw");
        assert_eq!(decode("Bw").unwrap(), k3);
    }

    #[test]
    fn single_vertex_is_header_only() {
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(decode("@").unwrap().order(), 1);
        assert_eq!(encode(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn known_five_vertex_string() {
        // 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn path_round_trip() {
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(decode(&encode(&p5)).unwrap(), p5);
    }

    #[test]
    fn long_header_round_trip() {
        let e: Vec<_> = (0..63).map(|i| (i, (i + 1) % 64)).collect();
        let g = Graph::from_edges(64, &e).unwrap();
        let s = encode(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert!(decode("").is_err());
        assert!(decode("B").is_err());
        assert!(decode("Bww").is_err());
        assert!(decode("B\x20").is_err());
        // padding bits must be zero: "Bx" sets a pad bit for n = 3
        assert!(decode("Bx").is_err());
        assert_eq!(decode(">>graph6<<Bw").unwrap().size(), 3);
    }
}
