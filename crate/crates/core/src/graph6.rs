//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column order, six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const BIAS: u8 = 63;

fn err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Encode a graph. The output has no trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(2 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|b| b as u8 + BIAS));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decode one graph6 string. Surrounding whitespace is ignored; an optional
/// `>>graph6<<` prefix is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(err("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(format!("byte {b:#04x} outside the graph6 range")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 {
            return Err(err("truncated size header"));
        }
        if bytes[1] == 126 {
            return Err(err(format!("order above {MAX_ORDER} (8-byte header)")));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        if n <= 62 {
            return Err(err(format!("non-minimal size header for order {n}")));
        }
        (n, &bytes[4..])
    };
    if n > MAX_ORDER {
        return Err(Error::OrderOverflow {
            order: n,
            cap: MAX_ORDER,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    if body.len() != want {
        return Err(err(format!(
            "expected {want} data bytes for order {n}, found {}",
            body.len()
        )));
    }
    let spare = want * 6 - bits;
    if spare > 0 && (body[want - 1] - BIAS) & ((1u8 << spare) - 1) != 0 {
        return Err(err("nonzero padding bits"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte & (0x20 >> (k % 6)) != 0 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_known_strings() {
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        let p3 = parse_graph6("Bg").unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(to_graph6(&k3), "Bw");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
    }

    #[test]
    fn long_header_round_trip() {
        for n in [62, 63, 64] {
            let mut g = Graph::empty(n).unwrap();
            g.add_edge(0, n - 1);
            g.add_edge(3, 7);
            let s = to_graph6(&g);
            assert_eq!(s.as_bytes()[0] == 126, n > 62);
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn rejects_malformed() {
        // K3 with one spare padding bit set.
        assert!(matches!(parse_graph6("Bx"), Err(Error::Graph6(_))));
        assert!(parse_graph6("B").is_err());
        assert!(parse_graph6("Bww").is_err());
        assert!(parse_graph6("B w").is_err());
        assert!(parse_graph6("").is_err());
        assert!(matches!(
            parse_graph6("~?@@"),
            Err(Error::OrderOverflow { order: 65, .. })
        ));
        assert!(parse_graph6("~??~").is_err());
    }
}
