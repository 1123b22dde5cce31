//! graph6 short form: one size byte `n + 63` followed by the upper triangle
//! of the adjacency matrix, column by column, packed six bits per byte.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (start, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    let first = *body.first().ok_or_else(|| err(start, "empty input"))?;
    if first == b'~' {
        return Err(err(
            start,
            format!("multi-byte size field (more than {MAX_VERTICES} vertices) is not supported"),
        ));
    }
    if !(63..=126).contains(&first) {
        return Err(err(start, format!("size byte {first:#04x} out of printable range")));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let payload = &body[1..];
    for (i, &b) in payload.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(start + 1 + i, format!("byte {b:#04x} out of printable range")));
        }
    }
    if payload.len() < needed {
        return Err(err(
            start + 1 + payload.len(),
            format!("payload too short: {n} vertices need {needed} bytes"),
        ));
    }
    if payload.len() > needed {
        return Err(err(start + 1 + needed, "trailing garbage after graph"));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let last = payload[needed - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(start + needed, "nonzero padding bits"));
        }
    }
    Graph::new(n, edges)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            limit: MAX_VERTICES,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut payload = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                payload[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(payload.len() + 1);
    out.push((n as u8 + 63) as char);
    out.extend(payload.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyKind};

    #[test]
    fn smallest_cases() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.edges()), (2, &[(0, 1)][..]));
        assert_eq!(to_graph6(&k2).unwrap(), "A_");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
    }

    #[test]
    fn decodes_hand_worked_example() {
        // 'D' -> n = 5; "?{" -> bits 000000 111100, i.e. the pairs
        // (0,4), (1,4), (2,4), (3,4): a star centered at vertex 4.
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), &[(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(to_graph6(&g).unwrap(), "D?{");
    }

    #[test]
    fn triangle_is_bw() {
        let k3 = family(FamilyKind::Complete, &[3]).unwrap();
        assert_eq!(to_graph6(&k3).unwrap(), "Bw");
        assert_eq!(parse_graph6("Bw").unwrap(), k3);
    }

    #[test]
    fn c5_line() {
        let c5 = family(FamilyKind::Cycle, &[5]).unwrap();
        // Pairs in column order: 101001 | 1001 + two zero pad bits.
        let line = to_graph6(&c5).unwrap();
        assert_eq!(line, "Dhc");
        assert_eq!(parse_graph6(&line).unwrap(), c5);
    }

    #[test]
    fn header_is_optional() {
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap().q(), 1);
    }

    #[test]
    fn malformed_inputs_name_offsets() {
        match parse_graph6("Bww") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected trailing garbage error, got {other:?}"),
        }
        match parse_graph6("C") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected short payload error, got {other:?}"),
        }
        assert!(matches!(parse_graph6("B\u{7f}"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("Bx").is_err());
    }
}
