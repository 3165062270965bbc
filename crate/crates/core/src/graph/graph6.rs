//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix in column order, six bits per printable byte.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
const SMALL_LIMIT: usize = 62;
const MEDIUM_LIMIT: usize = 258_047;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn push_size(out: &mut String, n: usize) {
    if n <= SMALL_LIMIT {
        out.push((n as u8 + BIAS) as char);
    } else if n <= MEDIUM_LIMIT {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + BIAS) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + BIAS) as char);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + BIAS) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + BIAS) as char);
    }
    out
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are tolerated; error offsets index into the original text.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let base = if text.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let body = text[base..].trim_end().as_bytes();
    if body.is_empty() {
        return Err(err(base, "empty input"));
    }
    for (i, &c) in body.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(err(base + i, format!("byte {c:#04x} outside 63..=126")));
        }
    }
    let values = |from: usize, count: usize| -> Result<usize> {
        if body.len() < from + count {
            return Err(err(base + body.len(), "truncated size prefix"));
        }
        Ok(body[from..from + count]
            .iter()
            .fold(0usize, |acc, &c| (acc << 6) | (c - BIAS) as usize))
    };
    let (n, start) = if body[0] != b'~' {
        ((body[0] - BIAS) as usize, 1)
    } else if body.len() > 1 && body[1] == b'~' {
        let n = values(2, 6)?;
        if n <= MEDIUM_LIMIT {
            return Err(err(base, format!("8-byte size prefix used for order {n}")));
        }
        (n, 8)
    } else {
        let n = values(1, 3)?;
        if n <= SMALL_LIMIT {
            return Err(err(base, format!("4-byte size prefix used for order {n}")));
        }
        (n, 4)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[start..];
    if data.len() != expected {
        return Err(err(
            base + start + data.len().min(expected),
            format!("expected {expected} data bytes for order {n}, found {}", data.len()),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.insert_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[expected - 1] - BIAS;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(base + start + expected - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Parses a multi-line graph6 stream; blank lines are skipped and the header
/// is tolerated on the first line. Errors carry the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let l = if i == 0 { l } else { l.trim_start() };
            parse_graph6(l).map_err(|e| Error::Source {
                line: i + 1,
                reason: e.to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_and_tiny_graphs() {
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(to_graph6(&Graph::complete(3)), "Bw");
        let two = parse_graph6("A?").unwrap();
        assert_eq!((two.order(), two.edge_count()), (2, 0));
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn header_and_whitespace() {
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn reports_offsets() {
        match parse_graph6("B ") {
            // trailing space is trimmed, leaving a missing data byte
            Err(Error::Graph6 { offset: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_graph6("B\u{7f}") {
            Err(Error::Graph6 { offset: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        // K3 with the first padding bit set: 111100
        match parse_graph6("B{") {
            Err(Error::Graph6 { offset: 1, reason }) => assert!(reason.contains("padding")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_graph6("Bww"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6("~??"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6("~???"), Err(Error::Graph6 { offset: 0, .. })));
    }

    #[test]
    fn medium_size_prefix_round_trip() {
        let g = Graph::path(70);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn multi_line_stream() {
        let gs = parse_graph6_lines(">>graph6<<Bw\n\nA?\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert!(matches!(
            parse_graph6_lines("Bw\nB!\n"),
            Err(Error::Source { line: 2, .. })
        ));
    }
}
