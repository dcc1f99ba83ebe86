//! Edge-list text format and graph6 reading.
//!
//! Edge list: a header line `n m`, then exactly `m` lines `u v` (0-indexed,
//! whitespace separated). Blank lines and lines starting with `#` are skipped.
//! [`write_graph`] emits the canonical form: edges with `u < v` in
//! lexicographic order, one per line, `\n` terminated.

use super::Graph;
use crate::error::{Error, Result};
use std::fmt::Write as _;

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
    let [n, m] = two_ints(hline, header, "header must be `n m`")?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let [u, v] = two_ints(line, l, "edge line must be `u v`")?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse { line: hline, msg: format!("header announces {m} edges, found {}", edges.len()) });
    }
    let g = Graph::from_edges(n, &edges)?;
    if g.m() != m {
        return Err(Error::Parse { line: hline, msg: format!("{} duplicate edge line(s)", m - g.m()) });
    }
    Ok(g)
}

fn two_ints(line: usize, l: &str, msg: &str) -> Result<[usize; 2]> {
    let toks: Vec<&str> = l.split_whitespace().collect();
    let err = || Error::Parse { line, msg: msg.to_string() };
    if toks.len() != 2 {
        return Err(err());
    }
    Ok([toks[0].parse().map_err(|_| err())?, toks[1].parse().map_err(|_| err())?])
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Decodes one graph6 string (optional `>>graph6<<` header tolerated).
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes: Vec<u8> = s
        .bytes()
        .map(|b| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(Error::Graph6(format!("byte {b} outside the printable range 63..=126")))
            }
        })
        .collect::<Result<_>>()?;
    if bytes.is_empty() {
        return Err(Error::Graph6("empty string".into()));
    }
    let (n, header) = if bytes[0] != 63 {
        (bytes[0] as usize, 1)
    } else if bytes.len() >= 4 && bytes[1] != 63 {
        (bytes[1..4].iter().fold(0usize, |a, &b| (a << 6) | b as usize), 4)
    } else if bytes.len() >= 8 {
        (bytes[2..8].iter().fold(0usize, |a, &b| (a << 6) | b as usize), 8)
    } else {
        return Err(Error::Graph6("truncated size header".into()));
    };
    let bits = n * n.saturating_sub(1) / 2;
    let want = header + bits.div_ceil(6);
    if bytes.len() != want {
        return Err(Error::Graph6(format!("expected {want} bytes for n = {n}, got {}", bytes.len())));
    }
    let body = &bytes[header..];
    let mut edges = Vec::new();
    let mut pos = 0;
    // upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
    for v in 1..n {
        for u in 0..v {
            if body[pos / 6] >> (5 - pos % 6) & 1 == 1 {
                edges.push((u, v));
            }
            pos += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8);
    } else if n < 258_048 {
        out.push(63);
        out.extend([(n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63]);
    } else {
        out.extend([63, 63]);
        out.extend((0..6).rev().map(|i| (n >> (6 * i)) as u8 & 63));
    }
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            k += 1;
            if k == 6 {
                out.push(acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(acc << (6 - k));
    }
    out.into_iter().map(|b| (b + 63) as char).collect()
}

/// Edge list when the first meaningful line has two tokens, graph6 otherwise.
pub fn parse_auto(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.split_whitespace().count() == 1 && !l.chars().all(|c| c.is_ascii_digit()) => parse_graph6(l),
        _ => parse_graph(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_basic() {
        let g = parse_graph("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert_eq!(write_graph(&g), "3 2\n0 1\n1 2\n");
        let g = parse_graph("# comment\n3 2\n\n2 1\n1 0\n").unwrap();
        assert_eq!(write_graph(&g), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("3\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("3 1\n0 x\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("3 2\n0 1\n1 0\n"), Err(Error::Parse { .. })));
        assert_eq!(parse_graph("2 1\n0 2\n"), Err(Error::VertexOutOfRange { vertex: 2, n: 2 }));
    }

    #[test]
    fn graph6_known_strings() {
        // "D?{": n = 5, bits 000000 111100 -> the star centred at 4
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        // K4 = "C~", "Cr" is a 4-cycle
        assert_eq!(parse_graph6("C~").unwrap().m(), 6);
        assert_eq!(write_graph6(&parse_graph6("Cr").unwrap()), "Cr");
        assert!(parse_graph6("D?").is_err());
        assert!(parse_graph6("D?{{").is_err());
    }

    #[test]
    fn auto_detection() {
        assert_eq!(parse_auto("C~").unwrap().m(), 6);
        assert_eq!(parse_auto("4 0\n").unwrap().n(), 4);
    }
}
