//! graph6, JSON and DOT encodings.

use std::fmt::Write as _;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::products::ProductLabeling;

fn malformed(position: usize, reason: impl Into<String>) -> Error {
    Error::MalformedGraph6 { position, reason: reason.into() }
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text.trim_end();
    let offset = if body.starts_with(">>graph6<<") { 10 } else { 0 };
    let bytes = &body.as_bytes()[offset..];
    let mut pos = 0;
    let next = |pos: &mut usize| -> Result<u64> {
        let b = *bytes.get(*pos).ok_or_else(|| malformed(offset + *pos, "unexpected end of input"))?;
        if !(63..=126).contains(&b) {
            return Err(malformed(offset + *pos, format!("byte {b} outside 63..=126")));
        }
        *pos += 1;
        Ok(u64::from(b - 63))
    };
    let first = next(&mut pos)?;
    let n = if first < 63 {
        first
    } else {
        let mut digits = 3;
        if bytes.get(1) == Some(&126) {
            pos += 1;
            digits = 6;
        }
        let mut v = 0;
        for _ in 0..digits {
            v = v << 6 | next(&mut pos)?;
        }
        v
    } as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(malformed(offset + pos, format!("expected {needed} data bytes for n = {n}, found {}", bytes.len() - pos)));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    let mut word = 0;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                word = next(&mut pos)?;
            }
            if word >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && word & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(malformed(offset + pos - 1, "nonzero padding bits"));
    }
    Graph::new(n, edges)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258048 {
        out.push(126);
        out.extend((0..3).rev().map(|t| (n >> (6 * t) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|t| (n >> (6 * t) & 63) as u8 + 63));
    }
    let mut word = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            word = word << 1 | u8::from(g.has_edge(i, j));
            k += 1;
            if k % 6 == 0 {
                out.push(word + 63);
                word = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((word << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Parses every non-empty line of a graph6 stream.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(parse_graph6).collect()
}

/// `{"n": .., "edges": [[u, v], ..]}` with edges sorted ascending.
pub fn emit_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graph serializes")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let raw: JsonGraph = serde_json::from_str(text).map_err(|e| Error::MalformedJson(e.to_string()))?;
    Graph::new(raw.n, raw.edges).map_err(|e| Error::MalformedJson(e.to_string()))
}

/// Undirected DOT; nodes carry product labels when a labelling is given.
pub fn emit_dot(g: &Graph, labels: Option<&ProductLabeling>) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        match labels {
            Some(l) => writeln!(s, "  {v} [label=\"{}\"];", l.label(v)),
            None => writeln!(s, "  {v};"),
        }
        .expect("write to string");
    }
    for &(u, v) in g.edges() {
        writeln!(s, "  {u} -- {v};").expect("write to string");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::basic::complete;
    use crate::products::cover;

    #[test]
    fn hand_decoded_examples() {
        assert_eq!(parse_graph6("C~").unwrap(), complete(4).unwrap());
        assert_eq!(emit_graph6(&complete(2).unwrap()), "A_");
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), complete(2).unwrap());
    }

    #[test]
    fn malformed_input_reports_position() {
        assert!(matches!(parse_graph6("C"), Err(Error::MalformedGraph6 { position: 1, .. })));
        assert!(matches!(parse_graph6("C~~"), Err(Error::MalformedGraph6 { .. })));
        assert!(matches!(parse_graph6("C "), Err(Error::MalformedGraph6 { .. })));
        assert!(matches!(parse_graph6("A`"), Err(Error::MalformedGraph6 { .. })));
    }

    #[test]
    fn large_order_header() {
        let g = Graph::new(100, [(0, 99), (3, 4)]).unwrap();
        let s = emit_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn json_and_dot() {
        assert_eq!(emit_json(&complete(2).unwrap()), r#"{"n":2,"edges":[[0,1]]}"#);
        assert_eq!(parse_json(r#"{"n":2,"edges":[[1,0]]}"#).unwrap(), complete(2).unwrap());
        assert!(matches!(parse_json(r#"{"n":2,"edges":[[0,2]]}"#), Err(Error::MalformedJson(_))));
        assert!(matches!(parse_json("[1]"), Err(Error::MalformedJson(_))));
        let (c, l) = cover(&complete(4).unwrap());
        let dot = emit_dot(&c, Some(&l));
        assert_eq!(dot.matches("label=").count(), 8);
        assert!(dot.contains("(0,x)") && dot.contains("(3,y)"));
    }
}
