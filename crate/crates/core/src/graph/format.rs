//! graph6, edge-list and JSON serialisation.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, VertexTag};

const GRAPH6_MAX_ORDER: u64 = 68_719_476_735;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Graph6,
    EdgeList,
    Json,
}

impl FromStr for ExportFormat {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(ExportFormat::Graph6),
            "edgelist" => Ok(ExportFormat::EdgeList),
            "json" => Ok(ExportFormat::Json),
            other => Err(GraphError::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    n: usize,
    edges: &'a [(u32, u32)],
    tags: &'a [VertexTag],
}

pub fn export(g: &Graph, format: ExportFormat) -> Result<Vec<u8>, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    Ok(match format {
        ExportFormat::Graph6 => {
            let mut s = to_graph6(g);
            s.push('\n');
            s.into_bytes()
        }
        ExportFormat::EdgeList => {
            let mut s = String::with_capacity(g.size() * 8);
            for &(a, b) in g.edges() {
                writeln!(s, "{a} {b}").unwrap();
            }
            s.into_bytes()
        }
        ExportFormat::Json => {
            let doc = JsonGraph {
                n: g.order(),
                edges: g.edges(),
                tags: g.tags(),
            };
            let mut bytes = serde_json::to_vec(&doc).expect("plain data serialises");
            bytes.push(b'\n');
            bytes
        }
    })
}

fn to_graph6(g: &Graph) -> String {
    let n = g.order() as u64;
    assert!(n <= GRAPH6_MAX_ORDER);
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }

    // upper triangle, column by column
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..g.order() as u32 {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end().as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(GraphError::Parse("graph6 byte outside 63..=126".into()));
    }
    let read = |slice: &[u8]| slice.iter().fold(0u64, |acc, &b| (acc << 6) | u64::from(b - 63));
    let (n, body) = match bytes {
        [] => return Err(GraphError::Parse("empty graph6 string".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => (read(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 => (read(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(GraphError::Parse("truncated graph6 header".into())),
        [first, rest @ ..] => (u64::from(first - 63), rest),
    };
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(GraphError::Parse(format!(
            "graph6 body has {} bytes, expected {}",
            body.len(),
            bits.div_ceil(6)
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n as u32 {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::plain(n, edges)
}

#[derive(Deserialize)]
struct OwnedJsonGraph {
    n: usize,
    edges: Vec<(u32, u32)>,
    #[serde(default)]
    tags: Option<Vec<VertexTag>>,
}

/// Reads the JSON written by [`export`]; missing tags default to plain.
pub fn parse_json(text: &str) -> Result<Graph, GraphError> {
    let doc: OwnedJsonGraph =
        serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
    let tags = doc.tags.unwrap_or_else(|| vec![VertexTag::Plain; doc.n]);
    Graph::from_edges(doc.n, doc.edges, tags)
}

/// Reads lines `u v`; the order is one more than the largest index seen.
pub fn parse_edgelist(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut n = 0usize;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace().map(u32::from_str);
        match (parts.next(), parts.next(), parts.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => {
                n = n.max(a.max(b) as usize + 1);
                edges.push((a, b));
            }
            _ => {
                return Err(GraphError::Parse(format!(
                    "line {}: expected two vertex indices",
                    lineno + 1
                )))
            }
        }
    }
    Graph::plain(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use proptest::prelude::*;

    #[test]
    fn k2_graph6() {
        let k2 = named::complete(2);
        assert_eq!(export(&k2, ExportFormat::Graph6).unwrap(), b"A_\n");
    }

    #[test]
    fn c5_edgelist() {
        let c5 = named::cycle(5);
        assert_eq!(
            export(&c5, ExportFormat::EdgeList).unwrap(),
            b"0 1\n0 4\n1 2\n2 3\n3 4\n"
        );
    }

    #[test]
    fn empty_graph_is_rejected() {
        let g = Graph::plain(0, []).unwrap();
        assert_eq!(export(&g, ExportFormat::Graph6), Err(GraphError::EmptyGraph));
        assert_eq!(
            "dot".parse::<ExportFormat>(),
            Err(GraphError::UnknownFormat("dot".into()))
        );
    }

    #[test]
    fn known_graph6_strings() {
        // Petersen in nauty's labelling decodes to a 3-regular graph of girth 5
        let p = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(p.order(), 10);
        assert_eq!(p.regular_degree(), Some(3));
        assert_eq!(to_graph6(&p), "IheA@GUAo");
        // the example from the format description
        let g = parse_graph6("DQc").unwrap();
        assert_eq!(g.edges(), &[(0, 2), (0, 4), (1, 3), (3, 4)]);
    }

    #[test]
    fn long_header() {
        let g = named::cycle(100);
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63 + 36]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn json_lists_edges_and_tags() {
        let s = String::from_utf8(export(&named::cycle(3), ExportFormat::Json).unwrap()).unwrap();
        assert_eq!(
            s,
            "{\"n\":3,\"edges\":[[0,1],[0,2],[1,2]],\"tags\":[\"plain\",\"plain\",\"plain\"]}\n"
        );
    }

    #[test]
    fn json_round_trip_keeps_tags() {
        let g = Graph::from_edges(3, [(0, 2), (1, 2)], vec![VertexTag::Point, VertexTag::Point, VertexTag::Line]).unwrap();
        let text = String::from_utf8(export(&g, ExportFormat::Json).unwrap()).unwrap();
        assert_eq!(parse_json(&text).unwrap(), g);
        assert_eq!(parse_json("{\"n\":2,\"edges\":[[0,1]]}").unwrap(), named::complete(2));
        assert!(parse_json("{\"n\":2}").is_err());
    }

    #[test]
    fn malformed_input() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C~~~").is_err());
        assert!(parse_edgelist("0 1\n2\n").is_err());
    }

    proptest! {
        #[test]
        fn graph6_and_edgelist_round_trip(n in 1usize..80, seed in proptest::collection::vec(any::<bool>(), 0..3200)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n as u32 {
                for i in 0..j {
                    if seed.get(k).copied().unwrap_or(false) {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            let g = Graph::plain(n, edges).unwrap();
            let g6 = String::from_utf8(export(&g, ExportFormat::Graph6).unwrap()).unwrap();
            prop_assert_eq!(parse_graph6(&g6).unwrap(), g.clone());
            let el = String::from_utf8(export(&g, ExportFormat::EdgeList).unwrap()).unwrap();
            let back = parse_edgelist(&el).unwrap();
            prop_assert_eq!(back.edges(), g.edges());
        }
    }
}
