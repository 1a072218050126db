//! The on-disk edge-list text format: first line `n m`, then `m` lines
//! `u v` (ASCII decimal, 0-indexed, whitespace-separated). Blank lines and
//! `#` comment lines are tolerated on input and never produced on output.

use thiserror::Error;

use crate::{Graph, GraphError, Vertex};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("line {0}: expected {1}")]
    Malformed(usize, &'static str),
    #[error("line {0}: bad integer: {1}")]
    BadInt(usize, String),
    #[error("header declares {declared} edges, found {found} edge lines")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("line {0}: {1}")]
    Graph(usize, GraphError),
    #[error("size limit exceeded: {0}")]
    TooLarge(&'static str),
}

/// Hard ceilings so that hostile inputs cannot request absurd allocations.
const MAX_N: usize = 10_000_000;
const MAX_M: usize = 100_000_000;

/// Parses the edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(ParseError::Empty)?;
    let mut it = header.split_whitespace();
    let n = parse_int(hline, it.next().ok_or(ParseError::Malformed(hline, "n m"))?)?;
    let m = parse_int(hline, it.next().ok_or(ParseError::Malformed(hline, "n m"))?)?;
    if it.next().is_some() {
        return Err(ParseError::Malformed(hline, "exactly two header fields"));
    }
    if n > MAX_N {
        return Err(ParseError::TooLarge("vertex count"));
    }
    if m > MAX_M {
        return Err(ParseError::TooLarge("edge count"));
    }

    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut found = 0usize;
    let mut first_graph_err: Option<(usize, GraphError)> = None;
    for (lno, line) in lines {
        let mut it = line.split_whitespace();
        let u = parse_int(lno, it.next().ok_or(ParseError::Malformed(lno, "u v"))?)?;
        let v = parse_int(lno, it.next().ok_or(ParseError::Malformed(lno, "u v"))?)?;
        if it.next().is_some() {
            return Err(ParseError::Malformed(lno, "exactly two edge fields"));
        }
        found += 1;
        if found > m {
            return Err(ParseError::EdgeCountMismatch {
                declared: m,
                found,
            });
        }
        if (u >= n || v >= n || u == v) && first_graph_err.is_none() {
            // defer so that the declared-count check still fires first
            let e = if u == v {
                GraphError::SelfLoop(u)
            } else {
                GraphError::VertexOutOfRange(u.max(v), n)
            };
            first_graph_err = Some((lno, e));
        }
        edges.push((u, v));
    }
    if found != m {
        return Err(ParseError::EdgeCountMismatch {
            declared: m,
            found,
        });
    }
    if let Some((lno, e)) = first_graph_err {
        return Err(ParseError::Graph(lno, e));
    }
    Graph::from_edge_list(n, edges).map_err(|e| ParseError::Graph(0, e))
}

fn parse_int(lno: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse::<usize>()
        .map_err(|_| ParseError::BadInt(lno, tok.to_string()))
}

/// Serializes a graph to the edge-list format (normalized, sorted edges).
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_c4() {
        let g = crate::fixtures::cycle(4);
        let text = write_edge_list(&g);
        assert_eq!(text, "4 4\n0 1\n0 3\n1 2\n2 3\n");
        let h = parse_edge_list(&text).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn tolerates_comments_and_blanks() {
        let g = parse_edge_list("# a triangle\n3 3\n\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("2\n").is_err());
        assert!(parse_edge_list("2 1\n0 1 5\n").is_err());
        assert!(parse_edge_list("2 2\n0 1\n").is_err());
        assert!(parse_edge_list("2 1\n0 2\n").is_err());
        assert!(parse_edge_list("2 1\n1 1\n").is_err());
        assert!(parse_edge_list("99999999999999999999 0\n").is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = parse_edge_list("2 2\n0 1\n1 0\n").unwrap();
        assert_eq!(g.m(), 1);
    }
}
