//! Plain-text edge-list format.
//!
//! Line 1 is `n m`; each of the following `m` lines is one edge `u v` with
//! `u < v`, in ascending pair-index order, ASCII decimal. Lines starting
//! with `#` are ignored. Writing then reading a graph reproduces it
//! bit-exactly, and writing is canonical: the same graph always serializes
//! to the same bytes.

use crate::graph::Graph;
use std::io::{self, BufRead, Write};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: malformed edge, expected \"u v\"")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    OutOfRange { line: usize, vertex: u32, n: usize },
    #[error("line {line}: edge ({u}, {v}) violates u < v")]
    NotIncreasing { line: usize, u: u32, v: u32 },
    #[error("line {line}: edge ({u}, {v}) out of order or duplicated")]
    OutOfOrder { line: usize, u: u32, v: u32 },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: u64, found: u64 },
    #[error("missing header")]
    MissingHeader,
}

/// Serializes a graph in the canonical edge-list format.
pub fn write_graph<W: Write>(g: &Graph, mut w: W) -> io::Result<()> {
    writeln!(w, "{} {}", g.n(), g.m())?;
    for e in g.edges() {
        writeln!(w, "{} {}", e.a(), e.b())?;
    }
    Ok(())
}

/// Serializes a graph to a string in the canonical edge-list format.
pub fn graph_to_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_graph(g, &mut buf).expect("write to Vec cannot fail");
    String::from_utf8(buf).expect("output is ASCII")
}

/// Parses the edge-list format, enforcing the canonical edge order.
pub fn read_graph<R: BufRead>(r: R) -> Result<Graph, EdgeListError> {
    let mut header: Option<(usize, u64)> = None;
    let mut g = Graph::empty(0);
    let mut found = 0u64;
    let mut last: Option<(u32, u32)> = None;
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tok = trimmed.split_whitespace();
        match header {
            None => {
                let n: usize = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or(EdgeListError::MalformedHeader { line: lineno })?;
                let m: u64 = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or(EdgeListError::MalformedHeader { line: lineno })?;
                if tok.next().is_some() {
                    return Err(EdgeListError::MalformedHeader { line: lineno });
                }
                header = Some((n, m));
                g = Graph::empty(n);
            }
            Some((n, _)) => {
                let u: u32 = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or(EdgeListError::MalformedEdge { line: lineno })?;
                let v: u32 = tok
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or(EdgeListError::MalformedEdge { line: lineno })?;
                if tok.next().is_some() {
                    return Err(EdgeListError::MalformedEdge { line: lineno });
                }
                if u >= v {
                    return Err(EdgeListError::NotIncreasing { line: lineno, u, v });
                }
                if v as usize >= n {
                    return Err(EdgeListError::OutOfRange {
                        line: lineno,
                        vertex: v,
                        n,
                    });
                }
                if let Some(prev) = last {
                    if (u, v) <= prev {
                        return Err(EdgeListError::OutOfOrder { line: lineno, u, v });
                    }
                }
                last = Some((u, v));
                g.set_edge(u, v);
                found += 1;
            }
        }
    }
    let (_, m) = header.ok_or(EdgeListError::MissingHeader)?;
    if found != m {
        return Err(EdgeListError::EdgeCountMismatch {
            expected: m,
            found,
        });
    }
    g.finish_edge_count();
    Ok(g)
}

/// Parses the edge-list format from a string.
pub fn graph_from_str(s: &str) -> Result<Graph, EdgeListError> {
    read_graph(s.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_bit_exact() {
        let g = Graph::new(5, &[(0, 1), (0, 4), (2, 3)]).unwrap();
        let s = graph_to_string(&g);
        assert_eq!(s, "5 3\n0 1\n0 4\n2 3\n");
        let h = graph_from_str(&s).unwrap();
        assert_eq!(graph_to_string(&h), s);
        assert_eq!(h.m(), 3);
        assert!(h.has_edge(0, 4));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let g = graph_from_str("# a comment\n4 1\n\n# another\n1 3\n").unwrap();
        assert_eq!((g.n(), g.m()), (4, 1));
        assert!(g.has_edge(1, 3));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            graph_from_str("x y\n").unwrap_err(),
            EdgeListError::MalformedHeader { line: 1 }
        ));
        assert!(matches!(
            graph_from_str("4 1\n1\n").unwrap_err(),
            EdgeListError::MalformedEdge { line: 2 }
        ));
        assert!(matches!(
            graph_from_str("4 1\n3 1\n").unwrap_err(),
            EdgeListError::NotIncreasing { line: 2, .. }
        ));
        assert!(matches!(
            graph_from_str("4 2\n0 1\n0 1\n").unwrap_err(),
            EdgeListError::OutOfOrder { line: 3, .. }
        ));
        assert!(matches!(
            graph_from_str("4 2\n0 1\n").unwrap_err(),
            EdgeListError::EdgeCountMismatch { .. }
        ));
        assert!(matches!(
            graph_from_str("4 1\n0 5\n").unwrap_err(),
            EdgeListError::OutOfRange { line: 2, .. }
        ));
        assert!(matches!(
            graph_from_str("").unwrap_err(),
            EdgeListError::MissingHeader
        ));
    }
}
