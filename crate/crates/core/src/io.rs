//! Edge-list and DIMACS readers, and the edge-list writer.
//!
//! Edge list: one `label label` pair per line, `#` starts a comment, blank
//! lines are ignored. A line holding a single label declares a vertex, which
//! is how isolated vertices are written. Vertex ids follow first appearance.
//!
//! DIMACS: `c` comment lines, one `p edge n m` line, then `e i j` lines with
//! 1-based indices. Vertices are labeled `"1"`..`"n"`.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: self-loop on vertex `{label}`")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: duplicate edge `{u}` - `{v}`")]
    DuplicateEdge { line: usize, u: String, v: String },
    #[error("line {line}: malformed line ({reason})")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: vertex {index} out of range 1..={n}")]
    OutOfRange { line: usize, index: usize, n: usize },
    #[error("line {line}: edge line before the `p edge` line")]
    EdgeBeforeProblem { line: usize },
    #[error("missing `p edge n m` line")]
    MissingProblemLine,
    #[error("problem line declares {declared} edges, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
}

/// Input format selector, as used on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    EdgeList,
    Dimacs,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "edgelist" => Ok(Format::EdgeList),
            "dimacs" => Ok(Format::Dimacs),
            other => Err(format!("unknown format `{other}` (expected edge-list or dimacs)")),
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

pub fn parse_edge_list<'a>(text: &'a str) -> Result<Graph, ParseError> {
    let mut labels: Vec<String> = Vec::new();
    let mut ids: HashMap<&str, Vertex> = HashMap::new();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut seen: HashSet<(Vertex, Vertex)> = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let mut intern = |tok: &'a str, labels: &mut Vec<String>| -> Vertex {
            let next = labels.len();
            let id = *ids.entry(tok).or_insert(next);
            if id == next {
                labels.push(tok.to_string());
            }
            id
        };
        match tokens.as_slice() {
            [] => {}
            [only] => {
                intern(only, &mut labels);
            }
            [a, b] => {
                if a == b {
                    return Err(ParseError::SelfLoop { line, label: a.to_string() });
                }
                let u = intern(a, &mut labels);
                let v = intern(b, &mut labels);
                let key = (u.min(v), u.max(v));
                if !seen.insert(key) {
                    return Err(ParseError::DuplicateEdge { line, u: a.to_string(), v: b.to_string() });
                }
                edges.push((u, v));
            }
            more => {
                return Err(ParseError::Malformed {
                    line,
                    reason: format!("expected `label label`, found {} fields", more.len()),
                })
            }
        }
    }
    Graph::with_labels(labels, &edges).map_err(|e| graph_error_at(e, 0))
}

pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<(usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut seen: HashMap<(Vertex, Vertex), usize> = HashMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            ["c", ..] => {}
            ["p", kind, nv, ne] => {
                if n.is_some() {
                    return Err(ParseError::Malformed { line, reason: "second problem line".into() });
                }
                if *kind != "edge" && *kind != "col" {
                    return Err(ParseError::Malformed { line, reason: format!("unsupported problem kind `{kind}`") });
                }
                let nv = parse_count(nv, line)?;
                let ne = parse_count(ne, line)?;
                n = Some((nv, ne));
            }
            ["e", a, b] => {
                let Some((nv, _)) = n else {
                    return Err(ParseError::EdgeBeforeProblem { line });
                };
                let i = parse_index(a, line, nv)?;
                let j = parse_index(b, line, nv)?;
                if i == j {
                    return Err(ParseError::SelfLoop { line, label: a.to_string() });
                }
                if seen.insert((i.min(j), i.max(j)), line).is_some() {
                    return Err(ParseError::DuplicateEdge { line, u: a.to_string(), v: b.to_string() });
                }
                edges.push((i, j));
            }
            _ => {
                return Err(ParseError::Malformed { line, reason: format!("unrecognised line `{}`", raw.trim()) });
            }
        }
    }
    let (nv, ne) = n.ok_or(ParseError::MissingProblemLine)?;
    if edges.len() != ne {
        return Err(ParseError::EdgeCountMismatch { declared: ne, found: edges.len() });
    }
    Graph::with_labels((1..=nv).map(|i| i.to_string()).collect(), &edges).map_err(|e| graph_error_at(e, 0))
}

fn parse_count(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| ParseError::Malformed { line, reason: format!("`{tok}` is not a count") })
}

fn parse_index(tok: &str, line: usize, n: usize) -> Result<Vertex, ParseError> {
    let i: usize = tok
        .parse()
        .map_err(|_| ParseError::Malformed { line, reason: format!("`{tok}` is not a vertex index") })?;
    if i == 0 || i > n {
        return Err(ParseError::OutOfRange { line, index: i, n });
    }
    Ok(i - 1)
}

// Only reachable if the line-level checks above missed something.
fn graph_error_at(e: GraphError, line: usize) -> ParseError {
    match e {
        GraphError::SelfLoop(label) => ParseError::SelfLoop { line, label },
        GraphError::DuplicateEdge(u, v) => ParseError::DuplicateEdge { line, u, v },
        other => ParseError::Malformed { line, reason: other.to_string() },
    }
}

/// Serializes `g` as an edge list that parses back to an identical graph.
///
/// Edges are written in `(u, v)`, `u < v` order. When that order would not
/// reproduce the vertex ids (or there are isolated vertices), every vertex is
/// declared on its own line first.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let mut next = 0;
    let mut seen = vec![false; g.order()];
    let mut in_order = true;
    for (u, v) in g.edges() {
        for w in [u, v] {
            if !seen[w] {
                seen[w] = true;
                in_order &= w == next;
                next += 1;
            }
        }
        if !in_order {
            break;
        }
    }
    if !in_order || next != g.order() {
        for v in g.vertices() {
            let _ = writeln!(out, "{}", g.label(v));
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", g.label(u), g.label(v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_basics() {
        let g = parse_edge_list("a b\nb c").unwrap();
        assert_eq!((g.order(), g.size()), (3, 2));
        assert_eq!(g.labels(), &["a", "b", "c"]);

        let g = parse_edge_list("# comment\n\n a  b # trailing\n").unwrap();
        assert_eq!((g.order(), g.size()), (2, 1));
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list("a a"), Err(ParseError::SelfLoop { line: 1, .. })));
        assert!(matches!(
            parse_edge_list("a b\nc d\nb a"),
            Err(ParseError::DuplicateEdge { line: 3, .. })
        ));
        assert!(matches!(parse_edge_list("a b\na b c"), Err(ParseError::Malformed { line: 2, .. })));
    }

    #[test]
    fn isolated_vertex_declarations() {
        let g = parse_edge_list("a\nb c\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.isolated_vertices().len(), 1);
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn dimacs_basics() {
        let k2 = parse_dimacs("p edge 2 1\ne 1 2").unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));
        let p3 = parse_dimacs("c a path\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(p3.degree(1), 2);
        assert_eq!(p3.labels(), &["1", "2", "3"]);
    }

    #[test]
    fn dimacs_errors() {
        assert!(matches!(parse_dimacs("e 1 2"), Err(ParseError::EdgeBeforeProblem { line: 1 })));
        assert!(matches!(parse_dimacs("p edge 2 1\ne 1 3"), Err(ParseError::OutOfRange { line: 2, .. })));
        assert!(matches!(parse_dimacs("p edge 2 1\ne 2 2"), Err(ParseError::SelfLoop { .. })));
        assert!(matches!(parse_dimacs("c nothing"), Err(ParseError::MissingProblemLine)));
        assert!(matches!(parse_dimacs("p edge 3 2\ne 1 2"), Err(ParseError::EdgeCountMismatch { .. })));
    }

    #[test]
    fn writer_round_trips_out_of_order_ids() {
        let g = parse_edge_list("a c\nb c\n").unwrap();
        let text = write_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }
}
