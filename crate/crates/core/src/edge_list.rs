//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v      (m lines, 0-based, undirected)
//! ```
//!
//! The writer emits edges sorted with `u < v`, so writing the same graph twice
//! gives identical bytes.

use std::collections::HashSet;
use std::io::{self, BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses an edge list. Duplicate edges are rejected.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (a, b) = two_numbers(line, line_no)?;
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                for w in [a, b] {
                    if w >= n {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("vertex {w} out of range for order {n}"),
                        });
                    }
                }
                if a == b {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("self-loop at {a}"),
                    });
                }
                let key = (a.min(b), a.max(b));
                if !seen.insert(key) {
                    return Err(Error::DuplicateEdge {
                        line: line_no,
                        u: key.0,
                        v: key.1,
                    });
                }
                edges.push((a, b));
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        message: "missing 'n m' header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}

fn two_numbers(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|tok| {
        tok.parse::<usize>().map_err(|e| Error::Parse {
            line: line_no,
            message: format!("'{tok}': {e}"),
        })
    });
    let a = it.next().transpose()?;
    let b = it.next().transpose()?;
    match (a, b, it.next()) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(Error::Parse {
            line: line_no,
            message: "expected exactly two integers".into(),
        }),
    }
}

/// Reads an edge list from any buffered reader.
pub fn read_edge_list<R: BufRead>(mut reader: R) -> io::Result<Result<Graph>> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    Ok(parse_edge_list(&text))
}

pub fn write_edge_list<W: Write>(graph: &Graph, mut out: W) -> io::Result<()> {
    writeln!(out, "{} {}", graph.order(), graph.size())?;
    for (u, v) in graph.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn to_edge_list(graph: &Graph) -> String {
    let mut buf = Vec::new();
    write_edge_list(graph, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("edge lists are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# P3\n3 2\n0 1\n# mid\n1 2\n").unwrap();
        assert_eq!(g, Graph::new(3, [(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn rejects_duplicates_in_either_orientation() {
        let err = parse_edge_list("3 2\n0 1\n1 0\n").unwrap_err();
        assert_eq!(
            err,
            Error::DuplicateEdge {
                line: 3,
                u: 0,
                v: 1
            }
        );
    }

    #[test]
    fn rejects_count_mismatch_and_garbage() {
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn writer_is_sorted() {
        let g = Graph::new(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(to_edge_list(&g), "4 3\n0 1\n0 2\n2 3\n");
    }

    proptest! {
        #[test]
        fn write_then_read_is_identity(n in 1usize..12, raw in proptest::collection::vec((0usize..12, 0usize..12), 0..30)) {
            let edges: Vec<_> = raw.into_iter().filter(|&(u, v)| u < n && v < n && u != v).collect();
            let g = Graph::new(n, edges).unwrap();
            let text = to_edge_list(&g);
            let back = parse_edge_list(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(to_edge_list(&back), text);
        }
    }
}
