//! The `.h3` text format.
//!
//! Line 1 is `n m`; the next `m` non-comment lines are hyperedges `a b c`.
//! Lines starting with `#` are comments. Vertex labels may be arbitrary
//! tokens; when they are not already the integers `0..n`, they are remapped
//! densely in order of first appearance and the mapping is kept for reports.
//! The writer always emits canonical form: integer labels, sorted triples.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::hypergraph::{BuildError, Hypergraph3, Vertex};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: expected header `n m`, found {found:?}")]
    BadHeader { line: usize, found: String },
    #[error("line {line}: expected 3 vertex labels, found {found}")]
    BadArity { line: usize, found: usize },
    #[error("line {line}: hyperedge repeats vertex {label:?}")]
    RepeatedLabel { line: usize, label: String },
    #[error("line {line}: more than {n} distinct vertex labels (n = {n})")]
    TooManyLabels { line: usize, n: usize },
    #[error("expected {expected} hyperedge lines, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("line {line}: unexpected trailing content {found:?}")]
    TrailingContent { line: usize, found: String },
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error("io error: {0}")]
    Io(String),
}

/// Parse result: the hypergraph plus, when the file used non-canonical
/// labels, the original label of each vertex id.
#[derive(Debug, Clone)]
pub struct ParsedH3 {
    pub hypergraph: Hypergraph3,
    pub labels: Option<Vec<String>>,
}

pub fn parse_h3(text: &str) -> Result<ParsedH3, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut rows: Vec<(usize, [String; 3])> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if tokens.len() != 2 {
                    return Err(ParseError::BadHeader {
                        line: line_no,
                        found: line.to_string(),
                    });
                }
                let n = tokens[0].parse::<usize>().map_err(|_| ParseError::BadHeader {
                    line: line_no,
                    found: line.to_string(),
                })?;
                let m = tokens[1].parse::<usize>().map_err(|_| ParseError::BadHeader {
                    line: line_no,
                    found: line.to_string(),
                })?;
                header = Some((n, m));
            }
            Some((_, m)) => {
                if rows.len() == m {
                    return Err(ParseError::TrailingContent {
                        line: line_no,
                        found: line.to_string(),
                    });
                }
                if tokens.len() != 3 {
                    return Err(ParseError::BadArity {
                        line: line_no,
                        found: tokens.len(),
                    });
                }
                rows.push((
                    line_no,
                    [
                        tokens[0].to_string(),
                        tokens[1].to_string(),
                        tokens[2].to_string(),
                    ],
                ));
            }
        }
    }

    let Some((n, m)) = header else {
        return Err(ParseError::BadHeader {
            line: text.lines().count() + 1,
            found: String::new(),
        });
    };
    if rows.len() != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            found: rows.len(),
        });
    }

    // Identity mapping when every label is already an integer in 0..n.
    let identity = rows.iter().all(|(_, t)| {
        t.iter()
            .all(|s| s.parse::<usize>().map(|v| v < n).unwrap_or(false))
    });

    let mut labels: Option<Vec<String>> = None;
    let mut triples: Vec<[Vertex; 3]> = Vec::with_capacity(rows.len());
    if identity {
        for (line, t) in &rows {
            let v: Vec<Vertex> = t.iter().map(|s| s.parse::<Vertex>().unwrap()).collect();
            if v[0] == v[1] || v[1] == v[2] || v[0] == v[2] {
                let dup = if v[0] == v[1] || v[0] == v[2] { 0 } else { 1 };
                return Err(ParseError::RepeatedLabel {
                    line: *line,
                    label: t[dup].clone(),
                });
            }
            triples.push([v[0], v[1], v[2]]);
        }
    } else {
        let mut interned: HashMap<String, Vertex> = HashMap::new();
        let mut order: Vec<String> = Vec::new();
        for (line, t) in &rows {
            let mut v = [0 as Vertex; 3];
            for (i, tok) in t.iter().enumerate() {
                let id = match interned.get(tok) {
                    Some(&id) => id,
                    None => {
                        if order.len() == n {
                            return Err(ParseError::TooManyLabels { line: *line, n });
                        }
                        let id = order.len() as Vertex;
                        interned.insert(tok.clone(), id);
                        order.push(tok.clone());
                        id
                    }
                };
                v[i] = id;
            }
            if v[0] == v[1] || v[1] == v[2] || v[0] == v[2] {
                let dup = if v[0] == v[1] || v[0] == v[2] { 0 } else { 1 };
                return Err(ParseError::RepeatedLabel {
                    line: *line,
                    label: t[dup].clone(),
                });
            }
            triples.push(v);
        }
        // Unreferenced vertices keep synthetic labels.
        while order.len() < n {
            order.push(format!("_{}", order.len()));
        }
        labels = Some(order);
    }

    let hypergraph = Hypergraph3::build(n, triples)?;
    Ok(ParsedH3 { hypergraph, labels })
}

pub fn read_h3(path: &Path) -> Result<ParsedH3, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError::Io(e.to_string()))?;
    parse_h3(&text)
}

/// Canonical serialization: `n m`, then the sorted triples.
pub fn write_h3(h: &Hypergraph3) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", h.n(), h.edge_count());
    for t in h.edges() {
        let _ = writeln!(out, "{} {} {}", t[0], t[1], t[2]);
    }
    out
}

pub fn write_h3_file(h: &Hypergraph3, path: &Path) -> std::io::Result<()> {
    std::fs::write(path, write_h3(h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_canonical() {
        let p = parse_h3("4 2\n0 1 2\n0 1 3\n").unwrap();
        assert_eq!(p.hypergraph.edge_count(), 2);
        assert!(p.labels.is_none());
    }

    #[test]
    fn parses_comments_and_blank_lines() {
        let p = parse_h3("# header\n\n3 1\n# edge\n0 1 2\n").unwrap();
        assert_eq!(p.hypergraph.edge_count(), 1);
    }

    #[test]
    fn remaps_arbitrary_labels() {
        let p = parse_h3("3 1\nx y z\n").unwrap();
        assert_eq!(p.hypergraph.edge(0), [0, 1, 2]);
        assert_eq!(p.labels.unwrap(), vec!["x", "y", "z"]);
    }

    #[test]
    fn remaps_one_based_integers() {
        let p = parse_h3("3 1\n1 2 3\n").unwrap();
        assert_eq!(p.hypergraph.edge(0), [0, 1, 2]);
        assert!(p.labels.is_some());
    }

    #[test]
    fn error_carries_line_number() {
        let err = parse_h3("3 2\n0 1 2\n0 1\n").unwrap_err();
        match err {
            ParseError::BadArity { line, found } => {
                assert_eq!(line, 3);
                assert_eq!(found, 2);
            }
            other => panic!("unexpected error {other:?}"),
        }
        let err = parse_h3("3 1\n0 0 1\n").unwrap_err();
        match err {
            ParseError::RepeatedLabel { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn too_many_labels_rejected() {
        let err = parse_h3("3 2\na b c\na b d\n").unwrap_err();
        assert!(matches!(err, ParseError::TooManyLabels { line: 3, n: 3 }));
    }

    #[test]
    fn roundtrip_canonical_is_identity() {
        let text = "4 3\n0 1 2\n0 1 3\n1 2 3\n";
        let p = parse_h3(text).unwrap();
        assert_eq!(write_h3(&p.hypergraph), text);
    }

    proptest! {
        #[test]
        fn write_parse_roundtrip(
            n in 3usize..10,
            raw in proptest::collection::vec((0u32..10, 0u32..10, 0u32..10), 0..15),
        ) {
            let triples: Vec<[u32; 3]> = raw
                .iter()
                .map(|&(a, b, c)| [a % n as u32, b % n as u32, c % n as u32])
                .filter(|t| t[0] != t[1] && t[1] != t[2] && t[0] != t[2])
                .collect();
            let h = Hypergraph3::build(n, triples).unwrap();
            let text = write_h3(&h);
            let back = parse_h3(&text).unwrap();
            // Canonical files round-trip byte-identically.
            prop_assert_eq!(write_h3(&back.hypergraph), text.clone());
            prop_assert_eq!(back.hypergraph, h);
        }
    }
}
