//! Text and JSON file formats.
//!
//! Text format, line oriented, `#` starts a comment:
//!
//! ```text
//! bigraph 2 2
//! 0: 0 1
//! 1: 0 1
//! ```
//!
//! ```text
//! hypergraph 3
//! e: 0 1
//! e: 1 2
//! e: 0 2
//! ```
//!
//! The JSON form is `{"kind": "bigraph", "n": 2, "m": 2, "adj": [[0, 1], [0, 1]]}`
//! or `{"kind": "hypergraph", "n": 3, "edges": [[0, 1], [1, 2], [0, 2]]}`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::model::{BipartiteGraph, Hypergraph};

/// Contents of a graph file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFile {
    Bigraph(BipartiteGraph),
    Hypergraph(Hypergraph),
}

impl From<BipartiteGraph> for GraphFile {
    fn from(g: BipartiteGraph) -> Self {
        GraphFile::Bigraph(g)
    }
}

impl From<Hypergraph> for GraphFile {
    fn from(h: Hypergraph) -> Self {
        GraphFile::Hypergraph(h)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum Structured {
    Bigraph {
        n: usize,
        m: usize,
        adj: Vec<Vec<usize>>,
    },
    Hypergraph {
        n: usize,
        edges: Vec<Vec<usize>>,
    },
}

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        message: message.into(),
    })
}

fn parse_index(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .or_else(|_| parse_err(line, format!("expected {what}, found `{tok}`")))
}

/// Parses either format, picking JSON when the first significant character is `{`.
pub fn parse(input: &str) -> Result<GraphFile> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn parse_text(input: &str) -> Result<GraphFile> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let Some((header_line, header)) = lines.next() else {
        return parse_err(1, "missing header");
    };
    let head: Vec<&str> = header.split_whitespace().collect();
    match head.as_slice() {
        ["bigraph", n, m] => {
            let n = parse_index(n, header_line, "X size")?;
            let m = parse_index(m, header_line, "Y size")?;
            if n == 0 {
                return parse_err(header_line, "X must contain at least one vertex");
            }
            let mut rows: Vec<Option<BitSet>> = vec![None; n];
            let mut last_line = header_line;
            for (line, text) in lines {
                last_line = line;
                let Some((lhs, rhs)) = text.split_once(':') else {
                    return parse_err(line, "expected `<x-index>: <y-index>*`");
                };
                let x = parse_index(lhs.trim(), line, "X index")?;
                if x >= n {
                    return parse_err(line, format!("X index {x} out of range"));
                }
                if rows[x].is_some() {
                    return parse_err(line, format!("X index {x} listed twice"));
                }
                let mut row = BitSet::new();
                for tok in rhs.split_whitespace() {
                    let y = parse_index(tok, line, "Y index")?;
                    if y >= m {
                        return parse_err(line, format!("Y index {y} out of range"));
                    }
                    if !row.insert(y) {
                        return parse_err(line, format!("duplicate Y index {y}"));
                    }
                }
                rows[x] = Some(row);
            }
            if let Some(x) = rows.iter().position(Option::is_none) {
                return parse_err(last_line, format!("missing adjacency line for X index {x}"));
            }
            let adj = rows.into_iter().map(Option::unwrap).collect();
            Ok(GraphFile::Bigraph(BipartiteGraph::new(m, adj)?))
        }
        ["hypergraph", n] => {
            let n = parse_index(n, header_line, "vertex count")?;
            if n == 0 {
                return parse_err(header_line, "hypergraph needs at least one vertex");
            }
            let mut edges = Vec::new();
            for (line, text) in lines {
                let Some(rest) = text.strip_prefix("e:") else {
                    return parse_err(line, "expected `e: <v-index>*`");
                };
                let mut edge = BitSet::new();
                for tok in rest.split_whitespace() {
                    let v = parse_index(tok, line, "vertex index")?;
                    if v >= n {
                        return parse_err(line, format!("vertex index {v} out of range"));
                    }
                    if !edge.insert(v) {
                        return parse_err(line, format!("duplicate vertex index {v}"));
                    }
                }
                if edge.is_empty() {
                    return parse_err(line, "empty edge");
                }
                edges.push(edge);
            }
            Ok(GraphFile::Hypergraph(Hypergraph::new(n, edges)?))
        }
        _ => parse_err(
            header_line,
            format!("malformed header `{header}`, expected `bigraph <n> <m>` or `hypergraph <n>`"),
        ),
    }
}

pub fn parse_json(input: &str) -> Result<GraphFile> {
    let s: Structured =
        serde_json::from_str(input).map_err(|e| Error::Structured(e.to_string()))?;
    match s {
        Structured::Bigraph { n, m, adj } => {
            if adj.len() != n {
                return Err(Error::Structured(format!(
                    "n = {n} but {} adjacency rows given",
                    adj.len()
                )));
            }
            Ok(GraphFile::Bigraph(BipartiteGraph::from_lists(m, &adj)?))
        }
        Structured::Hypergraph { n, edges } => {
            Ok(GraphFile::Hypergraph(Hypergraph::from_lists(n, &edges)?))
        }
    }
}

pub fn to_text(file: &GraphFile) -> String {
    let mut out = String::new();
    match file {
        GraphFile::Bigraph(g) => {
            writeln!(out, "bigraph {} {}", g.n(), g.m()).unwrap();
            for x in 0..g.n() {
                write!(out, "{x}:").unwrap();
                for y in g.neighbors(x) {
                    write!(out, " {y}").unwrap();
                }
                out.push('\n');
            }
        }
        GraphFile::Hypergraph(h) => {
            writeln!(out, "hypergraph {}", h.n()).unwrap();
            for e in h.edges() {
                out.push_str("e:");
                for v in e {
                    write!(out, " {v}").unwrap();
                }
                out.push('\n');
            }
        }
    }
    out
}

fn to_structured(file: &GraphFile) -> Structured {
    match file {
        GraphFile::Bigraph(g) => Structured::Bigraph {
            n: g.n(),
            m: g.m(),
            adj: g.rows().iter().map(BitSet::to_vec).collect(),
        },
        GraphFile::Hypergraph(h) => Structured::Hypergraph {
            n: h.n(),
            edges: h.edges().iter().map(BitSet::to_vec).collect(),
        },
    }
}

pub fn to_json(file: &GraphFile) -> String {
    serde_json::to_string(&to_structured(file)).expect("plain data serializes")
}

/// The structured form as a JSON value, for embedding in larger reports.
pub fn to_json_value(file: &GraphFile) -> serde_json::Value {
    serde_json::to_value(to_structured(file)).expect("plain data serializes")
}

pub fn serialize(file: &GraphFile, format: Format) -> String {
    match format {
        Format::Text => to_text(file),
        Format::Json => to_json(file) + "\n",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k22() {
        let f = parse("bigraph 2 2\n0: 0 1\n1: 0 1\n").unwrap();
        assert_eq!(f, GraphFile::Bigraph(BipartiteGraph::complete(2, 2).unwrap()));
    }

    #[test]
    fn parses_triangle_with_comments() {
        let f = parse("# triangle\nhypergraph 3\ne: 0 1\n\ne: 1 2 # second\ne: 0 2\n").unwrap();
        let h = Hypergraph::from_lists(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(f, GraphFile::Hypergraph(h));
    }

    #[test]
    fn out_of_range_y_names_the_line() {
        let err = parse("bigraph 2 2\n0: 0 3\n1: 0 1\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                message: "Y index 3 out of range".into()
            }
        );
        assert_eq!(err.to_string(), "line 2: Y index 3 out of range");
    }

    #[test]
    fn rejects_malformed_input() {
        let cases = [
            ("", 1),
            ("graph 2 2\n", 1),
            ("bigraph 2\n", 1),
            ("bigraph 2 2\n0: 0 0\n1: 1\n", 2),
            ("bigraph 2 2\n0: 0\n0: 1\n", 3),
            ("bigraph 2 2\n0: 0\n", 2),
            ("bigraph 2 2\n0 0\n1: 1\n", 2),
            ("bigraph 2 2\n0: 0\n5: 1\n", 3),
            ("hypergraph 3\ne: 0 1\ne:\n", 3),
            ("hypergraph 3\ne: 0 4\n", 2),
            ("hypergraph 3\nf: 0 1\n", 2),
        ];
        for (text, line) in cases {
            match parse(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn json_matches_text() {
        let g = parse("bigraph 3 2\n0: 1\n1:\n2: 0 1\n").unwrap();
        let j = to_json(&g);
        assert_eq!(j, r#"{"kind":"bigraph","n":3,"m":2,"adj":[[1],[],[0,1]]}"#);
        assert_eq!(parse(&j).unwrap(), g);
        let h = parse("hypergraph 2\ne: 0\ne: 0 1\n").unwrap();
        assert_eq!(to_json(&h), r#"{"kind":"hypergraph","n":2,"edges":[[0],[0,1]]}"#);
        assert!(parse(r#"{"kind":"bigraph","n":2,"m":2,"adj":[[0]]}"#).is_err());
        assert!(parse(r#"{"kind":"tree"}"#).is_err());
    }
}
