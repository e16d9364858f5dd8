//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! 3          <- vertex count
//! 0 1
//! 1 2
//! ```
//!
//! `#` starts a comment anywhere on a line; blank lines are ignored; LF and
//! CRLF are both accepted. The serializer writes LF and canonical edge order.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    MalformedHeader(String),
    MalformedLine(String),
    VertexOutOfRange { vertex: usize, n: usize },
    DuplicateEdge(usize, usize),
    SelfLoop(usize),
}

/// Parse failure with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {}", describe(.kind))]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl std::fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&describe(self))
    }
}

fn describe(kind: &ParseErrorKind) -> String {
    match kind {
        ParseErrorKind::MissingHeader => "missing vertex-count header".into(),
        ParseErrorKind::MalformedHeader(s) => format!("malformed vertex count `{s}`"),
        ParseErrorKind::MalformedLine(s) => format!("expected `u v`, found `{s}`"),
        ParseErrorKind::VertexOutOfRange { vertex, n } => {
            format!("vertex {vertex} out of range for {n} vertices")
        }
        ParseErrorKind::DuplicateEdge(u, v) => format!("duplicate edge ({u}, {v})"),
        ParseErrorKind::SelfLoop(u) => format!("self-loop at vertex {u}"),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |kind| ParseError { line, kind };

        let Some(n) = n else {
            let parsed = content
                .parse::<usize>()
                .map_err(|_| err(ParseErrorKind::MalformedHeader(content.to_string())))?;
            n = Some(parsed);
            continue;
        };

        let mut fields = content.split_whitespace();
        let (u, v) = match (fields.next(), fields.next(), fields.next()) {
            (Some(a), Some(b), None) => match (a.parse::<usize>(), b.parse::<usize>()) {
                (Ok(u), Ok(v)) => (u, v),
                _ => return Err(err(ParseErrorKind::MalformedLine(content.to_string()))),
            },
            _ => return Err(err(ParseErrorKind::MalformedLine(content.to_string()))),
        };
        for w in [u, v] {
            if w >= n {
                return Err(err(ParseErrorKind::VertexOutOfRange { vertex: w, n }));
            }
        }
        if u == v {
            return Err(err(ParseErrorKind::SelfLoop(u)));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(err(ParseErrorKind::DuplicateEdge(key.0, key.1)));
        }
        edges.push(key);
    }

    let n = n.ok_or(ParseError {
        line: last_line.max(1),
        kind: ParseErrorKind::MissingHeader,
    })?;
    Ok(Graph::new(n, edges).expect("edges validated while parsing"))
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{}", g.n()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
