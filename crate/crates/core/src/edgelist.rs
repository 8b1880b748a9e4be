//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! 4
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The first non-comment line is the vertex count; every following
//! non-comment line is one edge as two whitespace-separated decimal ids.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing vertex count line")]
    MissingHeader,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> EdgeListError {
    EdgeListError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse(text: &str) -> Result<Graph, EdgeListError> {
    let mut vertex_count = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| syntax(line, format!("expected a non-negative integer, found {s:?}")))
        };
        match vertex_count {
            None => {
                if fields.len() != 1 {
                    return Err(syntax(line, "expected a single vertex count"));
                }
                vertex_count = Some(number(fields[0])?);
            }
            Some(_) => {
                if fields.len() != 2 {
                    return Err(syntax(line, "expected an edge \"u v\""));
                }
                edges.push((number(fields[0])?, number(fields[1])?));
            }
        }
    }
    let n = vertex_count.ok_or(EdgeListError::MissingHeader)?;
    Ok(Graph::new(n, edges)?)
}

/// Canonical rendering: vertex count, then edges `u v` with `u < v` in
/// lexicographic order.
pub fn render(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
