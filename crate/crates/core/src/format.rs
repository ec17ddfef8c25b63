//! The canonical hypergraph text file.
//!
//! ```text
//! # optional comments anywhere
//! 3 2
//! 0 1
//! 0 2
//! 1 2
//! ```
//!
//! The first non-comment line is `<n> <r>`; every further non-comment line
//! is one edge as `r` strictly increasing 0-based ids separated by single
//! spaces. The file must end with a newline. Writers emit edges sorted
//! lexicographically by id sequence; the reader accepts any line order.

use std::fs;
use std::io;
use std::path::Path;

use thiserror::Error;

use crate::hypergraph::{Hypergraph, HypergraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected \"<n> <r>\": {detail}")]
    Header { line: usize, detail: String },
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: expected {expected} vertex ids, found {found}")]
    Arity { line: usize, expected: usize, found: usize },
    #[error("line {line}: bad vertex id {token:?}")]
    Token { line: usize, token: String },
    #[error("line {line}: vertex ids must be strictly increasing")]
    Order { line: usize },
    #[error("line {line}: vertex {vertex} out of range for n={n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate edge")]
    Duplicate { line: usize },
    #[error("line {line}: missing trailing newline")]
    TrailingNewline { line: usize },
    #[error(transparent)]
    Invalid(#[from] HypergraphError),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
}

fn split_ids(line: &str) -> Vec<&str> {
    line.split(' ').collect()
}

fn number(token: &str, line: usize) -> Result<usize, ParseError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::Token { line, token: token.to_string() });
    }
    token.parse().map_err(|_| ParseError::Token { line, token: token.to_string() })
}

pub fn parse(text: &str) -> Result<Hypergraph, ParseError> {
    let line_count = text.lines().count();
    if !text.is_empty() && !text.ends_with('\n') {
        return Err(ParseError::TrailingNewline { line: line_count });
    }

    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, Vec<usize>)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.starts_with('#') {
            continue;
        }
        let tokens = split_ids(raw);
        match header {
            None => {
                if tokens.len() != 2 {
                    return Err(ParseError::Header { line, detail: format!("{} fields", tokens.len()) });
                }
                let n = number(tokens[0], line)
                    .map_err(|_| ParseError::Header { line, detail: format!("n={:?}", tokens[0]) })?;
                let r = number(tokens[1], line)
                    .map_err(|_| ParseError::Header { line, detail: format!("r={:?}", tokens[1]) })?;
                if r < 2 {
                    return Err(ParseError::Header { line, detail: format!("r={r} below 2") });
                }
                header = Some((n, r));
            }
            Some((n, r)) => {
                let found = if raw.is_empty() { 0 } else { tokens.len() };
                if found != r {
                    return Err(ParseError::Arity { line, expected: r, found });
                }
                let ids = tokens.iter().map(|t| number(t, line)).collect::<Result<Vec<_>, _>>()?;
                if ids.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(ParseError::Order { line });
                }
                if let Some(&vertex) = ids.iter().find(|&&v| v >= n) {
                    return Err(ParseError::OutOfRange { line, vertex, n });
                }
                edges.push((line, ids));
            }
        }
    }
    let (n, r) = header.ok_or(ParseError::MissingHeader)?;

    edges.sort_by(|a, b| a.1.cmp(&b.1));
    if let Some(w) = edges.windows(2).find(|w| w[0].1 == w[1].1) {
        return Err(ParseError::Duplicate { line: w[0].0.max(w[1].0) });
    }
    Ok(Hypergraph::build(n, r, edges.into_iter().map(|(_, e)| e))?)
}

pub fn read_file(path: impl AsRef<Path>) -> Result<Hypergraph, ParseError> {
    let path = path.as_ref();
    let text =
        fs::read_to_string(path).map_err(|source| ParseError::Io { path: path.display().to_string(), source })?;
    parse(&text)
}

pub fn write_file(h: &Hypergraph, path: impl AsRef<Path>) -> io::Result<()> {
    fs::write(path, h.to_text())
}
