//! The plain-text complex format and its JSON alternative.
//!
//! ```text
//! # optional comments
//! vertices: 4
//! facet: 1 2
//! facet: 3 4
//! ```
//!
//! No facet lines means the void complex; a bare `facet:` line is the empty facet.

use std::fmt::Write as _;

use acmkit_core::{SimplicialComplex, SquarefreeIdeal, VertexSet, MAX_VERTICES};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, ParseError> {
    let mut n: Option<usize> = None;
    let mut facets = Vec::new();
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last = line_no;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some(n) = n else {
            let Some(value) = line.strip_prefix("vertices: ") else {
                return fail(line_no, "expected header `vertices: N`");
            };
            let size: usize = match value.parse() {
                Ok(v) => v,
                Err(_) => return fail(line_no, format!("invalid vertex count `{value}`")),
            };
            if !(1..=MAX_VERTICES).contains(&size) {
                return fail(
                    line_no,
                    format!("vertex count must be in 1..={MAX_VERTICES}"),
                );
            }
            n = Some(size);
            continue;
        };
        if line.starts_with("vertices:") {
            return fail(line_no, "duplicate `vertices:` header");
        }
        let body = if line == "facet:" {
            ""
        } else if let Some(body) = line.strip_prefix("facet: ") {
            body
        } else {
            return fail(line_no, "expected `facet: a b c`");
        };
        let mut facet = VertexSet::EMPTY;
        if !body.is_empty() {
            for token in body.split(' ') {
                let v: usize = match token.parse() {
                    Ok(v) => v,
                    Err(_) => return fail(line_no, format!("invalid vertex `{token}`")),
                };
                if !(1..=n).contains(&v) {
                    return fail(line_no, format!("vertex {v} outside 1..={n}"));
                }
                if facet.contains(v) {
                    return fail(line_no, format!("vertex {v} repeated"));
                }
                facet = facet.with(v);
            }
        }
        facets.push(facet);
    }
    let Some(n) = n else {
        return fail(last + 1, "missing header `vertices: N`");
    };
    SimplicialComplex::normalize(facets, n).map_err(|e| ParseError {
        line: 0,
        message: e.to_string(),
    })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonComplex {
    vertices: usize,
    facets: Vec<Vec<usize>>,
}

/// Parses `{"vertices": N, "facets": [[...], ...]}`.
pub fn parse_complex_json(text: &str) -> Result<SimplicialComplex, ParseError> {
    let doc: JsonComplex = serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line(),
        message: e.to_string(),
    })?;
    if !(1..=MAX_VERTICES).contains(&doc.vertices) {
        return fail(1, format!("vertex count must be in 1..={MAX_VERTICES}"));
    }
    let mut facets = Vec::with_capacity(doc.facets.len());
    for (i, f) in doc.facets.iter().enumerate() {
        let set = VertexSet::try_from_vertices(f.iter().copied(), doc.vertices).map_err(|e| {
            ParseError {
                line: 1,
                message: format!("facet {i}: {e}"),
            }
        })?;
        if set.len() != f.len() {
            return fail(1, format!("facet {i}: repeated vertex"));
        }
        facets.push(set);
    }
    SimplicialComplex::normalize(facets, doc.vertices).map_err(|e| ParseError {
        line: 1,
        message: e.to_string(),
    })
}

fn push_set(out: &mut String, prefix: &str, s: VertexSet) {
    out.push_str(prefix);
    for v in s.iter() {
        let _ = write!(out, " {v}");
    }
    out.push('\n');
}

/// Canonical text form: header, then one `facet:` line per facet in canonical order.
pub fn write_complex(c: &SimplicialComplex) -> String {
    let mut out = format!("vertices: {}\n", c.ambient_size());
    for &f in c.facets() {
        push_set(&mut out, "facet:", f);
    }
    out
}

/// One `gen: a b c` line per minimal generator.
pub fn write_ideal(ideal: &SquarefreeIdeal) -> String {
    let mut out = String::new();
    for &g in ideal.generators() {
        push_set(&mut out, "gen:", g);
    }
    out
}
