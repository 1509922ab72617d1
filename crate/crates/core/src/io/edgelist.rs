//! Plain edge lists: a header line `n m`, then `m` lines `u v` with 0-based
//! endpoints. `#` starts a comment; blank lines are ignored.

use std::fmt::Write as _;

use crate::graph::{Graph, MAX_ORDER};

use super::{FormatError, ParseWarning};

fn fields(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn two_numbers(text: &str, line: usize) -> Result<(usize, usize), FormatError> {
    let malformed = |reason: &str| FormatError::Malformed {
        line,
        reason: reason.to_string(),
    };
    let mut it = text.split_whitespace();
    let a = it
        .next()
        .ok_or_else(|| malformed("expected two integers"))?;
    let b = it
        .next()
        .ok_or_else(|| malformed("expected two integers"))?;
    if it.next().is_some() {
        return Err(malformed("expected exactly two integers"));
    }
    let a = a
        .parse()
        .map_err(|_| malformed(&format!("`{a}` is not a non-negative integer")))?;
    let b = b
        .parse()
        .map_err(|_| malformed(&format!("`{b}` is not a non-negative integer")))?;
    Ok((a, b))
}

pub fn decode_edgelist(text: &str) -> Result<(Graph, Vec<ParseWarning>), FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, fields(l)))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let (n, m) = two_numbers(header, header_line)?;
    if n > MAX_ORDER {
        return Err(FormatError::OrderTooLarge(n));
    }
    let mut g = Graph::empty(n).expect("order checked");
    let mut listed = 0;
    for (line, body) in lines {
        let (u, v) = two_numbers(body, line)?;
        for w in [u, v] {
            if w >= n {
                return Err(FormatError::EndpointOutOfRange {
                    line,
                    vertex: w,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(FormatError::Loop { line, vertex: u });
        }
        g.add_edge(u, v);
        listed += 1;
    }
    let mut warnings = Vec::new();
    if listed != m || g.size() != m {
        warnings.push(ParseWarning::EdgeCountMismatch {
            declared: m,
            listed,
            distinct: g.size(),
        });
    }
    Ok((g, warnings))
}

/// Parses an edge list; count mismatches are logged, not rejected.
pub fn parse_edgelist(text: &str) -> Result<Graph, FormatError> {
    let (g, warnings) = decode_edgelist(text)?;
    for w in warnings {
        log::warn!("edge list: {w}");
    }
    Ok(g)
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
