//! The graph6 format, short form only (order at most 62).
//!
//! One byte `n + 63` gives the order, then the upper triangle of the
//! adjacency matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`
//! packed six bits per byte (most significant first) with 63 added to each
//! byte. The final byte is padded with zero bits.

use crate::graph::Graph;

use super::{FormatError, ParseWarning};

/// Largest order expressible in the one-byte header.
pub const GRAPH6_MAX_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

/// Parses one graph6 line, returning the graph and any recoverable issues.
pub fn decode_graph6(text: &str) -> Result<(Graph, Vec<ParseWarning>), FormatError> {
    let line = text.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, body) = bytes.split_first().ok_or(FormatError::Empty)?;
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::ByteOutOfRange { byte: b, pos });
        }
    }
    if first == 126 {
        return Err(FormatError::LongFormUnsupported);
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() < needed {
        return Err(FormatError::TooShort {
            needed_bytes: needed,
            found_bytes: body.len(),
        });
    }
    if body.len() > needed {
        return Err(FormatError::TrailingBytes {
            expected_bytes: needed,
            found_bytes: body.len(),
        });
    }

    let mut g = Graph::empty(n).expect("n <= 62");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = body[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }

    let mut warnings = Vec::new();
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        let last = body[needed - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            warnings.push(ParseWarning::NonzeroPadding);
        }
    }
    Ok((g, warnings))
}

/// Parses one graph6 line. Nonzero padding is accepted and logged.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let (g, warnings) = decode_graph6(text)?;
    for w in warnings {
        log::warn!("graph6 `{}`: {w}", text.trim());
    }
    Ok(g)
}

/// Canonical graph6 encoding with zero padding and no header.
pub fn write_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(FormatError::OrderTooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut chunk = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(chunk + 63);
                chunk = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((chunk << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
