//! Interchange formats: graph6, edge lists, certificates and reports.

mod certificate;
mod edgelist;
mod graph6;

pub use certificate::{emit_certificate, parse_certificate, Certificate, CertificateError};
pub use edgelist::{decode_edgelist, parse_edgelist, write_edgelist};
pub use graph6::{decode_graph6, parse_graph6, write_graph6, GRAPH6_MAX_ORDER};

use thiserror::Error;

use crate::harness::TheoremReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} is outside the graph6 range 63..=126")]
    ByteOutOfRange { byte: u8, pos: usize },
    #[error("graph6 body too short: need {needed_bytes} bytes, found {found_bytes}")]
    TooShort {
        needed_bytes: usize,
        found_bytes: usize,
    },
    #[error("graph6 body too long: expected {expected_bytes} bytes, found {found_bytes}")]
    TrailingBytes {
        expected_bytes: usize,
        found_bytes: usize,
    },
    #[error("graph6 long form (order > {GRAPH6_MAX_ORDER}) is not supported")]
    LongFormUnsupported,
    #[error("order {0} is too large for this format")]
    OrderTooLarge(usize),
    #[error("missing `n m` header line")]
    MissingHeader,
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: endpoint {vertex} out of range for order {order}")]
    EndpointOutOfRange {
        line: usize,
        vertex: usize,
        order: usize,
    },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("invalid JSON document: {0}")]
    Json(String),
}

/// Recoverable irregularities found while parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseWarning {
    NonzeroPadding,
    EdgeCountMismatch {
        declared: usize,
        listed: usize,
        distinct: usize,
    },
}

impl std::fmt::Display for ParseWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseWarning::NonzeroPadding => f.write_str("nonzero padding bits ignored"),
            ParseWarning::EdgeCountMismatch {
                declared,
                listed,
                distinct,
            } => write!(
                f,
                "header declares {declared} edges, found {listed} lines and {distinct} distinct edges"
            ),
        }
    }
}

/// Deterministic JSON rendering of a sweep report.
pub fn emit_report(report: &TheoremReport) -> String {
    serde_json::to_string_pretty(report).expect("report serialization is infallible")
}

pub fn parse_report(text: &str) -> Result<TheoremReport, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))
}
