use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domination::{Base, MoveWitness};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::solver::InvariantKind;

use super::{parse_graph6, write_graph6, FormatError};

/// Self-contained evidence for an invariant value.
///
/// Serialized keys appear in declaration order. `moves` holds one witness
/// per unordered pair of `witness` for the 2-movable kinds and is empty
/// otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: InvariantKind,
    pub graph6: String,
    pub value: Option<usize>,
    pub nonexistent: bool,
    pub witness: Vec<VertexId>,
    pub moves: Vec<MoveWitness>,
    #[serde(default)]
    pub allow_equal_replacements: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("embedded graph: {0}")]
    Graph(#[from] FormatError),
    #[error(
        "value {value:?} inconsistent with nonexistent = {nonexistent} and witness size {size}"
    )]
    Inconsistent {
        value: Option<usize>,
        nonexistent: bool,
        size: usize,
    },
    #[error("witness must be strictly ascending vertex ids below the order")]
    BadWitness,
    #[error("witness fails the {0} predicate")]
    PredicateFails(InvariantKind),
    #[error("pair ({x}, {y}) has {count} move records, expected exactly one")]
    PairCoverage {
        x: VertexId,
        y: VertexId,
        count: usize,
    },
    #[error("move for pair ({x}, {y}) does not re-validate")]
    InvalidMove { x: VertexId, y: VertexId },
    #[error("{0} certificates carry no moves")]
    UnexpectedMoves(InvariantKind),
}

impl Certificate {
    /// Builds the certificate for a solved instance. Move witnesses are
    /// recomputed from the witness set.
    pub fn new(
        g: &Graph,
        kind: InvariantKind,
        witness: Option<VertexSet>,
        allow_equal_replacements: bool,
    ) -> Result<Certificate, FormatError> {
        let graph6 = write_graph6(g)?;
        let (value, set) = match witness {
            Some(s) => (Some(s.len()), s),
            None => (None, VertexSet::EMPTY),
        };
        let moves = match (witness, kind.movable_base()) {
            (Some(s), Some(base)) => {
                crate::domination::is_2movable(g, s, base, allow_equal_replacements)
                    .witnesses()
                    .map(<[_]>::to_vec)
                    .unwrap_or_default()
            }
            _ => Vec::new(),
        };
        Ok(Certificate {
            kind,
            graph6,
            value,
            nonexistent: witness.is_none(),
            witness: set.to_vec(),
            moves,
            allow_equal_replacements,
        })
    }

    pub fn witness_set(&self) -> VertexSet {
        self.witness.iter().copied().collect()
    }

    /// Re-checks the certificate against its embedded graph.
    ///
    /// Nonexistence claims are only checked for shape (empty witness and
    /// moves); confirming them needs a fresh exhaustive search.
    pub fn verify(&self) -> Result<Graph, CertificateError> {
        let g = parse_graph6(&self.graph6)?;
        let size = self.witness.len();
        let consistent = match (self.value, self.nonexistent) {
            (None, true) => size == 0 && self.moves.is_empty(),
            (Some(v), false) => v == size,
            _ => false,
        };
        if !consistent {
            return Err(CertificateError::Inconsistent {
                value: self.value,
                nonexistent: self.nonexistent,
                size,
            });
        }
        if self.nonexistent {
            return Ok(g);
        }
        if !self.witness.windows(2).all(|w| w[0] < w[1])
            || self.witness.iter().any(|&v| v >= g.order())
        {
            return Err(CertificateError::BadWitness);
        }
        let t = self.witness_set();
        if !self.kind.base().holds(&g, t) {
            return Err(CertificateError::PredicateFails(self.kind));
        }
        let Some(base) = self.kind.movable_base() else {
            if !self.moves.is_empty() {
                return Err(CertificateError::UnexpectedMoves(self.kind));
            }
            return Ok(g);
        };
        self.verify_moves(&g, t, base)?;
        Ok(g)
    }

    fn verify_moves(&self, g: &Graph, t: VertexSet, base: Base) -> Result<(), CertificateError> {
        for m in &self.moves {
            if !m.is_valid_for(g, t, base, self.allow_equal_replacements) {
                return Err(CertificateError::InvalidMove { x: m.x, y: m.y });
            }
        }
        for x in t {
            for y in t.iter().filter(|&y| y > x) {
                let count = self
                    .moves
                    .iter()
                    .filter(|m| (m.x, m.y) == (x, y) || (m.x, m.y) == (y, x))
                    .count();
                if count != 1 {
                    return Err(CertificateError::PairCoverage { x, y, count });
                }
            }
        }
        Ok(())
    }
}

/// Deterministic JSON rendering of a certificate.
pub fn emit_certificate(c: &Certificate) -> String {
    serde_json::to_string_pretty(c).expect("certificate serialization is infallible")
}

pub fn parse_certificate(text: &str) -> Result<Certificate, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::MoveAction;

    #[test]
    fn k4_certificate() {
        let k4 = Graph::complete(4).unwrap();
        let c = Certificate::new(
            &k4,
            InvariantKind::GammaMt2,
            Some(VertexSet::from([0, 1])),
            false,
        )
        .unwrap();
        assert_eq!(c.moves, vec![MoveWitness::replace(0, 1, 2, 3)]);
        let text = emit_certificate(&c);
        assert!(text.contains("\"action\": \"replace\""));
        assert_eq!(parse_certificate(&text).unwrap(), c);
        c.verify().unwrap();
    }

    #[test]
    fn nonexistent_and_plain_kinds() {
        let p4 = Graph::path(4).unwrap();
        let c = Certificate::new(&p4, InvariantKind::GammaMt2, None, false).unwrap();
        assert!(c.nonexistent && c.witness.is_empty() && c.value.is_none());
        let json: serde_json::Value = serde_json::from_str(&emit_certificate(&c)).unwrap();
        assert_eq!(json["nonexistent"], true);
        assert_eq!(json["value"], serde_json::Value::Null);
        c.verify().unwrap();

        let c = Certificate::new(
            &p4,
            InvariantKind::GammaT,
            Some(VertexSet::from([1, 2])),
            false,
        )
        .unwrap();
        assert!(c.moves.is_empty());
        c.verify().unwrap();
    }

    #[test]
    fn key_order_is_fixed() {
        let k2 = Graph::complete(2).unwrap();
        let c = Certificate::new(
            &k2,
            InvariantKind::GammaT,
            Some(VertexSet::from([0, 1])),
            false,
        )
        .unwrap();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(
            text,
            r#"{"kind":"gamma_t","graph6":"A_","value":2,"nonexistent":false,"witness":[0,1],"moves":[],"allow_equal_replacements":false}"#
        );
    }

    #[test]
    fn tampering_is_detected() {
        let k4 = Graph::complete(4).unwrap();
        let good = Certificate::new(
            &k4,
            InvariantKind::GammaMt2,
            Some(VertexSet::from([0, 1])),
            false,
        )
        .unwrap();

        let mut c = good.clone();
        c.value = Some(3);
        assert!(matches!(
            c.verify(),
            Err(CertificateError::Inconsistent { .. })
        ));

        let mut c = good.clone();
        c.moves[0].v = Some(2);
        assert_eq!(
            c.verify().unwrap_err(),
            CertificateError::InvalidMove { x: 0, y: 1 }
        );

        let mut c = good.clone();
        c.moves.clear();
        assert!(matches!(
            c.verify(),
            Err(CertificateError::PairCoverage { count: 0, .. })
        ));

        let mut c = good.clone();
        c.moves.push(c.moves[0]);
        assert!(matches!(
            c.verify(),
            Err(CertificateError::PairCoverage { count: 2, .. })
        ));

        let mut c = good.clone();
        c.witness = vec![0];
        c.value = Some(1);
        assert_eq!(
            c.verify().unwrap_err(),
            CertificateError::PredicateFails(InvariantKind::GammaMt2)
        );

        let mut c = good;
        c.moves[0].action = MoveAction::Remove;
        assert!(c.verify().is_err());
    }
}
