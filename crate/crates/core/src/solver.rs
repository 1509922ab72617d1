//! Exact minimum-cardinality solvers for the four domination invariants.
//!
//! [`solve`] walks subsets by ascending cardinality, lexicographically within
//! each cardinality, and stops at the first set satisfying the predicate; the
//! answer is therefore both minimum and the lexicographically first minimum
//! set. [`solve_naive`] filters every subset with no ordering tricks and is
//! kept as a cross-check.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domination::{movable, Base};
use crate::graph::{Graph, KSubsets, VertexSet};
use crate::io::{Certificate, GRAPH6_MAX_ORDER};

/// Largest order the ascending search accepts. Certificates embed graph6,
/// whose short form stops at 62 vertices.
pub const MAX_SOLVE_ORDER: usize = GRAPH6_MAX_ORDER;
/// Largest order for the unpruned 2^p oracle.
pub const MAX_NAIVE_ORDER: usize = 16;
/// Largest order for [`all_minimum_sets`].
pub const MAX_ALL_MINIMUM_ORDER: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantKind {
    /// Domination number.
    Gamma,
    /// Total domination number.
    GammaT,
    /// 2-movable domination number.
    GammaM2,
    /// 2-movable total domination number.
    GammaMt2,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 4] = [
        InvariantKind::Gamma,
        InvariantKind::GammaT,
        InvariantKind::GammaM2,
        InvariantKind::GammaMt2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            InvariantKind::Gamma => "gamma",
            InvariantKind::GammaT => "gamma_t",
            InvariantKind::GammaM2 => "gamma_m2",
            InvariantKind::GammaMt2 => "gamma_mt2",
        }
    }

    pub fn base(self) -> Base {
        match self {
            InvariantKind::Gamma | InvariantKind::GammaM2 => Base::Dominating,
            InvariantKind::GammaT | InvariantKind::GammaMt2 => Base::Total,
        }
    }

    /// The base predicate pairs must be moved against, for the 2-movable kinds.
    pub fn movable_base(self) -> Option<Base> {
        match self {
            InvariantKind::GammaM2 | InvariantKind::GammaMt2 => Some(self.base()),
            _ => None,
        }
    }

    /// A total dominating set has at least two members.
    pub fn min_cardinality(self) -> usize {
        match self.base() {
            Base::Dominating => 1,
            Base::Total => 2,
        }
    }

    /// Whether `s` is a set of this kind (ignoring minimality).
    pub fn accepts(self, g: &Graph, s: VertexSet, allow_equal_replacements: bool) -> bool {
        if s.is_empty() {
            return false;
        }
        match self.movable_base() {
            Some(base) => movable(g, s, base, allow_equal_replacements),
            None => self.base().holds(g, s),
        }
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InvariantKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        InvariantKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| {
                format!("unknown invariant `{s}` (expected gamma, gamma_t, gamma_m2 or gamma_mt2)")
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("order {order} exceeds the limit of {max} for this solver")]
    OrderTooLarge { order: usize, max: usize },
    #[error("the graph has no vertices")]
    EmptyGraph,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub subsets_examined: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantResult {
    pub kind: InvariantKind,
    /// `None` when no set of this kind exists.
    pub value: Option<usize>,
    pub witness: Option<VertexSet>,
    pub certificate: Certificate,
    pub stats: SearchStats,
}

impl InvariantResult {
    pub fn exists(&self) -> bool {
        self.value.is_some()
    }
}

fn check_order(g: &Graph, max: usize) -> Result<(), SolveError> {
    match g.order() {
        0 => Err(SolveError::EmptyGraph),
        p if p > max => Err(SolveError::OrderTooLarge { order: p, max }),
        _ => Ok(()),
    }
}

fn finish(
    g: &Graph,
    kind: InvariantKind,
    witness: Option<VertexSet>,
    allow_equal_replacements: bool,
    subsets_examined: u64,
    started: Instant,
) -> InvariantResult {
    let certificate = Certificate::new(g, kind, witness, allow_equal_replacements)
        .expect("order is within the graph6 range");
    InvariantResult {
        kind,
        value: witness.map(VertexSet::len),
        witness,
        certificate,
        stats: SearchStats {
            subsets_examined,
            elapsed: started.elapsed(),
        },
    }
}

/// Minimum set of the given kind, or nonexistence.
pub fn solve(
    g: &Graph,
    kind: InvariantKind,
    allow_equal_replacements: bool,
) -> Result<InvariantResult, SolveError> {
    check_order(g, MAX_SOLVE_ORDER)?;
    let started = Instant::now();
    let p = g.order();
    let base = kind.base();
    let mut examined = 0u64;
    // an isolated vertex has an empty open neighborhood, so nothing covers it
    if base == Base::Total && g.has_isolated_vertex() {
        return Ok(finish(
            g,
            kind,
            None,
            allow_equal_replacements,
            examined,
            started,
        ));
    }
    for k in kind.min_cardinality()..=p {
        for s in KSubsets::new(p, k) {
            examined += 1;
            if !base.holds(g, s) {
                continue;
            }
            let found = match kind.movable_base() {
                Some(mb) => movable(g, s, mb, allow_equal_replacements),
                None => true,
            };
            if found {
                return Ok(finish(
                    g,
                    kind,
                    Some(s),
                    allow_equal_replacements,
                    examined,
                    started,
                ));
            }
        }
    }
    Ok(finish(
        g,
        kind,
        None,
        allow_equal_replacements,
        examined,
        started,
    ))
}

/// Unpruned oracle: tests all 2^p subsets, then takes the minimum cardinality
/// and the lexicographically first set of that cardinality.
pub fn solve_naive(
    g: &Graph,
    kind: InvariantKind,
    allow_equal_replacements: bool,
) -> Result<InvariantResult, SolveError> {
    check_order(g, MAX_NAIVE_ORDER)?;
    let started = Instant::now();
    let p = g.order();
    let mut best: Option<VertexSet> = None;
    for mask in 0..1u64 << p {
        let s = VertexSet::from_bits(mask);
        if !kind.accepts(g, s, allow_equal_replacements) {
            continue;
        }
        let better = match best {
            None => true,
            Some(b) => match s.len().cmp(&b.len()) {
                Ordering::Less => true,
                Ordering::Equal => s.lex_cmp(b) == Ordering::Less,
                Ordering::Greater => false,
            },
        };
        if better {
            best = Some(s);
        }
    }
    Ok(finish(
        g,
        kind,
        best,
        allow_equal_replacements,
        1 << p,
        started,
    ))
}

/// Every minimum set of the given kind, in lexicographic order; empty when
/// none exists.
pub fn all_minimum_sets(
    g: &Graph,
    kind: InvariantKind,
    allow_equal_replacements: bool,
) -> Result<Vec<VertexSet>, SolveError> {
    check_order(g, MAX_ALL_MINIMUM_ORDER)?;
    let p = g.order();
    for k in kind.min_cardinality()..=p {
        let found: Vec<VertexSet> = KSubsets::new(p, k)
            .filter(|&s| kind.accepts(g, s, allow_equal_replacements))
            .collect();
        if !found.is_empty() {
            return Ok(found);
        }
    }
    Ok(Vec::new())
}
