//! Exhaustive checking of the join/corona results on enumerated instances.
//!
//! Each checker decides one instance and returns an [`InstanceVerdict`];
//! [`sweep`] runs a checker over an instance family and folds the verdicts
//! into a [`TheoremReport`].

mod checks;
mod projection;
mod sweep;

pub use checks::{
    check_instance, check_lower_bound, check_thm_corona, check_thm_join, check_thm_join_k1,
    check_thm_monotone,
};
pub use projection::{
    check_lemma_projection_in, check_lemma_projection_out, check_projection, ProjectionBranch,
    ProjectionVerdict,
};
pub use sweep::{
    reproduce, sweep, InstanceFamily, SweepOptions, MAX_JOIN_OPERAND_ORDER, MAX_PRODUCT_ORDER,
    MAX_RECORDED, MAX_SINGLE_ORDER,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::io::{Certificate, FormatError};
use crate::solver::SolveError;

/// The statements the harness can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// `γ_m²(G) ≤ γ_mt²(G)`, and every minimum 2-movable TDS is a 2-movable
    /// dominating set.
    Monotone,
    /// `γ_mt²(G) ≥ 2` whenever it exists.
    LowerBound,
    /// `γ_mt²(G + H) = 2` for operands of order at least 2.
    Join,
    /// `γ_mt²(G + K₁) = γ_t(G)` for `G` of order at least 3.
    JoinK1,
    /// `γ_mt²(G ∘ H) = |V(G)| γ_t(H)` under the selected hypothesis mode.
    Corona,
    /// Projections of minimum 2-movable total dominating sets of a corona
    /// onto the attached copies.
    Projection,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::Monotone,
        TheoremId::LowerBound,
        TheoremId::Join,
        TheoremId::JoinK1,
        TheoremId::Corona,
        TheoremId::Projection,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Monotone => "monotone",
            TheoremId::LowerBound => "lower-bound",
            TheoremId::Join => "join",
            TheoremId::JoinK1 => "join-k1",
            TheoremId::Corona => "corona",
            TheoremId::Projection => "projection",
        }
    }

    /// Numbered aliases accepted on the command line.
    pub fn aliases(self) -> &'static [&'static str] {
        match self {
            TheoremId::Monotone => &["thm3.1"],
            TheoremId::LowerBound => &["remark3.2"],
            TheoremId::Join => &["thm3.3"],
            TheoremId::JoinK1 => &["thm3.4"],
            TheoremId::Corona => &["thm3.8"],
            TheoremId::Projection => &["lemma3.6", "lemma3.7"],
        }
    }

    /// Number of operand graphs per instance.
    pub fn arity(self) -> usize {
        match self {
            TheoremId::Monotone | TheoremId::LowerBound | TheoremId::JoinK1 => 1,
            TheoremId::Join | TheoremId::Corona | TheoremId::Projection => 2,
        }
    }

    /// Smallest operand order the statement's hypothesis admits.
    pub fn min_operand_order(self) -> usize {
        match self {
            TheoremId::Join => 2,
            TheoremId::JoinK1 => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let key = s.to_ascii_lowercase();
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == key || t.aliases().contains(&key.as_str()))
            .ok_or_else(|| format!("unknown theorem `{s}`"))
    }
}

/// Which hypothesis the corona check filters on: `γ_t(H) < |V(G)|`
/// (statement), `γ_t(H) < |V(H)|` (what the argument relies on), or both.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HypothesisMode {
    Statement,
    Proof,
    #[default]
    Both,
}

impl FromStr for HypothesisMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "statement" => Ok(HypothesisMode::Statement),
            "proof" => Ok(HypothesisMode::Proof),
            "both" => Ok(HypothesisMode::Both),
            _ => Err(format!(
                "unknown hypothesis mode `{s}` (statement, proof or both)"
            )),
        }
    }
}

impl fmt::Display for HypothesisMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HypothesisMode::Statement => "statement",
            HypothesisMode::Proof => "proof",
            HypothesisMode::Both => "both",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    pub allow_equal_replacements: bool,
    pub mode: HypothesisMode,
    /// Skip instances whose operands are disconnected.
    pub require_connected: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            allow_equal_replacements: false,
            mode: HypothesisMode::Both,
            require_connected: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped(String),
}

/// Result of checking one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceVerdict {
    pub operands: Vec<Graph>,
    pub outcome: Outcome,
    pub expected: Option<usize>,
    pub got: Option<usize>,
    pub certificate: Option<Certificate>,
    pub detail: String,
    /// Side check on the argument behind the statement, recorded as data:
    /// the exhibited pair for joins, the γ_t-set claim for `G + K₁`.
    pub proof_check: Option<bool>,
    pub discrepancy: Option<Discrepancy>,
}

impl InstanceVerdict {
    fn new(operands: &[&Graph]) -> Self {
        InstanceVerdict {
            operands: operands.iter().map(|&g| g.clone()).collect(),
            outcome: Outcome::Pass,
            expected: None,
            got: None,
            certificate: None,
            detail: String::new(),
            proof_check: None,
            discrepancy: None,
        }
    }

    fn skipped(operands: &[&Graph], reason: impl Into<String>) -> Self {
        InstanceVerdict {
            outcome: Outcome::Skipped(reason.into()),
            ..InstanceVerdict::new(operands)
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Fail
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self.outcome, Outcome::Skipped(_))
    }
}

/// A corona instance admitted by exactly one of the two hypothesis readings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub operands: Vec<String>,
    pub gamma_t_h: Option<usize>,
    pub statement_holds: bool,
    pub proof_holds: bool,
    pub expected: Option<usize>,
    pub got: Option<usize>,
    /// Whether the claimed equality held on this instance anyway.
    pub equality_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub operands: Vec<String>,
    pub expected: Option<usize>,
    pub got: Option<usize>,
    pub certificate: Option<Certificate>,
    #[serde(default)]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofCheckTally {
    pub description: String,
    pub holds: u64,
    pub fails: u64,
    /// Operands (graph6) of the first failing instances.
    pub failing: Vec<Vec<String>>,
}

/// Aggregated outcome of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub family: String,
    pub mode: HypothesisMode,
    pub allow_equal_replacements: bool,
    pub require_connected: bool,
    pub instances_total: u64,
    pub instances_checked: u64,
    pub instances_skipped: u64,
    pub passed: u64,
    /// All failures; `counterexamples` keeps the first [`MAX_RECORDED`].
    pub counterexample_count: u64,
    pub counterexamples: Vec<Counterexample>,
    pub discrepancies: Vec<Discrepancy>,
    pub proof_check: Option<ProofCheckTally>,
    /// Wall-clock seconds.
    pub elapsed: f64,
}

impl TheoremReport {
    pub fn is_clean(&self) -> bool {
        self.counterexample_count == 0
    }

    /// The report with timing removed, for reproducibility comparisons.
    pub fn without_timing(&self) -> TheoremReport {
        TheoremReport {
            elapsed: 0.0,
            ..self.clone()
        }
    }
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{theorem} takes {expected} operand(s), got {got}")]
    Arity {
        theorem: TheoremId,
        expected: usize,
        got: usize,
    },
    #[error("family too large for {theorem}: {limit}")]
    FamilyTooLarge { theorem: TheoremId, limit: String },
    #[error("worker pool: {0}")]
    Pool(String),
}
