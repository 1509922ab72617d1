use std::fmt;
use std::time::Instant;

use rayon::prelude::*;

use crate::graph::{
    enumerate_connected, random_connected, ConnectedGraphs, Graph, MAX_ENUMERATION_ORDER,
};
use crate::io::{parse_graph6, write_graph6};

use super::{
    check_instance, CheckConfig, Counterexample, HarnessError, InstanceVerdict, Outcome,
    ProofCheckTally, TheoremId, TheoremReport,
};

/// Largest operand order for single-operand theorems on random families
/// (enumerated families stop at [`MAX_ENUMERATION_ORDER`]).
pub const MAX_SINGLE_ORDER: usize = 16;
/// Largest operand order in join sweeps.
pub const MAX_JOIN_OPERAND_ORDER: usize = 6;
/// Largest corona order in corona and projection sweeps.
pub const MAX_PRODUCT_ORDER: usize = 16;
/// Counterexamples (and failing proof checks) kept verbatim in a report.
pub const MAX_RECORDED: usize = 1000;

/// Where operand tuples come from.
#[derive(Debug, Clone, PartialEq)]
pub enum InstanceFamily {
    /// Every labeled connected graph with order in the range; ordered pairs
    /// of them for two-operand theorems.
    Connected { min_order: usize, max_order: usize },
    /// Ordered pairs of labeled connected graphs with fixed orders.
    Orders { left: usize, right: usize },
    /// `count` seeded random connected operands. Instance `i` uses order
    /// `orders[i % len]` and seed `seed + i` (single operand), or orders
    /// `orders[i % len]`, `orders[(i / len) % len]` and seeds `seed + 2i`,
    /// `seed + 2i + 1` (pairs).
    Random {
        orders: Vec<usize>,
        count: usize,
        edge_prob: f64,
        seed: u64,
    },
    /// Explicit operand tuples.
    Explicit(Vec<Vec<Graph>>),
}

impl fmt::Display for InstanceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceFamily::Connected {
                min_order,
                max_order,
            } => {
                write!(f, "connected, order {min_order}..={max_order}")
            }
            InstanceFamily::Orders { left, right } => {
                write!(f, "connected pairs, orders ({left}, {right})")
            }
            InstanceFamily::Random {
                orders,
                count,
                edge_prob,
                seed,
            } => write!(
                f,
                "random connected x{count}, orders {orders:?}, p = {edge_prob}, seed {seed}"
            ),
            InstanceFamily::Explicit(v) => write!(f, "explicit, {} instances", v.len()),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepOptions {
    pub config: CheckConfig,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

fn too_large(theorem: TheoremId, limit: impl Into<String>) -> HarnessError {
    HarnessError::FamilyTooLarge {
        theorem,
        limit: limit.into(),
    }
}

fn check_operand_orders(theorem: TheoremId, orders: &[(usize, usize)]) -> Result<(), HarnessError> {
    for &(g, h) in orders {
        match theorem {
            TheoremId::Join if g.max(h) > MAX_JOIN_OPERAND_ORDER => {
                return Err(too_large(
                    theorem,
                    format!(
                        "operand orders must be at most {MAX_JOIN_OPERAND_ORDER}, got {}",
                        g.max(h)
                    ),
                ));
            }
            TheoremId::Corona | TheoremId::Projection if g * (1 + h) > MAX_PRODUCT_ORDER => {
                return Err(too_large(
                    theorem,
                    format!(
                        "corona order |G|(1+|H|) must be at most {MAX_PRODUCT_ORDER}, got {} for ({g}, {h})",
                        g * (1 + h)
                    ),
                ));
            }
            _ => {}
        }
    }
    Ok(())
}

fn validate(theorem: TheoremId, family: &InstanceFamily) -> Result<(), HarnessError> {
    let arity = theorem.arity();
    match family {
        InstanceFamily::Connected {
            min_order,
            max_order,
        } => {
            if *max_order > MAX_ENUMERATION_ORDER {
                return Err(too_large(
                    theorem,
                    format!("enumeration order must be at most {MAX_ENUMERATION_ORDER}, got {max_order}"),
                ));
            }
            if *min_order == 0 || min_order > max_order {
                return Err(HarnessError::Precondition(format!(
                    "empty order range {min_order}..={max_order}"
                )));
            }
            if arity == 2 {
                check_operand_orders(theorem, &[(*max_order, *max_order)])?;
            }
        }
        InstanceFamily::Orders { left, right } => {
            if arity != 2 {
                return Err(HarnessError::Precondition(format!(
                    "{theorem} takes one operand; fixed-order pairs do not apply"
                )));
            }
            if (*left).max(*right) > MAX_ENUMERATION_ORDER || left.min(right) == &0 {
                return Err(too_large(
                    theorem,
                    format!("operand orders must lie in 1..={MAX_ENUMERATION_ORDER}"),
                ));
            }
            check_operand_orders(theorem, &[(*left, *right)])?;
        }
        InstanceFamily::Random {
            orders, edge_prob, ..
        } => {
            if orders.is_empty() || orders.contains(&0) {
                return Err(HarnessError::Precondition(
                    "random family needs positive orders".into(),
                ));
            }
            if !(*edge_prob > 0.0 && *edge_prob <= 1.0) {
                return Err(HarnessError::Precondition(format!(
                    "edge probability {edge_prob} outside (0, 1]"
                )));
            }
            let max = *orders.iter().max().expect("non-empty");
            if arity == 1 && max > MAX_SINGLE_ORDER {
                return Err(too_large(
                    theorem,
                    format!("operand order must be at most {MAX_SINGLE_ORDER}, got {max}"),
                ));
            }
            if arity == 2 {
                let pairs: Vec<_> = orders
                    .iter()
                    .flat_map(|&g| orders.iter().map(move |&h| (g, h)))
                    .collect();
                check_operand_orders(theorem, &pairs)?;
            }
        }
        InstanceFamily::Explicit(tuples) => {
            for t in tuples {
                if t.len() != arity {
                    return Err(HarnessError::Arity {
                        theorem,
                        expected: arity,
                        got: t.len(),
                    });
                }
                if arity == 1 && t[0].order() > MAX_SINGLE_ORDER {
                    return Err(too_large(
                        theorem,
                        format!("operand order must be at most {MAX_SINGLE_ORDER}"),
                    ));
                }
                if arity == 2 {
                    check_operand_orders(theorem, &[(t[0].order(), t[1].order())])?;
                }
            }
        }
    }
    Ok(())
}

/// Per-chunk accumulator; chunks are merged in enumeration order.
#[derive(Debug, Default)]
struct Tally {
    total: u64,
    checked: u64,
    skipped: u64,
    passed: u64,
    failures: u64,
    counterexamples: Vec<Counterexample>,
    discrepancies: Vec<super::Discrepancy>,
    proof_holds: u64,
    proof_fails: u64,
    proof_failing: Vec<Vec<String>>,
}

fn graph6_all(operands: &[Graph]) -> Result<Vec<String>, HarnessError> {
    operands
        .iter()
        .map(|g| write_graph6(g).map_err(HarnessError::from))
        .collect()
}

impl Tally {
    fn record(&mut self, v: InstanceVerdict) -> Result<(), HarnessError> {
        self.total += 1;
        if let Some(d) = v.discrepancy.clone() {
            self.discrepancies.push(d);
        }
        match v.outcome {
            Outcome::Skipped(_) => {
                self.skipped += 1;
                return Ok(());
            }
            Outcome::Pass => self.passed += 1,
            Outcome::Fail => {
                self.failures += 1;
                if self.counterexamples.len() < MAX_RECORDED {
                    self.counterexamples.push(Counterexample {
                        operands: graph6_all(&v.operands)?,
                        expected: v.expected,
                        got: v.got,
                        certificate: v.certificate.clone(),
                        detail: v.detail.clone(),
                    });
                }
            }
        }
        self.checked += 1;
        match v.proof_check {
            Some(true) => self.proof_holds += 1,
            Some(false) => {
                self.proof_fails += 1;
                if self.proof_failing.len() < MAX_RECORDED {
                    self.proof_failing.push(graph6_all(&v.operands)?);
                }
            }
            None => {}
        }
        Ok(())
    }

    fn merge(&mut self, other: Tally) {
        self.total += other.total;
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.passed += other.passed;
        self.failures += other.failures;
        let room = MAX_RECORDED.saturating_sub(self.counterexamples.len());
        self.counterexamples
            .extend(other.counterexamples.into_iter().take(room));
        self.discrepancies.extend(other.discrepancies);
        self.proof_holds += other.proof_holds;
        self.proof_fails += other.proof_fails;
        let room = MAX_RECORDED.saturating_sub(self.proof_failing.len());
        self.proof_failing
            .extend(other.proof_failing.into_iter().take(room));
    }
}

fn run_tuples<I>(theorem: TheoremId, cfg: &CheckConfig, tuples: I) -> Result<Tally, HarnessError>
where
    I: IntoIterator<Item = Vec<Graph>>,
{
    let mut tally = Tally::default();
    for operands in tuples {
        tally.record(check_instance(theorem, &operands, cfg)?)?;
    }
    Ok(tally)
}

const MASK_CHUNK: u64 = 1 << 12;

fn connected_in(min_order: usize, max_order: usize) -> Result<Vec<Graph>, HarnessError> {
    let mut out = Vec::new();
    for n in min_order..=max_order {
        out.extend(enumerate_connected(n)?);
    }
    Ok(out)
}

fn collect_chunks(
    theorem: TheoremId,
    family: &InstanceFamily,
    cfg: &CheckConfig,
) -> Result<Vec<Tally>, HarnessError> {
    let arity = theorem.arity();
    match family {
        InstanceFamily::Connected {
            min_order,
            max_order,
        } if arity == 1 => {
            // partition each order's mask space into contiguous ranges
            let ranges: Vec<(usize, u64)> = (*min_order..=*max_order)
                .flat_map(|n| {
                    let masks = 1u64 << (n * (n - 1) / 2);
                    (0..masks.div_ceil(MASK_CHUNK)).map(move |c| (n, c * MASK_CHUNK))
                })
                .collect();
            ranges
                .into_par_iter()
                .map(|(n, start)| {
                    let graphs = ConnectedGraphs::mask_range(n, start..start + MASK_CHUNK)?;
                    run_tuples(theorem, cfg, graphs.map(|g| vec![g]))
                })
                .collect()
        }
        InstanceFamily::Connected {
            min_order,
            max_order,
        } => {
            let all = connected_in(*min_order, *max_order)?;
            pairs(theorem, cfg, &all, &all)
        }
        InstanceFamily::Orders { left, right } => {
            let lefts: Vec<Graph> = enumerate_connected(*left)?.collect();
            let rights: Vec<Graph> = enumerate_connected(*right)?.collect();
            pairs(theorem, cfg, &lefts, &rights)
        }
        InstanceFamily::Random {
            orders,
            count,
            edge_prob,
            seed,
        } => (0..*count)
            .into_par_iter()
            .map(|i| {
                let len = orders.len();
                let operands = if arity == 1 {
                    vec![random_connected(
                        orders[i % len],
                        *edge_prob,
                        seed.wrapping_add(i as u64),
                    )?]
                } else {
                    let base = seed.wrapping_add(2 * i as u64);
                    vec![
                        random_connected(orders[i % len], *edge_prob, base)?,
                        random_connected(
                            orders[(i / len) % len],
                            *edge_prob,
                            base.wrapping_add(1),
                        )?,
                    ]
                };
                run_tuples(theorem, cfg, [operands])
            })
            .collect(),
        InstanceFamily::Explicit(tuples) => tuples
            .par_iter()
            .map(|t| run_tuples(theorem, cfg, [t.clone()]))
            .collect(),
    }
}

fn pairs(
    theorem: TheoremId,
    cfg: &CheckConfig,
    lefts: &[Graph],
    rights: &[Graph],
) -> Result<Vec<Tally>, HarnessError> {
    lefts
        .par_iter()
        .map(|g| {
            run_tuples(
                theorem,
                cfg,
                rights.iter().map(|h| vec![g.clone(), h.clone()]),
            )
        })
        .collect()
}

/// Checks `theorem` on every instance of `family`.
///
/// The report is independent of scheduling: chunks are merged in
/// enumeration order whatever order they complete in.
pub fn sweep(
    theorem: TheoremId,
    family: &InstanceFamily,
    options: &SweepOptions,
) -> Result<TheoremReport, HarnessError> {
    validate(theorem, family)?;
    let started = Instant::now();
    let cfg = options.config;
    let chunks = match options.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| HarnessError::Pool(e.to_string()))?
            .install(|| collect_chunks(theorem, family, &cfg))?,
        None => collect_chunks(theorem, family, &cfg)?,
    };
    let mut tally = Tally::default();
    for chunk in chunks {
        tally.merge(chunk);
    }

    let proof_check = match theorem {
        TheoremId::Join => {
            Some("the pair {least vertex of G, least vertex of H} is a 2-movable TDS of G+H")
        }
        TheoremId::JoinK1 => Some("every gamma_t-set of G is a 2-movable TDS of G"),
        _ => None,
    }
    .map(|description| ProofCheckTally {
        description: description.to_string(),
        holds: tally.proof_holds,
        fails: tally.proof_fails,
        failing: tally.proof_failing,
    });

    Ok(TheoremReport {
        theorem,
        family: family.to_string(),
        mode: cfg.mode,
        allow_equal_replacements: cfg.allow_equal_replacements,
        require_connected: cfg.require_connected,
        instances_total: tally.total,
        instances_checked: tally.checked,
        instances_skipped: tally.skipped,
        passed: tally.passed,
        counterexample_count: tally.failures,
        counterexamples: tally.counterexamples,
        discrepancies: tally.discrepancies,
        proof_check,
        elapsed: started.elapsed().as_secs_f64(),
    })
}

/// Rebuilds a counterexample's operands from graph6 and re-checks it.
pub fn reproduce(
    theorem: TheoremId,
    counterexample: &Counterexample,
    cfg: &CheckConfig,
) -> Result<InstanceVerdict, HarnessError> {
    let operands = counterexample
        .operands
        .iter()
        .map(|s| parse_graph6(s))
        .collect::<Result<Vec<_>, _>>()?;
    check_instance(theorem, &operands, cfg)
}
