use std::ops::Range;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::{Graph, GraphError};

/// 2^21 edge masks at order 7 is the ceiling for exhaustive sweeps.
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Attempts `random_connected` makes before giving up.
pub const MAX_REJECTIONS: u64 = 1_000_000;

/// Every labeled connected graph on `n` vertices, once each, in ascending
/// order of the upper-triangle edge mask (see [`Graph::from_edge_mask`]).
pub fn enumerate_connected(n: usize) -> Result<ConnectedGraphs, GraphError> {
    let masks = mask_count(n)?;
    Ok(ConnectedGraphs {
        order: n,
        masks: 0..masks,
    })
}

fn mask_count(n: usize) -> Result<u64, GraphError> {
    if n == 0 {
        return Err(GraphError::OrderTooSmall {
            family: "connected enumeration",
            min: 1,
            order: 0,
        });
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(GraphError::EnumerationTooLarge {
            order: n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    Ok(1u64 << (n * (n - 1) / 2))
}

/// Stream of connected graphs over a contiguous range of edge masks.
#[derive(Debug, Clone)]
pub struct ConnectedGraphs {
    order: usize,
    masks: Range<u64>,
}

impl ConnectedGraphs {
    /// Restricts the stream to masks in `range`, for partitioning the mask
    /// space across workers.
    pub fn mask_range(n: usize, range: Range<u64>) -> Result<ConnectedGraphs, GraphError> {
        let total = mask_count(n)?;
        let masks = range.start.min(total)..range.end.min(total);
        Ok(ConnectedGraphs { order: n, masks })
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        for mask in self.masks.by_ref() {
            let g = Graph::from_edge_mask(self.order, mask).expect("order checked at construction");
            if g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

/// Samples `G(n, edge_prob)` until the sample is connected.
///
/// The generator is ChaCha8 seeded through `SeedableRng::seed_from_u64`.
/// Each attempt draws one `u64` per vertex pair in graph6 column order
/// `(0,1), (0,2), (1,2), (0,3), ...`; the edge is present when the top 53
/// bits, read as a fraction of 2^53, are below `edge_prob`.
pub fn random_connected(n: usize, edge_prob: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(edge_prob > 0.0 && edge_prob <= 1.0) {
        return Err(GraphError::InvalidProbability(edge_prob));
    }
    if n == 0 {
        return Err(GraphError::OrderTooSmall {
            family: "random connected graph",
            min: 1,
            order: 0,
        });
    }
    Graph::empty(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = 1.0 / (1u64 << 53) as f64;
    for _ in 0..MAX_REJECTIONS {
        let mut g = Graph::empty(n)?;
        for j in 1..n {
            for i in 0..j {
                let draw = (rng.next_u64() >> 11) as f64 * scale;
                if draw < edge_prob {
                    g.add_edge(i, j);
                }
            }
        }
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GraphError::RejectionLimit {
        order: n,
        edge_prob,
        attempts: MAX_REJECTIONS,
    })
}
