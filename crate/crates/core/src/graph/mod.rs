//! Simple undirected graphs on at most 64 vertices with bitset adjacency rows.

mod enumerate;
mod products;
mod vertex_set;

pub use enumerate::{
    enumerate_connected, random_connected, ConnectedGraphs, MAX_ENUMERATION_ORDER, MAX_REJECTIONS,
};
pub use products::CoronaLayout;
pub use vertex_set::{Iter, KSubsets, VertexId, VertexSet};

use thiserror::Error;

/// Largest supported order: one adjacency row is one machine word.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("edge endpoint {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("{family} requires order at least {min}, got {order}")]
    OrderTooSmall {
        family: &'static str,
        min: usize,
        order: usize,
    },
    #[error("connected enumeration is limited to order {max}, got {order}")]
    EnumerationTooLarge { order: usize, max: usize },
    #[error("edge probability must lie in (0, 1], got {0}")]
    InvalidProbability(f64),
    #[error("no connected sample after {attempts} rejections (order {order}, p = {edge_prob})")]
    RejectionLimit {
        order: usize,
        edge_prob: f64,
        attempts: u64,
    },
}

/// Standard labeled families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Empty,
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            "star" => Ok(Family::Star),
            "empty" => Ok(Family::Empty),
            _ => Err(format!("unknown graph family `{s}`")),
        }
    }
}

/// An immutable simple graph. Rows are symmetric and irreflexive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new<I>(order: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::empty(order)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn empty(order: usize) -> Result<Graph, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(order));
        }
        Ok(Graph {
            rows: vec![VertexSet::EMPTY; order],
        })
    }

    pub fn family(kind: Family, n: usize) -> Result<Graph, GraphError> {
        let min = if kind == Family::Cycle { 3 } else { 1 };
        if n < min {
            let family = match kind {
                Family::Path => "path",
                Family::Cycle => "cycle",
                Family::Complete => "complete",
                Family::Star => "star",
                Family::Empty => "empty",
            };
            return Err(GraphError::OrderTooSmall {
                family,
                min,
                order: n,
            });
        }
        let mut g = Graph::empty(n)?;
        match kind {
            Family::Path => (1..n).for_each(|v| g.add_edge(v - 1, v)),
            Family::Cycle => {
                (1..n).for_each(|v| g.add_edge(v - 1, v));
                g.add_edge(n - 1, 0);
            }
            Family::Complete => {
                for v in 0..n {
                    g.rows[v] = VertexSet::full(n).without(v);
                }
            }
            Family::Star => (1..n).for_each(|v| g.add_edge(0, v)),
            Family::Empty => {}
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        Graph::family(Family::Path, n)
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        Graph::family(Family::Cycle, n)
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        Graph::family(Family::Complete, n)
    }

    pub fn star(n: usize) -> Result<Graph, GraphError> {
        Graph::family(Family::Star, n)
    }

    /// Decodes an upper-triangle edge mask. Bit `j(j-1)/2 + i` is the edge
    /// `(i, j)` with `i < j`, the same column order graph6 uses.
    pub fn from_edge_mask(order: usize, mask: u64) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(order)?;
        let mut bit = 0;
        for j in 1..order {
            for i in 0..j {
                if bit < 64 && mask >> bit & 1 == 1 {
                    g.add_edge(i, j);
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_edge_mask`]; `None` when the triangle has
    /// more than 64 positions (order > 11).
    pub fn edge_mask(&self) -> Option<u64> {
        let n = self.order();
        if n * n.saturating_sub(1) / 2 > 64 {
            return None;
        }
        let mut mask = 0u64;
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        Some(mask)
    }

    pub(crate) fn add_edge(&mut self, u: VertexId, v: VertexId) {
        debug_assert!(u != v);
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    /// Number of vertices `p`.
    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Number of edges `q`.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> VertexSet {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order() && self.rows[u].contains(v)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rows[v].len()
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.rows.iter().any(|r| r.is_empty())
    }

    /// True iff a traversal from vertex 0 reaches every vertex. The
    /// order-zero graph is reported as disconnected.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return false;
        }
        let all = self.vertices();
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next | self.rows[v];
            }
            frontier = next - seen;
            seen = seen | frontier;
        }
        seen == all
    }

    /// The subgraph induced by `vertices`, relabeled to `0..len` in
    /// ascending order of the original ids.
    pub fn induced(&self, vertices: VertexSet) -> Graph {
        let ids = vertices.to_vec();
        let mut rows = vec![VertexSet::EMPTY; ids.len()];
        for (a, &u) in ids.iter().enumerate() {
            for (b, &v) in ids.iter().enumerate() {
                if self.has_edge(u, v) {
                    rows[a].insert(b);
                }
            }
        }
        Graph { rows }
    }

    /// Checks the structural invariants. Every constructor upholds them;
    /// this exists for tests and for consumers that deserialize by hand.
    pub fn is_well_formed(&self) -> bool {
        let n = self.order();
        let all = self.vertices();
        self.rows.iter().enumerate().all(|(u, row)| {
            !row.contains(u)
                && row.is_subset(all)
                && row.iter().all(|v| v < n && self.rows[v].contains(u))
        })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(p={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}
