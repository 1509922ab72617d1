//! Fixture graphs shared by the benchmarks.

use movdom::Graph;

/// `C3 ∘ P3`, twelve vertices.
pub fn corona_c3_p3() -> Graph {
    let (g, _) = Graph::cycle(3)
        .and_then(|c3| c3.corona(&Graph::path(3)?))
        .expect("valid operands");
    g
}

/// Seeded random connected graphs of the given order.
pub fn random_graphs(order: usize, count: u64, edge_prob: f64) -> Vec<Graph> {
    (0..count)
        .map(|seed| {
            movdom::random_connected(order, edge_prob, seed)
                .expect("sample within the rejection limit")
        })
        .collect()
}
