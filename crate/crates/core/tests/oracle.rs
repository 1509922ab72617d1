//! Library results against the dense reference implementations.

mod common;

use common::{members, naive_graph6, to_bools, Dense};
use movdom::{
    all_minimum_sets, enumerate_connected, find_pair_move, is_2movable, is_dominating,
    is_total_dominating, parse_graph6, solve, write_graph6, Base, Graph, InvariantKind, Movability,
    MoveWitness, VertexSet,
};
use proptest::prelude::*;

/// Lexicographically first replacement pair by exhaustive listing.
fn first_replacement(d: &Dense, t: &[usize], x: usize, y: usize) -> Option<(usize, usize)> {
    let s = members(d.n, t);
    let mut rest = s.clone();
    rest[x] = false;
    rest[y] = false;
    for u in 0..d.n {
        for v in 0..d.n {
            if s[u] || s[v] || u == v || !d.adj[x][u] || !d.adj[y][v] {
                continue;
            }
            let mut c = rest.clone();
            c[u] = true;
            c[v] = true;
            if d.total(&c) {
                return Some((u, v));
            }
        }
    }
    None
}

#[test]
fn c4_pair_totally_dominates() {
    let c4 = Graph::cycle(4).unwrap();
    assert!(Dense::from_graph(&c4).total(&members(4, &[0, 1])));
    assert!(is_total_dominating(&c4, VertexSet::from([0, 1])));
}

#[test]
fn pair_move_examples_match_exhaustive_listing() {
    let k4 = Graph::complete(4).unwrap();
    let fan = Graph::path(3)
        .unwrap()
        .join(&Graph::complete(1).unwrap())
        .unwrap();
    let p4 = Graph::path(4).unwrap();

    assert_eq!(
        first_replacement(&Dense::from_graph(&k4), &[0, 1], 0, 1),
        Some((2, 3))
    );
    assert_eq!(
        first_replacement(&Dense::from_graph(&fan), &[0, 1], 0, 1),
        Some((3, 2))
    );
    assert_eq!(
        first_replacement(&Dense::from_graph(&p4), &[0, 1], 0, 1),
        None
    );

    assert_eq!(
        find_pair_move(&k4, VertexSet::from([0, 1]), 0, 1, Base::Total, false).unwrap(),
        Some(MoveWitness::replace(0, 1, 2, 3))
    );
    assert_eq!(
        find_pair_move(&fan, VertexSet::from([0, 1]), 0, 1, Base::Total, false).unwrap(),
        Some(MoveWitness::replace(0, 1, 3, 2))
    );
}

#[test]
fn p4_middle_pair_is_stuck() {
    let p4 = Graph::path(4).unwrap();
    let d = Dense::from_graph(&p4);
    let s = members(4, &[1, 2]);
    assert!(d.total(&s));
    assert!(!d.pair_ok(&s, 1, 2, true, false));
    assert!(!d.pair_ok(&s, 1, 2, true, true));
    assert_eq!(
        is_2movable(&p4, VertexSet::from([1, 2]), Base::Total, false),
        Movability::Stuck { x: 1, y: 2 }
    );
}

#[test]
fn k4_full_set_moves_by_removal() {
    let k4 = Graph::complete(4).unwrap();
    let d = Dense::from_graph(&k4);
    assert!(d.movable(&[true; 4], true, false));
    let m = is_2movable(&k4, k4.vertices(), Base::Total, false);
    assert_eq!(m.witnesses().unwrap().len(), 6);
}

#[test]
fn frozen_invariant_values() {
    // (graph, kind, value) — values computed once by the exhaustive oracle below
    let c5 = Graph::cycle(5).unwrap();
    let c6 = Graph::cycle(6).unwrap();
    let p3 = Graph::path(3).unwrap();
    let p4 = Graph::path(4).unwrap();
    let star = Graph::star(4).unwrap();
    let k2 = Graph::complete(2).unwrap();
    let cases: [(&Graph, InvariantKind, Option<usize>); 8] = [
        (&p4, InvariantKind::GammaMt2, None),
        (&c6, InvariantKind::GammaT, Some(4)),
        (&c5, InvariantKind::GammaT, Some(3)),
        (&p3, InvariantKind::GammaT, Some(2)),
        (&star, InvariantKind::GammaT, Some(2)),
        (&k2, InvariantKind::GammaMt2, None),
        (&p3, InvariantKind::Gamma, Some(1)),
        (&k2, InvariantKind::GammaT, Some(2)),
    ];
    for (g, kind, value) in cases {
        let oracle = Dense::from_graph(g).minimum(kind, false).map(|m| m.len());
        assert_eq!(
            oracle, value,
            "oracle disagrees with frozen value for {g:?} {kind}"
        );
        assert_eq!(solve(g, kind, false).unwrap().value, value, "{g:?} {kind}");
    }
}

#[test]
fn p3_gamma_t_sets() {
    let p3 = Graph::path(3).unwrap();
    let d = Dense::from_graph(&p3);
    assert!(!d.total(&members(3, &[0, 2])));
    assert_eq!(
        all_minimum_sets(&p3, InvariantKind::GammaT, false).unwrap(),
        vec![VertexSet::from([0, 1]), VertexSet::from([1, 2])]
    );
}

#[test]
fn connected_counts_match_brute_force() {
    for n in 1..=5 {
        let brute = (0u64..1 << (n * (n - 1) / 2))
            .filter(|&m| Graph::from_edge_mask(n, m).unwrap().is_connected())
            .count();
        assert_eq!(enumerate_connected(n).unwrap().count(), brute);
    }
    assert_eq!(enumerate_connected(3).unwrap().count(), 4);
    assert_eq!(enumerate_connected(4).unwrap().count(), 38);
}

#[test]
fn graph6_hand_decoded_strings() {
    for (text, edges) in [
        ("D?{", vec![(0, 4), (1, 4), (2, 4), (3, 4)]),
        ("A_", vec![(0, 1)]),
        ("A?", vec![]),
    ] {
        let dense = naive_graph6(text).unwrap();
        let g = parse_graph6(text).unwrap();
        assert_eq!(Dense::from_graph(&g).adj, dense, "{text}");
        assert_eq!(g.edges().collect::<Vec<_>>(), edges, "{text}");
        assert_eq!(write_graph6(&g).unwrap(), text);
    }
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=7).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << m)).prop_map(|(n, mask)| Graph::from_edge_mask(n, mask).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn predicates_agree_with_oracle(g in small_graph(), bits in any::<u64>()) {
        let s = VertexSet::from_bits(bits & g.vertices().bits());
        let d = Dense::from_graph(&g);
        let b = to_bools(g.order(), s);
        prop_assert_eq!(is_dominating(&g, s), d.dominating(&b));
        prop_assert_eq!(is_total_dominating(&g, s), d.total(&b));
        for allow in [false, true] {
            prop_assert_eq!(is_2movable(&g, s, Base::Total, allow).holds(), d.movable(&b, true, allow));
            let plain = is_2movable(&g, s, Base::Dominating, allow).holds() && !s.is_empty();
            prop_assert_eq!(plain, d.movable(&b, false, allow));
        }
    }

    #[test]
    fn solver_agrees_with_oracle(g in small_graph(), allow in any::<bool>()) {
        let d = Dense::from_graph(&g);
        for kind in InvariantKind::ALL {
            let r = solve(&g, kind, allow).unwrap();
            prop_assert_eq!(r.witness.map(VertexSet::to_vec), d.minimum(kind, allow), "{:?} {}", g, kind);
        }
    }

    #[test]
    fn graph6_agrees_with_naive_decoder(g in small_graph()) {
        let text = write_graph6(&g).unwrap();
        prop_assert_eq!(naive_graph6(&text).unwrap(), Dense::from_graph(&g).adj);
    }
}
