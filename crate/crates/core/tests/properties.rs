//! Structural invariants over arbitrary small graphs.

use movdom::io::{emit_certificate, parse_certificate};
use movdom::{
    find_pair_move, is_2movable, is_dominating, is_total_dominating, parse_graph6, solve,
    write_graph6, Base, Certificate, Graph, InvariantKind, MoveAction, VertexSet,
};
use proptest::prelude::*;

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .zip(bits)
                .filter_map(|(e, b)| b.then_some(e));
            Graph::new(n, edges).unwrap()
        })
    })
}

fn subset(g: &Graph, bits: u64) -> VertexSet {
    VertexSet::from_bits(bits & g.vertices().bits())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn adjacency_is_symmetric_and_loopless(g in graph(20)) {
        prop_assert!(g.is_well_formed());
        for u in g.vertices() {
            prop_assert!(!g.has_edge(u, u));
            for v in g.neighbors(u) {
                prop_assert!(g.has_edge(v, u));
            }
        }
        prop_assert_eq!(g.vertices().iter().map(|v| g.degree(v)).sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn join_counts(g in graph(8), h in graph(8)) {
        let j = g.join(&h).unwrap();
        prop_assert_eq!(j.order(), g.order() + h.order());
        prop_assert_eq!(j.size(), g.size() + h.size() + g.order() * h.order());
        prop_assert!(j.is_connected());
    }

    #[test]
    fn corona_counts_and_layout(g in graph(5), h in graph(5)) {
        let (c, layout) = g.corona(&h).unwrap();
        let (p, q) = (g.order(), h.order());
        prop_assert_eq!(c.order(), p * (1 + q));
        prop_assert_eq!(c.size(), g.size() + p * h.size() + p * q);
        for a in layout.centers() {
            let copy = layout.copy_set(a);
            prop_assert_eq!(c.induced(copy), h.clone());
            for v in copy {
                prop_assert!(c.has_edge(a, v));
                prop_assert_eq!(layout.center_of(v), Some(a));
                // copy vertices see only their own copy and center
                prop_assert!(c.neighbors(v).is_subset(copy.with(a)));
            }
        }
        prop_assert_eq!(c.induced(layout.centers()), g);
    }

    #[test]
    fn corona_with_single_center_is_a_join(h in graph(8)) {
        let k1 = Graph::complete(1).unwrap();
        prop_assert_eq!(k1.corona(&h).unwrap().0, k1.join(&h).unwrap());
    }

    #[test]
    fn graph6_round_trip(g in graph(62)) {
        let text = write_graph6(&g).unwrap();
        prop_assert_eq!(text.len(), 1 + (g.order() * (g.order() - 1) / 2).div_ceil(6));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn graph6_bit_position_law(n in 2usize..=20, pick in any::<prop::sample::Index>()) {
        // bit k of the body is the edge (i, j) with k = j(j-1)/2 + i, i < j
        let k = pick.index(n * (n - 1) / 2);
        let j = (1..n).find(|&j| k < j * (j + 1) / 2).unwrap();
        let i = k - j * (j - 1) / 2;
        let text = write_graph6(&Graph::new(n, [(i, j)]).unwrap()).unwrap();
        let body = &text.as_bytes()[1..];
        let set: Vec<usize> = (0..body.len() * 6)
            .filter(|&b| (body[b / 6] - 63) >> (5 - b % 6) & 1 == 1)
            .collect();
        prop_assert_eq!(set, vec![k]);
    }

    #[test]
    fn total_implies_plain(g in graph(10), bits in any::<u64>()) {
        let s = subset(&g, bits);
        if is_total_dominating(&g, s) {
            prop_assert!(is_dominating(&g, s));
        }
        if is_2movable(&g, s, Base::Total, false).holds() {
            prop_assert!(is_2movable(&g, s, Base::Dominating, false).holds());
        }
    }

    #[test]
    fn base_predicates_are_upward_closed(g in graph(12), bits in any::<u64>(), extra in any::<u64>()) {
        let s = subset(&g, bits);
        let bigger = s | subset(&g, extra);
        for base in [Base::Dominating, Base::Total] {
            if base.holds(&g, s) {
                prop_assert!(base.holds(&g, bigger));
            }
        }
    }

    #[test]
    fn allowing_equal_replacements_only_helps(g in graph(9), bits in any::<u64>()) {
        let s = subset(&g, bits);
        for base in [Base::Dominating, Base::Total] {
            if is_2movable(&g, s, base, false).holds() {
                prop_assert!(is_2movable(&g, s, base, true).holds());
            }
        }
    }

    #[test]
    fn pair_moves_are_symmetric_and_valid(g in graph(9), bits in any::<u64>(), allow in any::<bool>()) {
        let s = subset(&g, bits);
        let members = s.to_vec();
        for base in [Base::Dominating, Base::Total] {
            if !base.holds(&g, s) {
                continue;
            }
            for (a, &x) in members.iter().enumerate() {
                for &y in &members[a + 1..] {
                    let fwd = find_pair_move(&g, s, x, y, base, allow).unwrap();
                    let back = find_pair_move(&g, s, y, x, base, allow).unwrap();
                    prop_assert_eq!(fwd.is_some(), back.is_some());
                    for w in fwd.iter().chain(back.iter()) {
                        prop_assert!(w.is_valid_for(&g, s, base, allow));
                        prop_assert!(base.holds(&g, w.apply(s)));
                        if w.action == MoveAction::Replace {
                            prop_assert_eq!(w.apply(s).len() + usize::from(w.u == w.v), s.len());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn invariant_ordering(g in graph(8)) {
        prop_assume!(g.is_connected() && g.order() >= 2);
        let v = |k| solve(&g, k, false).unwrap().value;
        let gamma = v(InvariantKind::Gamma).unwrap();
        let gamma_t = v(InvariantKind::GammaT).unwrap();
        prop_assert!(gamma <= gamma_t);
        if let Some(mt2) = v(InvariantKind::GammaMt2) {
            prop_assert!(mt2 >= 2);
            prop_assert!(mt2 >= gamma_t);
            let m2 = v(InvariantKind::GammaM2);
            prop_assert!(m2.is_some_and(|m2| m2 <= mt2));
        }
        if let Some(m2) = v(InvariantKind::GammaM2) {
            prop_assert!(m2 >= gamma);
        }
    }

    #[test]
    fn certificates_verify_and_survive_json(g in graph(8), allow in any::<bool>()) {
        for kind in InvariantKind::ALL {
            let r = solve(&g, kind, allow).unwrap();
            prop_assert!(r.certificate.verify().is_ok(), "{:?}", r.certificate.verify());
            let again = parse_certificate(&emit_certificate(&r.certificate)).unwrap();
            prop_assert_eq!(&again, &r.certificate);
            prop_assert_eq!(&solve(&g, kind, allow).unwrap().certificate, &r.certificate);
        }
    }

    #[test]
    fn tampered_witness_is_rejected(g in graph(8)) {
        let r = solve(&g, InvariantKind::GammaT, false).unwrap();
        if let Some(w) = r.witness {
            let smaller = w.without(w.first().unwrap());
            let forged = Certificate {
                value: Some(smaller.len()),
                witness: smaller.to_vec(),
                ..r.certificate.clone()
            };
            prop_assert!(forged.verify().is_err());
        }
    }
}
