use ecgraph::canon::is_isomorphic;
use ecgraph::closure::{is_n_ec, is_n_line_ec, line_graph, xi_line};
use ecgraph::hypergraph::{line_graph_of_hypergraph, star_dual};
use ecgraph::{canonical_form, parse_graph6, write_graph6, Graph};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn relabeled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

proptest! {
    #[test]
    fn graph6_roundtrip(g in graph(64)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in relabeled(20)) {
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.permuted(&perm)));
    }

    #[test]
    fn complement_is_an_involution(g in graph(40)) {
        prop_assert_eq!(g.complement().complement(), g);
        let n = g.order();
        prop_assert_eq!(g.size() + g.complement().size(), n * (n - 1) / 2);
    }

    #[test]
    fn product_degrees_add(g in graph(6), h in graph(6)) {
        let p = g.cartesian_product(&h).unwrap();
        for u in 0..g.order() {
            for v in 0..h.order() {
                prop_assert_eq!(p.degree(u * h.order() + v), g.degree(u) + h.degree(v));
            }
        }
    }

    #[test]
    fn closure_is_preserved_by_complement(g in graph(9)) {
        for n in 1..=2 {
            let a = is_n_ec(&g, n).map(|v| v.holds).unwrap_or(false);
            let b = is_n_ec(&g.complement(), n).map(|v| v.holds).unwrap_or(false);
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn closure_levels_are_monotone(g in graph(9)) {
        if g.order() >= 2 && is_n_ec(&g, 2).unwrap().holds {
            prop_assert!(is_n_ec(&g, 1).unwrap().holds);
        }
    }

    #[test]
    fn line_closure_matches_line_graph(g in graph(7)) {
        prop_assume!(g.size() >= 2);
        let l = line_graph(&g).unwrap().graph;
        for n in 1..=2 {
            prop_assert_eq!(
                is_n_line_ec(&g, n).unwrap().holds,
                is_n_ec(&l, n).unwrap().holds
            );
        }
        prop_assert!(xi_line(&g).value <= 2);
    }

    #[test]
    fn star_dual_recovers_graph(g in graph(9)) {
        let eligible = g.is_connected() && g.order() >= 3 && g.size() <= 64;
        prop_assume!(eligible);
        let l = line_graph_of_hypergraph(&star_dual(&g).unwrap()).unwrap();
        prop_assert!(is_isomorphic(&l, &g));
    }
}
