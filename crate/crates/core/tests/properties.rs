use proptest::prelude::*;

use clawbound::exact::{
    chromatic_number, greedy_upper_bound, kempe_components, kempe_swap, verify_coloring, Coloring,
};
use clawbound::graph::io::{
    format_graph6, parse_dimacs, parse_edge_list, parse_graph6, write_dimacs, write_edge_list,
};
use clawbound::graph::Graph;
use clawbound::repair::{color_bounded, insertion_order};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn text_formats_round_trip(g in arb_graph(40)) {
        prop_assert_eq!(parse_graph6(&format_graph6(&g).unwrap()).unwrap(), g.clone());
        prop_assert_eq!(parse_dimacs(&write_dimacs(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(30)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn kempe_swap_is_a_proper_involution(g in arb_graph(14), pick in any::<prop::sample::Index>()) {
        let (k, coloring) = greedy_upper_bound(&g);
        prop_assume!(k >= 1);
        let palette = k + 1;
        let coloring = Coloring::new(coloring.colors().to_vec(), palette);
        let mut comps = Vec::new();
        for a in 1..=palette {
            for b in a + 1..=palette {
                comps.extend(kempe_components(&g, &coloring, a, b).unwrap());
            }
        }
        prop_assume!(!comps.is_empty());
        let comp = pick.get(&comps);
        let swapped = kempe_swap(&coloring, comp).unwrap();
        prop_assert!(verify_coloring(&g, &swapped));
        prop_assert_eq!(kempe_swap(&swapped, comp).unwrap(), coloring);
    }

    #[test]
    fn kempe_components_partition_the_two_classes(g in arb_graph(14)) {
        let (_, coloring) = greedy_upper_bound(&g);
        prop_assume!(coloring.palette() >= 2);
        let comps = kempe_components(&g, &coloring, 1, 2).unwrap();
        let mut seen: Vec<usize> = comps.iter().flat_map(|c| c.vertices.clone()).collect();
        seen.sort_unstable();
        let expected: Vec<usize> = (0..g.n()).filter(|&v| matches!(coloring.color(v), 1 | 2)).collect();
        prop_assert_eq!(seen, expected);
    }

    #[test]
    fn bounded_coloring_is_proper_and_never_beats_chi(g in arb_graph(10), extra in 0usize..3) {
        let chi = chromatic_number(&g).chi;
        let budget = chi + extra;
        let out = color_bounded(&g, budget);
        prop_assert!(out.is_some() || g.n() == 0 && budget == 0);
        if let Some(out) = out {
            prop_assert!(verify_coloring(&g, &out.coloring));
            prop_assert!(out.colors_used() <= budget);
            prop_assert!(out.colors_used() >= chi);
            prop_assert_eq!(out.stage_log.len(), g.n());
        }
        if chi >= 1 {
            prop_assert!(color_bounded(&g, chi - 1).is_none());
        }
    }

    #[test]
    fn insertion_order_is_a_permutation(g in arb_graph(20)) {
        let mut order = insertion_order(&g);
        order.sort_unstable();
        prop_assert_eq!(order, (0..g.n()).collect::<Vec<_>>());
    }
}
