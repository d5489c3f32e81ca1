mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use clawbound::exact::{chromatic_number, clique_number, verify_coloring};
use clawbound::graph::io::format_graph6;
use clawbound::graph::{Graph, GraphBuilder};
use clawbound::harness::exhaustive_check;
use clawbound::patterns::{find_induced, is_class_member, Pattern};
use clawbound::repair::color_class_graph;

use common::*;

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut b = GraphBuilder::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v).unwrap();
            }
        }
    }
    b.build()
}

#[test]
fn catalog_matches_hand_built_patterns() {
    for (p, g) in [
        (Pattern::claw(), claw()),
        (Pattern::h1(), h1()),
        (Pattern::h2(), h2()),
    ] {
        assert!(naive_has_induced(p.graph(), &g) && naive_has_induced(&g, p.graph()));
    }
}

#[test]
fn solvers_match_oracles_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..300 {
        let n = 7 + i % 2;
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let omega = clique_number(&g);
        assert_eq!(omega.omega, naive_clique_number(&g), "{g:?}");
        let chi = chromatic_number(&g);
        assert_eq!(chi.chi, naive_chromatic_number(&g), "{g:?}");
        assert!(verify_coloring(&g, &chi.coloring));
    }
}

#[test]
fn pattern_search_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..400 {
        let n = rng.gen_range(4..=8);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(&mut rng, n, p);
        for p in [
            Pattern::claw(),
            Pattern::h1(),
            Pattern::h2(),
            Pattern::diamond(),
        ] {
            let found = find_induced(&g, p);
            assert_eq!(
                found.is_some(),
                naive_has_induced(&g, p.graph()),
                "{} in {g:?}",
                p.name()
            );
            if let Some(e) = found {
                assert!(e.is_valid(&g, p));
            }
        }
        assert_eq!(is_class_member(&g).is_member(), naive_is_member(&g));
    }
}

#[test]
fn member_counts_match_oracle() {
    let report = exhaustive_check(6).unwrap();
    for n in 1..=6 {
        let naive = all_graphs(n).filter(naive_is_member).count() as u64;
        assert_eq!(report.per_n[&n].members, naive, "n={n}");
    }
}

#[test]
fn graph6_matches_oracle_encoder() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..500 {
        let n = rng.gen_range(0..=62);
        let p = rng.gen_range(0.0..1.0);
        let g = random_graph(&mut rng, n, p);
        assert_eq!(format_graph6(&g).unwrap(), naive_graph6(&g));
    }
}

#[test]
fn repair_respects_oracle_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut members = 0;
    while members < 200 {
        let p = rng.gen_range(0.3..0.9);
        let g = random_graph(&mut rng, 8, p);
        if !naive_is_member(&g) {
            continue;
        }
        members += 1;
        let out = color_class_graph(&g).unwrap();
        assert!(verify_coloring(&g, &out.coloring));
        let used = out.colors_used();
        assert!(used <= naive_clique_number(&g) + 1);
        assert!(used >= naive_chromatic_number(&g));
    }
}
