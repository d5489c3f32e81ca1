// Graphs on which colouring with exactly chi colours needs each repair stage.

use clawbound::exact::{chromatic_number, verify_coloring};
use clawbound::graph::generators::{blowup, cycle};
use clawbound::graph::io::parse_graph6;
use clawbound::graph::Graph;
use clawbound::repair::{color_bounded, color_bounded_with, RepairConfig, Stage};

fn tight(g: &Graph) -> (usize, clawbound::repair::RepairOutcome) {
    let chi = chromatic_number(g).chi;
    let out = color_bounded(g, chi).expect("chi colours suffice");
    assert!(verify_coloring(g, &out.coloring));
    assert!(out.colors_used() <= chi);
    (chi, out)
}

fn uses(out: &clawbound::repair::RepairOutcome, stage: Stage) -> bool {
    out.stage_log.iter().any(|r| r.stage == stage)
}

#[test]
fn single_swap_fixture() {
    let g = parse_graph6("K_]_QLJg}prw").unwrap();
    let (chi, out) = tight(&g);
    assert_eq!(chi, 4);
    assert!(uses(&out, Stage::SingleSwap));
}

#[test]
fn sequence_shift_on_blowup() {
    let g = blowup(&cycle(5).unwrap(), 2).unwrap().graph;
    let (chi, out) = tight(&g);
    assert_eq!(chi, 5);
    assert!(uses(&out, Stage::SequenceShift));
    assert!(!uses(&out, Stage::ExactFallback));
}

#[test]
fn random_walk_fixture() {
    let g = parse_graph6("Na[PeWF?h`?ovmiMep?").unwrap();
    let (_, out) = tight(&g);
    assert!(uses(&out, Stage::RandomWalk));
}

#[test]
fn exact_fallback_fixture() {
    let g = parse_graph6("Ooc___oHL?@W`[@LEO@`?").unwrap();
    let (chi, out) = tight(&g);
    assert_eq!(chi, 3);
    assert!(out.fallback_used);
    assert_eq!(
        out.counts.exact_fallback,
        out.stage_log
            .iter()
            .filter(|r| r.stage == Stage::ExactFallback)
            .count()
    );
}

#[test]
fn stage_log_follows_insertion_order() {
    let g = parse_graph6("Na[PeWF?h`?ovmiMep?").unwrap();
    let out = color_bounded(&g, 4).unwrap();
    let logged: Vec<usize> = out.stage_log.iter().map(|r| r.vertex).collect();
    assert_eq!(logged, clawbound::repair::insertion_order(&g));
    assert_eq!(out.counts.total(), g.n());
}

#[test]
fn seeds_change_walks_not_validity() {
    let g = parse_graph6("Na[PeWF?h`?ovmiMep?").unwrap();
    for seed in 0..10 {
        let cfg = RepairConfig {
            seed,
            ..RepairConfig::default()
        };
        let out = color_bounded_with(&g, 4, &cfg).unwrap();
        assert!(verify_coloring(&g, &out.coloring));
        assert_eq!(color_bounded_with(&g, 4, &cfg), Some(out));
    }
}
