// (omega + 1)-colouring of class members by insertion and Kempe repair.

use clawbound::exact::{clique_number, verify_coloring};
use clawbound::graph::generators::{cycle, mycielski_graph};
use clawbound::harness::random_class_graph;
use clawbound::repair::{
    color_bounded, color_class_graph, insertion_order, RepairError, StageCounts,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c9 = cycle(9)?;
    println!("C9 insertion order: {:?}", insertion_order(&c9));
    let out = color_class_graph(&c9)?;
    println!("C9: {} colours, log {:?}", out.colors_used(), out.stage_log);

    let mut totals = StageCounts::default();
    for seed in 0..20 {
        let g = random_class_graph(seed, 20, 0.5, 5_000).ok_or("no member found")?;
        let out = color_class_graph(&g)?;
        assert!(verify_coloring(&g, &out.coloring));
        assert!(out.colors_used() <= clique_number(&g).omega + 1);
        totals.merge(&out.counts);
    }
    println!("20 random members, stage totals: {totals:?}");

    // tighter budgets are allowed, and infeasible ones are reported
    println!(
        "C5 with 2 colours: {:?}",
        color_bounded(&cycle(5)?, 2).map(|o| o.colors_used())
    );
    if let Err(RepairError::NotMember(w)) = color_class_graph(&mycielski_graph(4)?) {
        println!("Groetzsch graph rejected: induced {}", w.pattern);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
