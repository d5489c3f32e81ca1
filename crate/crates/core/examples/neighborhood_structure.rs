// Classifying each neighbourhood against its maximum cliques.

use clawbound::graph::generators::{blowup, cycle};
use clawbound::graph::Graph;
use clawbound::structure::{classify_vertex, neighborhood_clique, verify_lemma1, CliqueMode};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // the gem: vertex 0 joined to the path 1-2-3-4
    let gem = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)])?;
    let q = neighborhood_clique(&gem, 0)?;
    println!(
        "gem: Q_0 = {:?}, case {:?}",
        q,
        classify_vertex(&gem, 0, &q)?
    );

    let g = blowup(&cycle(5)?, 2)?.graph;
    for mode in [CliqueMode::Single, CliqueMode::AllMaxCliques] {
        let report = verify_lemma1(&g, mode);
        println!(
            "blowup(C5,2) {mode:?}: {:?}, clean = {}",
            report.summary,
            report.is_clean()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
