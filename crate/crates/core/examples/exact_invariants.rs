// Clique number and chromatic number with certificates.

use std::time::Duration;

use clawbound::exact::{
    chromatic_number, chromatic_number_within, clique_number, verify_coloring, Deadline,
};
use clawbound::graph::generators::{blowup, cycle, mycielski_graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = blowup(&cycle(5)?, 3)?.graph;
    let omega = clique_number(&g);
    let chi = chromatic_number(&g);
    assert!(g.is_clique(&omega.witness));
    assert!(verify_coloring(&g, &chi.coloring));
    println!(
        "blowup(C5,3): omega = {} via {:?}",
        omega.omega, omega.witness
    );
    println!(
        "blowup(C5,3): chi = {} via {:?}",
        chi.chi,
        chi.coloring.colors()
    );

    // a deadline turns long proofs into a TimedOut error
    let hard = mycielski_graph(6)?;
    match chromatic_number_within(&hard, Deadline::after(Duration::from_millis(50))) {
        Ok(r) => println!("mycielski chi=6: solved, chi = {}", r.chi),
        Err(e) => println!("mycielski chi=6: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
