// Membership in the {claw, H1, H2}-free class, with witnesses.

use clawbound::graph::generators::{blowup, cycle, join_of_c5, mycielski_graph};
use clawbound::patterns::{find_induced, is_class_member, Pattern};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c5 = cycle(5)?;
    let graphs = [
        ("C7", cycle(7)?),
        ("Groetzsch", mycielski_graph(4)?),
        ("blowup(C5,2)", blowup(&c5, 2)?.graph),
        ("join(C5,C5)", join_of_c5(2)?.graph),
    ];
    for (name, g) in &graphs {
        let verdict = is_class_member(g);
        match verdict.witness() {
            None => println!("{name}: member"),
            Some(w) => {
                assert!(w.is_valid(g));
                println!("{name}: induced {} on {:?}", w.pattern, w.embedding.map);
            }
        }
    }
    // individual patterns, e.g. the diamond
    let diamond = find_induced(&graphs[2].1, Pattern::diamond());
    println!("diamond in blowup(C5,2): {:?}", diamond.map(|e| e.map));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
