// graph6, DIMACS and edge-list reading and writing.

use clawbound::graph::generators::mycielski_graph;
use clawbound::graph::io::{
    format_graph6, parse_auto, parse_graph6, write_dimacs, write_edge_list, Format,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = mycielski_graph(4)?;
    let g6 = format_graph6(&g)?;
    println!("graph6: {g6}");
    assert_eq!(parse_graph6(&g6)?, g);

    let dimacs = write_dimacs(&g);
    println!("DIMACS header: {}", dimacs.lines().next().unwrap_or(""));
    assert_eq!(Format::detect(&dimacs), Format::Dimacs);
    assert_eq!(parse_auto(&dimacs)?, g);

    let edges = write_edge_list(&g);
    assert_eq!(parse_auto(&edges)?, g);

    match parse_graph6("D~~") {
        Ok(_) => println!("unexpected parse"),
        Err(e) => println!("bad input: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
