// Random class members fed through the parallel batch verifier.

use clawbound::graph::io::format_graph6;
use clawbound::harness::{batch_verify, random_class_graph, VerifyOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut input = String::new();
    for seed in 0..30 {
        if let Some(g) = random_class_graph(seed, 14, 0.45, 2_000) {
            input += &format_graph6(&g)?;
            input.push('\n');
        }
    }
    input += "this line is not graph6\n";
    let report = batch_verify(&input, 4, &VerifyOptions::default());
    println!(
        "{} graphs, {} members, {} violations, {} parse errors",
        report.counts.total,
        report.counts.members,
        report.counts.failed,
        report.counts.parse_errors
    );
    let json = serde_json::to_string(&report.counts)?;
    println!("{json}");
    if report.counts.failed > 0 {
        return Err("bound violation".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
