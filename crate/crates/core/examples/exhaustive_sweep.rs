// chi <= omega + 1 over every labeled graph, plus a sampled run.

use clawbound::harness::{exhaustive_check, sampled_check};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let report = exhaustive_check(max_n)?;
    for (n, level) in &report.per_n {
        println!(
            "n={n}: {} graphs, {} class members",
            level.graphs, level.members
        );
    }
    println!("violations: {}", report.counts.failed);

    let sampled = sampled_check(7, 2_000, 42)?;
    println!(
        "{}: {} members, {} violations",
        sampled.suite, sampled.counts.members, sampled.counts.failed
    );
    if !report.passed() || !sampled.passed() {
        return Err("theorem violation".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
