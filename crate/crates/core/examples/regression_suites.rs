// Tightness (odd cycles) and necessity (one forbidden pattern allowed).

use clawbound::harness::{necessity_suite, tightness_suite};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for report in [tightness_suite(), necessity_suite()] {
        println!(
            "{}: {}/{} passed",
            report.suite, report.counts.passed, report.counts.total
        );
        for case in &report.cases {
            println!("  {} -> {}", case.id, case.detail);
        }
        if let Some(f) = &report.first_failure {
            return Err(format!("{} failed: {}", f.id, f.detail).into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
