use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::suites::{CaseResult, SuiteReport};
use super::{verify_theorem_with, VerifyOptions};
use crate::graph::io::parse_graph6;

enum Outcome {
    Case(CaseResult),
    ParseError(CaseResult),
    Skipped,
}

/// Verifies one graph6 string per non-blank line on `jobs` worker threads.
///
/// A bound violation halts the batch: the report ends at the first
/// violating line (by line number), whatever the thread count. Parse
/// failures are reported per line and do not halt.
pub fn batch_verify(input: &str, jobs: usize, opts: &VerifyOptions) -> SuiteReport {
    let lines: Vec<(usize, &str)> = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let first_violation = AtomicUsize::new(usize::MAX);

    let work = || -> Vec<(usize, Outcome)> {
        lines
            .par_iter()
            .map(|&(line, text)| {
                if line > first_violation.load(Ordering::Relaxed) {
                    return (line, Outcome::Skipped);
                }
                let g = match parse_graph6(text) {
                    Ok(g) => g,
                    Err(e) => {
                        return (
                            line,
                            Outcome::ParseError(CaseResult {
                                id: format!("line {line}: {text}"),
                                passed: false,
                                detail: e.to_string(),
                                verdict: None,
                            }),
                        )
                    }
                };
                let v = verify_theorem_with(&g, opts);
                let passed = !v.is_violation();
                if !passed {
                    first_violation.fetch_min(line, Ordering::Relaxed);
                }
                let detail = if v.timed_out {
                    "timed out".to_string()
                } else if v.in_class {
                    format!(
                        "omega={:?} chi={:?} lemma1_clean={:?}",
                        v.omega, v.chi, v.lemma1_clean
                    )
                } else {
                    format!(
                        "non-member ({})",
                        v.witness.as_ref().map_or("?", |w| w.pattern.as_str())
                    )
                };
                let case = CaseResult {
                    id: format!("line {line}: {}", v.id()),
                    passed,
                    detail,
                    verdict: Some(v),
                };
                (line, Outcome::Case(case))
            })
            .collect()
    };
    let results = match rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
    {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    };

    let stop = first_violation.load(Ordering::Relaxed);
    let mut report = SuiteReport::new("batch");
    report.halted = stop != usize::MAX;
    for (line, outcome) in results {
        if line > stop {
            break;
        }
        match outcome {
            Outcome::Case(c) => report.push(c),
            Outcome::ParseError(c) => {
                report.counts.parse_errors += 1;
                report.cases.push(c);
            }
            Outcome::Skipped => unreachable!("skipped lines lie after the first violation"),
        }
    }
    report
}
