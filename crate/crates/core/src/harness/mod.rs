//! Corpus-scale verification: per-graph verdicts, regression suites,
//! exhaustive and batch drivers, and random class-member generation.

mod batch;
mod random;
mod suites;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::exact::{
    chromatic_number_within, clique_number_within, verify_coloring, Coloring, Deadline,
};
use crate::graph::io::format_graph6;
use crate::graph::{Graph, VertexSet};
use crate::patterns::{is_class_member, Witness};
use crate::structure::{verify_lemma1, CliqueMode};

pub use batch::batch_verify;
pub use random::{random_class_graph, random_claw_free_graph, random_free_graph};
pub use suites::{
    exhaustive_check, exhaustive_check_with, necessity_cases, necessity_suite,
    necessity_suite_with, sampled_check, tightness_suite, CaseResult, Expectation, KnownCase,
    LevelCount, SuiteCounts, SuiteReport,
};

pub const DEFAULT_TIME_BUDGET: Duration = Duration::from_secs(10);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Wall-clock budget shared by the clique and chromatic solvers.
    pub time_budget: Option<Duration>,
    pub lemma1_mode: CliqueMode,
    pub record_timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            time_budget: Some(DEFAULT_TIME_BUDGET),
            lemma1_mode: CliqueMode::AllMaxCliques,
            record_timings: true,
        }
    }
}

/// Microseconds spent per solver; zero when timings are disabled.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Timings {
    pub patterns_us: u64,
    pub omega_us: u64,
    pub chi_us: u64,
    pub lemma1_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    /// `None` when the graph is too large for graph6.
    pub graph6: Option<String>,
    pub n: usize,
    pub in_class: bool,
    pub witness: Option<Witness>,
    pub omega: Option<usize>,
    pub clique: Option<VertexSet>,
    pub chi: Option<usize>,
    pub coloring: Option<Coloring>,
    /// `χ ≤ ω + 1`; only asserted for class members with both values known.
    pub bound_holds: Option<bool>,
    /// Only computed for class members.
    pub lemma1_clean: Option<bool>,
    pub timed_out: bool,
    /// Clique, colouring and witness all re-checked against the graph.
    pub certificates_valid: bool,
    pub timings: Timings,
}

impl TheoremVerdict {
    /// A failed bound, a dirty Lemma 1 report or a bad certificate.
    pub fn is_violation(&self) -> bool {
        self.bound_holds == Some(false)
            || self.lemma1_clean == Some(false)
            || !self.certificates_valid
    }

    pub fn id(&self) -> String {
        match &self.graph6 {
            Some(s) => s.clone(),
            None => format!("<n={}>", self.n),
        }
    }
}

fn micros(start: Instant, on: bool) -> u64 {
    if on {
        start.elapsed().as_micros() as u64
    } else {
        0
    }
}

pub fn verify_theorem(g: &Graph) -> TheoremVerdict {
    verify_theorem_with(g, &VerifyOptions::default())
}

pub fn verify_theorem_with(g: &Graph, opts: &VerifyOptions) -> TheoremVerdict {
    let deadline = match opts.time_budget {
        Some(d) => Deadline::after(d),
        None => Deadline::none(),
    };
    let mut timings = Timings::default();

    let t = Instant::now();
    let witness = is_class_member(g).into_witness();
    timings.patterns_us = micros(t, opts.record_timings);
    let in_class = witness.is_none();

    let t = Instant::now();
    let clique = clique_number_within(g, deadline).ok().map(|r| r.witness);
    timings.omega_us = micros(t, opts.record_timings);

    let t = Instant::now();
    let chromatic = if clique.is_some() {
        chromatic_number_within(g, deadline).ok()
    } else {
        None
    };
    timings.chi_us = micros(t, opts.record_timings);

    let omega = clique.as_ref().map(VertexSet::len);
    let chi = chromatic.as_ref().map(|r| r.chi);
    let timed_out = chromatic.is_none();

    let lemma1_clean = in_class.then(|| {
        let t = Instant::now();
        let clean = verify_lemma1(g, opts.lemma1_mode).is_clean();
        timings.lemma1_us = micros(t, opts.record_timings);
        clean
    });

    let bound_holds = match (in_class, omega, chi) {
        (true, Some(w), Some(x)) => Some(x <= w + 1),
        _ => None,
    };

    let certificates_valid = witness.as_ref().is_none_or(|w| w.is_valid(g))
        && clique.as_ref().is_none_or(|q| g.is_clique(q))
        && chromatic
            .as_ref()
            .is_none_or(|r| verify_coloring(g, &r.coloring) && r.coloring.colors_used() == r.chi);

    TheoremVerdict {
        graph6: format_graph6(g).ok(),
        n: g.n(),
        in_class,
        witness,
        omega,
        clique,
        chi,
        coloring: chromatic.map(|r| r.coloring),
        bound_holds,
        lemma1_clean,
        timed_out,
        certificates_valid,
        timings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{cycle, join_of_c5, mycielski_graph};

    #[test]
    fn odd_cycle_verdict() {
        let v = verify_theorem(&cycle(7).unwrap());
        assert!(v.in_class);
        assert_eq!((v.omega, v.chi), (Some(2), Some(3)));
        assert_eq!(v.bound_holds, Some(true));
        assert_eq!(v.lemma1_clean, Some(true));
        assert!(v.certificates_valid && !v.is_violation());
        assert_eq!(v.graph6.as_deref(), Some("FhCKG"));
    }

    #[test]
    fn non_member_verdicts() {
        let v = verify_theorem(&mycielski_graph(4).unwrap());
        assert!(!v.in_class);
        assert_eq!(v.witness.as_ref().unwrap().pattern, "claw");
        assert_eq!((v.omega, v.chi), (Some(2), Some(4)));
        assert_eq!(v.bound_holds, None);
        assert_eq!(v.lemma1_clean, None);

        let v = verify_theorem(&join_of_c5(2).unwrap().graph);
        assert_eq!(v.witness.as_ref().unwrap().pattern, "H2");
        assert_eq!((v.omega, v.chi), (Some(4), Some(6)));
        assert!(!v.is_violation());
    }

    #[test]
    fn zero_budget_times_out_without_assertion() {
        let g = mycielski_graph(6).unwrap();
        let opts = VerifyOptions {
            time_budget: Some(Duration::ZERO),
            ..VerifyOptions::default()
        };
        let v = verify_theorem_with(&g, &opts);
        assert!(v.timed_out);
        assert_eq!(v.chi, None);
        assert_eq!(v.bound_holds, None);
        assert!(!v.is_violation());
    }
}
