use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{verify_theorem_with, TheoremVerdict, VerifyOptions};
use crate::graph::enumerate::{
    graph_from_mask, labeled_count, vertex_pairs, EnumerationTooLarge, MAX_ENUMERATION_N,
};
use crate::graph::generators::{blowup, cycle, join_of_c5, mycielski_graph};
use crate::graph::io::format_graph6;
use crate::graph::Graph;
use crate::patterns::{find_induced, is_class_member, Pattern};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    /// Reproducible case id; includes the graph6 string where one exists.
    pub id: String,
    pub passed: bool,
    pub detail: String,
    pub verdict: Option<TheoremVerdict>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SuiteCounts {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub members: usize,
    pub non_members: usize,
    pub timed_out: usize,
    pub parse_errors: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct LevelCount {
    pub graphs: u64,
    pub members: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    /// Every case for named suites and batches; only failures for
    /// exhaustive and sampled runs.
    pub cases: Vec<CaseResult>,
    pub counts: SuiteCounts,
    /// Per-vertex-count tallies (exhaustive and sampled runs).
    pub per_n: BTreeMap<usize, LevelCount>,
    pub first_failure: Option<CaseResult>,
    /// Set when a bound violation stopped the run early.
    pub halted: bool,
}

impl SuiteReport {
    pub(crate) fn new(suite: impl Into<String>) -> SuiteReport {
        SuiteReport {
            suite: suite.into(),
            cases: Vec::new(),
            counts: SuiteCounts::default(),
            per_n: BTreeMap::new(),
            first_failure: None,
            halted: false,
        }
    }

    pub fn passed(&self) -> bool {
        self.counts.failed == 0 && self.counts.parse_errors == 0 && !self.halted
    }

    pub(crate) fn push(&mut self, case: CaseResult) {
        self.record(&case);
        self.cases.push(case);
    }

    /// Updates counts without storing the case unless it failed.
    pub(crate) fn record(&mut self, case: &CaseResult) {
        self.counts.total += 1;
        if case.passed {
            self.counts.passed += 1;
        } else {
            self.counts.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(case.clone());
            }
        }
        if let Some(v) = &case.verdict {
            if v.in_class {
                self.counts.members += 1;
            } else {
                self.counts.non_members += 1;
            }
            if v.timed_out {
                self.counts.timed_out += 1;
            }
        }
    }

    /// Zeroes solver timings so reports compare equal across runs.
    pub fn without_timings(mut self) -> SuiteReport {
        for case in self.cases.iter_mut().chain(self.first_failure.iter_mut()) {
            if let Some(v) = &mut case.verdict {
                v.timings = Default::default();
            }
        }
        self
    }
}

/// Expected pattern flags and invariants of a named construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub claw: bool,
    pub h1: bool,
    pub h2: bool,
    pub omega: usize,
    pub chi: usize,
}

#[derive(Debug, Clone)]
pub struct KnownCase {
    pub id: String,
    pub graph: Graph,
    pub expect: Expectation,
}

/// Mycielski iterates (χ = 4, 5), blow-ups of `C5` (m = 2, 3) and joins of
/// `m` copies of `C5` (m = 2, 3).
pub fn necessity_cases() -> Vec<KnownCase> {
    let mut out = Vec::new();
    for k in [4, 5] {
        out.push(KnownCase {
            id: format!("mycielski chi={k}"),
            graph: mycielski_graph(k).expect("k >= 2"),
            expect: Expectation {
                claw: true,
                h1: false,
                h2: false,
                omega: 2,
                chi: k,
            },
        });
    }
    let c5 = cycle(5).expect("5 >= 3");
    for m in [2, 3] {
        out.push(KnownCase {
            id: format!("blowup(C5,{m})"),
            graph: blowup(&c5, m).expect("m >= 1").graph,
            expect: Expectation {
                claw: false,
                h1: true,
                h2: false,
                omega: 2 * m,
                chi: 2 * m + m.div_ceil(2),
            },
        });
    }
    for m in [2, 3] {
        out.push(KnownCase {
            id: format!("join of {m} C5"),
            graph: join_of_c5(m).expect("m >= 1").graph,
            expect: Expectation {
                claw: false,
                h1: false,
                h2: true,
                omega: 2 * m,
                chi: 3 * m,
            },
        });
    }
    out
}

fn case_id(name: &str, g: &Graph) -> String {
    match format_graph6(g) {
        Ok(s) => format!("{name} [{s}]"),
        Err(_) => name.to_string(),
    }
}

/// Odd cycles `C5, C7, ..., C21`: members with `ω = 2`, `χ = 3`.
pub fn tightness_suite() -> SuiteReport {
    let mut report = SuiteReport::new("tightness");
    let opts = VerifyOptions::default();
    for k in 2..=10 {
        let g = cycle(2 * k + 1).expect("length >= 3");
        let v = verify_theorem_with(&g, &opts);
        let passed = v.in_class && v.omega == Some(2) && v.chi == Some(3) && !v.is_violation();
        let detail = format!(
            "in_class={} omega={:?} chi={:?}",
            v.in_class, v.omega, v.chi
        );
        report.push(CaseResult {
            id: case_id(&format!("C{}", 2 * k + 1), &g),
            passed,
            detail,
            verdict: Some(v),
        });
    }
    report
}

pub fn necessity_suite() -> SuiteReport {
    necessity_suite_with(&VerifyOptions::default())
}

pub fn necessity_suite_with(opts: &VerifyOptions) -> SuiteReport {
    let mut report = SuiteReport::new("necessity");
    for case in necessity_cases() {
        let g = &case.graph;
        let claw = find_induced(g, Pattern::claw()).is_some();
        let h1 = find_induced(g, Pattern::h1()).is_some();
        let h2 = find_induced(g, Pattern::h2()).is_some();
        let v = verify_theorem_with(g, opts);
        let got = (claw, h1, h2, v.omega, v.chi);
        let e = &case.expect;
        let want = (e.claw, e.h1, e.h2, Some(e.omega), Some(e.chi));
        report.push(CaseResult {
            id: case_id(&case.id, g),
            passed: got == want && v.certificates_valid,
            detail: format!(
                "claw={claw} H1={h1} H2={h2} omega={:?} chi={:?}",
                v.omega, v.chi
            ),
            verdict: Some(v),
        });
    }
    report
}

/// Outcome of checking one enumerated graph: `None` for non-members.
fn check_mask(
    n: usize,
    pairs: &[(usize, usize)],
    mask: u64,
    opts: &VerifyOptions,
) -> (bool, Option<CaseResult>) {
    let g = graph_from_mask(n, pairs, mask);
    if !is_class_member(&g).is_member() {
        return (false, None);
    }
    let v = verify_theorem_with(&g, opts);
    if v.is_violation() || v.timed_out {
        let detail = format!(
            "omega={:?} chi={:?} lemma1_clean={:?} certificates_valid={} timed_out={}",
            v.omega, v.chi, v.lemma1_clean, v.certificates_valid, v.timed_out
        );
        let case = CaseResult {
            id: format!("n={n} mask={mask} [{}]", v.id()),
            passed: !v.is_violation(),
            detail,
            verdict: Some(v),
        };
        return (true, Some(case));
    }
    (true, None)
}

#[derive(Default)]
struct Tally {
    graphs: u64,
    members: u64,
    notable: Vec<(u64, CaseResult)>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.graphs += other.graphs;
        self.members += other.members;
        self.notable.extend(other.notable);
        self
    }
}

fn run_masks(
    report: &mut SuiteReport,
    n: usize,
    masks: impl ParallelIterator<Item = u64>,
    opts: &VerifyOptions,
) {
    let pairs = vertex_pairs(n);
    let tally = masks
        .fold(Tally::default, |mut t, mask| {
            t.graphs += 1;
            let (member, case) = check_mask(n, &pairs, mask, opts);
            t.members += member as u64;
            if let Some(c) = case {
                t.notable.push((mask, c));
            }
            t
        })
        .reduce(Tally::default, Tally::merge);

    let mut notable = tally.notable;
    notable.sort_by_key(|(mask, _)| *mask);
    let failed = notable.iter().filter(|(_, c)| !c.passed).count();
    let timed_out = notable.len() - failed;
    report.counts.total += tally.graphs as usize;
    report.counts.members += tally.members as usize;
    report.counts.non_members += (tally.graphs - tally.members) as usize;
    report.counts.failed += failed;
    report.counts.passed += tally.graphs as usize - failed;
    report.counts.timed_out += timed_out;
    let level = report.per_n.entry(n).or_default();
    level.graphs += tally.graphs;
    level.members += tally.members;
    for (_, c) in notable {
        if !c.passed && report.first_failure.is_none() {
            report.first_failure = Some(c.clone());
        }
        report.cases.push(c);
    }
}

/// Every labeled graph on `1..=n_max` vertices; each class member must
/// satisfy `χ ≤ ω + 1` and a clean Lemma 1 report.
pub fn exhaustive_check(n_max: usize) -> Result<SuiteReport, EnumerationTooLarge> {
    exhaustive_check_with(n_max, &VerifyOptions::default())
}

pub fn exhaustive_check_with(
    n_max: usize,
    opts: &VerifyOptions,
) -> Result<SuiteReport, EnumerationTooLarge> {
    if n_max > MAX_ENUMERATION_N {
        return Err(EnumerationTooLarge(n_max));
    }
    let mut report = SuiteReport::new(format!("exhaustive n<={n_max}"));
    for n in 1..=n_max {
        run_masks(&mut report, n, (0..labeled_count(n)).into_par_iter(), opts);
    }
    Ok(report)
}

/// `samples` uniformly random labeled graphs on `n` vertices.
pub fn sampled_check(
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<SuiteReport, EnumerationTooLarge> {
    if n > MAX_ENUMERATION_N {
        return Err(EnumerationTooLarge(n));
    }
    let count = labeled_count(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let masks: Vec<u64> = (0..samples).map(|_| rng.gen_range(0..count)).collect();
    let mut report = SuiteReport::new(format!("sampled n={n} x{samples} seed={seed}"));
    run_masks(
        &mut report,
        n,
        masks.into_par_iter(),
        &VerifyOptions::default(),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tightness_passes() {
        let r = tightness_suite();
        assert!(r.passed(), "{:?}", r.first_failure);
        assert_eq!(r.counts.total, 9);
        assert_eq!(r.counts.members, 9);
    }

    #[test]
    fn small_exhaustive_counts() {
        let r = exhaustive_check(4).unwrap();
        assert!(r.passed());
        let graphs: Vec<u64> = r.per_n.values().map(|l| l.graphs).collect();
        assert_eq!(graphs, vec![1, 2, 8, 64]);
        // on four vertices only the 4 labeled claws are excluded
        assert_eq!(r.per_n[&4].members, 60);
        assert!(r.cases.is_empty());
        assert!(exhaustive_check(8).is_err());
    }

    #[test]
    fn sampled_is_deterministic() {
        let a = sampled_check(6, 300, 11).unwrap();
        let b = sampled_check(6, 300, 11).unwrap();
        assert_eq!(a, b);
        assert!(a.passed());
        assert_eq!(a.counts.total, 300);
    }

    #[test]
    fn necessity_expectations_match_formulas() {
        let got: Vec<(String, usize, usize)> = necessity_cases()
            .into_iter()
            .map(|c| (c.id, c.expect.omega, c.expect.chi))
            .collect();
        assert_eq!(
            got,
            vec![
                ("mycielski chi=4".into(), 2, 4),
                ("mycielski chi=5".into(), 2, 5),
                ("blowup(C5,2)".into(), 4, 5),
                ("blowup(C5,3)".into(), 6, 8),
                ("join of 2 C5".into(), 4, 6),
                ("join of 3 C5".into(), 6, 9),
            ]
        );
    }
}
