//! Neighbourhood structure around a maximum neighbourhood clique.
//!
//! For a vertex `v` and a maximum clique `Q` of `⟨N(v)⟩`, the remainder
//! `R = N(v) − Q` of a {claw, H1, H2}-free graph falls into one of three
//! shapes:
//!
//! 1. `⟨R⟩` is complete;
//! 2. `R = {w, z}` with `wz ∉ E`, and there are `w' ≠ z'` in `Q` such that
//!    `w` misses exactly `w'` in `Q` and `z` misses exactly `z'`;
//! 3. `R = {w, z, x}` with `wz ∉ E`, `xw, xz ∈ E`, `w'`/`z'` as in case 2,
//!    and `x` adjacent to all of `Q` except `w'` and `z'`.
//!
//! [`classify_vertex`] decides which shape applies and reports the failing
//! clause when none does.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exact::{
    all_max_cliques_within, lex_first_max_clique_within, max_clique_within, Deadline,
};
use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0:?} is not contained in N({1})")]
    NotInNeighborhood(Vec<usize>, usize),
    #[error("{0:?} is not a clique")]
    NotAClique(Vec<usize>),
    #[error("clique of size {got} is not maximum in N({vertex}) (maximum is {max})")]
    NotMaximum {
        vertex: usize,
        got: usize,
        max: usize,
    },
}

/// Which clause of the case analysis failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ViolationReason {
    /// Non-complete remainder with more than three vertices.
    RemainderTooLarge { remainder: Vec<usize> },
    /// Three-vertex remainder with more than one non-edge.
    TooManyNonEdges { remainder: Vec<usize> },
    /// A remainder vertex misses zero or several vertices of `Q`.
    MissingNeighborNotUnique { vertex: usize, missing: Vec<usize> },
    /// `w` and `z` miss the same vertex of `Q`.
    SharedMissingNeighbor { w: usize, z: usize, missing: usize },
    /// `x` is adjacent to `w'` or `z'`.
    MiddleSeesPrime { x: usize, prime: usize },
    /// `x` misses a vertex of `Q − {w', z'}`.
    MiddleMissesClique { x: usize, missing: usize },
}

impl fmt::Display for ViolationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::RemainderTooLarge { remainder } => {
                write!(
                    f,
                    "non-complete remainder {remainder:?} has more than three vertices"
                )
            }
            Self::TooManyNonEdges { remainder } => {
                write!(f, "remainder {remainder:?} has more than one non-edge")
            }
            Self::MissingNeighborNotUnique { vertex, missing } => {
                write!(f, "{vertex} misses {missing:?} in Q, expected exactly one")
            }
            Self::SharedMissingNeighbor { w, z, missing } => {
                write!(f, "{w} and {z} both miss {missing} in Q")
            }
            Self::MiddleSeesPrime { x, prime } => {
                write!(f, "middle vertex {x} adjacent to {prime}")
            }
            Self::MiddleMissesClique { x, missing } => {
                write!(
                    f,
                    "middle vertex {x} not adjacent to clique vertex {missing}"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum Lemma1Case {
    Complete,
    TwoNonadjacent {
        w: usize,
        z: usize,
        w_prime: usize,
        z_prime: usize,
    },
    ThreeWithMiddle {
        w: usize,
        z: usize,
        x: usize,
        w_prime: usize,
        z_prime: usize,
    },
    Violation {
        reason: ViolationReason,
    },
}

impl Lemma1Case {
    pub fn is_violation(&self) -> bool {
        matches!(self, Lemma1Case::Violation { .. })
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Lemma1Case::Complete => "complete",
            Lemma1Case::TwoNonadjacent { .. } => "two_nonadjacent",
            Lemma1Case::ThreeWithMiddle { .. } => "three_with_middle",
            Lemma1Case::Violation { .. } => "violation",
        }
    }
}

/// Lexicographically smallest maximum clique of `⟨within⟩`.
pub fn max_clique_in(g: &Graph, within: &VertexSet) -> Result<VertexSet, StructureError> {
    if let Some(bad) = within.iter().find(|&v| v >= g.n()) {
        return Err(GraphError::VertexOutOfRange {
            vertex: bad,
            n: g.n(),
        }
        .into());
    }
    Ok(lex_first_max_clique_within(g, within))
}

/// `Q_v`: the lexicographically smallest maximum clique of `⟨N(v)⟩`.
pub fn neighborhood_clique(g: &Graph, v: usize) -> Result<VertexSet, StructureError> {
    let nbrs = g.neighbors(v)?;
    Ok(lex_first_max_clique_within(g, &nbrs))
}

/// The unique vertex of `q` not adjacent to `u`, or the full list of misses.
fn unique_miss(g: &Graph, q: &VertexSet, u: usize) -> Result<usize, ViolationReason> {
    let missing = q.difference(&g.adjacent(u));
    if missing.len() == 1 {
        Ok(missing.first().expect("one element"))
    } else {
        Err(ViolationReason::MissingNeighborNotUnique {
            vertex: u,
            missing: missing.to_vec(),
        })
    }
}

fn primes(g: &Graph, q: &VertexSet, w: usize, z: usize) -> Result<(usize, usize), ViolationReason> {
    let wp = unique_miss(g, q, w)?;
    let zp = unique_miss(g, q, z)?;
    if wp == zp {
        return Err(ViolationReason::SharedMissingNeighbor { w, z, missing: wp });
    }
    Ok((wp, zp))
}

fn classify_remainder(
    g: &Graph,
    q: &VertexSet,
    rem: &VertexSet,
) -> Result<Lemma1Case, ViolationReason> {
    if g.is_clique(rem) {
        return Ok(Lemma1Case::Complete);
    }
    let r = rem.to_vec();
    match r.len() {
        2 => {
            let (w, z) = (r[0], r[1]);
            let (w_prime, z_prime) = primes(g, q, w, z)?;
            Ok(Lemma1Case::TwoNonadjacent {
                w,
                z,
                w_prime,
                z_prime,
            })
        }
        3 => {
            let non_edges: Vec<(usize, usize)> = [(0, 1), (0, 2), (1, 2)]
                .into_iter()
                .map(|(i, j)| (r[i], r[j]))
                .filter(|&(a, b)| !g.has_edge(a, b))
                .collect();
            if non_edges.len() != 1 {
                return Err(ViolationReason::TooManyNonEdges { remainder: r });
            }
            let (w, z) = non_edges[0];
            let x = r
                .iter()
                .copied()
                .find(|&u| u != w && u != z)
                .expect("three vertices");
            let (w_prime, z_prime) = primes(g, q, w, z)?;
            for prime in [w_prime, z_prime] {
                if g.has_edge(x, prime) {
                    return Err(ViolationReason::MiddleSeesPrime { x, prime });
                }
            }
            let mut core = q.clone();
            core.remove(w_prime);
            core.remove(z_prime);
            if let Some(missing) = core.difference(&g.adjacent(x)).first() {
                return Err(ViolationReason::MiddleMissesClique { x, missing });
            }
            Ok(Lemma1Case::ThreeWithMiddle {
                w,
                z,
                x,
                w_prime,
                z_prime,
            })
        }
        _ => Err(ViolationReason::RemainderTooLarge { remainder: r }),
    }
}

/// Classifies `N(v) − q` given a maximum clique `q` of `⟨N(v)⟩`.
pub fn classify_vertex(g: &Graph, v: usize, q: &VertexSet) -> Result<Lemma1Case, StructureError> {
    let nbrs = g.neighbors(v)?;
    if !q.is_subset(&nbrs) || q.iter().any(|u| u >= g.n()) {
        return Err(StructureError::NotInNeighborhood(q.to_vec(), v));
    }
    if !g.is_clique(q) {
        return Err(StructureError::NotAClique(q.to_vec()));
    }
    let max = max_clique_within(g, &nbrs, Deadline::none())
        .expect("no deadline")
        .len();
    if q.len() != max {
        return Err(StructureError::NotMaximum {
            vertex: v,
            got: q.len(),
            max,
        });
    }
    let rem = nbrs.difference(q);
    Ok(classify_remainder(g, q, &rem).unwrap_or_else(|reason| Lemma1Case::Violation { reason }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CliqueMode {
    /// Classify against the deterministic `Q_v` only.
    Single,
    /// Classify against every maximum clique of `⟨N(v)⟩`.
    AllMaxCliques,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueClassification {
    pub clique: VertexSet,
    pub case: Lemma1Case,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexReport {
    pub vertex: usize,
    pub results: Vec<CliqueClassification>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CaseCounts {
    pub complete: usize,
    pub two_nonadjacent: usize,
    pub three_with_middle: usize,
    pub violation: usize,
}

impl CaseCounts {
    fn add(&mut self, case: &Lemma1Case) {
        match case {
            Lemma1Case::Complete => self.complete += 1,
            Lemma1Case::TwoNonadjacent { .. } => self.two_nonadjacent += 1,
            Lemma1Case::ThreeWithMiddle { .. } => self.three_with_middle += 1,
            Lemma1Case::Violation { .. } => self.violation += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma1Violation {
    pub vertex: usize,
    pub clique: VertexSet,
    pub reason: ViolationReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma1Report {
    pub mode: CliqueMode,
    pub vertices: Vec<VertexReport>,
    pub summary: CaseCounts,
    pub violations: Vec<Lemma1Violation>,
}

impl Lemma1Report {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Classifies every vertex. Non-members are accepted; their reports may
/// contain violations.
pub fn verify_lemma1(g: &Graph, mode: CliqueMode) -> Lemma1Report {
    let mut vertices = Vec::with_capacity(g.n());
    let mut summary = CaseCounts::default();
    let mut violations = Vec::new();
    for v in g.vertices() {
        let nbrs = g.adjacent(v);
        let cliques = match mode {
            CliqueMode::Single => vec![lex_first_max_clique_within(g, &nbrs)],
            CliqueMode::AllMaxCliques => all_max_cliques_within(g, &nbrs),
        };
        let results: Vec<CliqueClassification> = cliques
            .into_iter()
            .map(|q| {
                let rem = nbrs.difference(&q);
                let case = classify_remainder(g, &q, &rem)
                    .unwrap_or_else(|reason| Lemma1Case::Violation { reason });
                summary.add(&case);
                if let Lemma1Case::Violation { reason } = &case {
                    violations.push(Lemma1Violation {
                        vertex: v,
                        clique: q.clone(),
                        reason: reason.clone(),
                    });
                }
                CliqueClassification { clique: q, case }
            })
            .collect();
        vertices.push(VertexReport { vertex: v, results });
    }
    Lemma1Report {
        mode,
        vertices,
        summary,
        violations,
    }
}
