//! Induced copies of small fixed patterns, and membership in the class of
//! graphs with no induced claw, `H1` or `H2`.
//!
//! Catalog (0-based vertex ids):
//!
//! * `claw` = `K_{1,3}`, centre 0.
//! * `H1`: diamond on `{0,1,2,3}` (0 and 1 adjacent to everything, edge 2-3
//!   missing) plus a pendant 4 hanging off diamond vertex 2. Degrees
//!   `(3,3,3,2,1)`.
//! * `H2`: the 5-cycle `0-2-3-4-1-0` with chords `0-4` and `1-2`; the
//!   complement of `P_3 ∪ K_2`. Degrees `(3,3,3,3,2)`.
//! * `diamond` = `K_4` minus an edge, used by tests.

use std::collections::HashSet;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{self, Graph, GraphError};

/// Largest caller-supplied pattern accepted by [`Pattern::new`].
pub const MAX_PATTERN_VERTICES: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("patterns are limited to {MAX_PATTERN_VERTICES} vertices, got {0}")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone)]
pub struct Pattern {
    name: String,
    graph: Graph,
    /// Search order: pattern vertices by decreasing degree, ties by id.
    order: Vec<usize>,
}

impl Pattern {
    pub fn new(name: impl Into<String>, graph: Graph) -> Result<Pattern, PatternError> {
        if graph.n() > MAX_PATTERN_VERTICES {
            return Err(PatternError::TooLarge(graph.n()));
        }
        let mut order: Vec<usize> = graph.vertices().collect();
        order.sort_by_key(|&v| std::cmp::Reverse(graph.degree(v)));
        Ok(Pattern {
            name: name.into(),
            graph,
            order,
        })
    }

    fn fixed(name: &str, n: usize, edges: &[(usize, usize)]) -> Pattern {
        Pattern::new(
            name,
            Graph::new(n, edges.iter().copied()).expect("catalog edges are valid"),
        )
        .expect("catalog patterns are small")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn claw() -> &'static Pattern {
        &catalog().claw
    }

    pub fn h1() -> &'static Pattern {
        &catalog().h1
    }

    pub fn h2() -> &'static Pattern {
        &catalog().h2
    }

    pub fn diamond() -> &'static Pattern {
        &catalog().diamond
    }
}

struct Catalog {
    claw: Pattern,
    h1: Pattern,
    h2: Pattern,
    diamond: Pattern,
}

fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let c = Catalog {
            claw: Pattern::fixed("claw", 4, &[(0, 1), (0, 2), (0, 3)]),
            h1: Pattern::fixed("H1", 5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4)]),
            h2: Pattern::fixed(
                "H2",
                5,
                &[(0, 1), (0, 2), (0, 4), (1, 2), (1, 4), (2, 3), (3, 4)],
            ),
            diamond: Pattern::fixed("diamond", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        };
        if let Err(msg) = check_catalog(&c) {
            panic!("pattern catalog is inconsistent: {msg}");
        }
        c
    })
}

fn check_catalog(c: &Catalog) -> Result<(), String> {
    let expect = |p: &Pattern, edges: usize, degrees: &[usize]| {
        if p.graph.edge_count() != edges || p.graph.degree_sequence() != degrees {
            Err(format!(
                "{} has {} edges and degrees {:?}",
                p.name,
                p.graph.edge_count(),
                p.graph.degree_sequence()
            ))
        } else {
            Ok(())
        }
    };
    expect(&c.claw, 3, &[3, 1, 1, 1])?;
    expect(&c.h1, 6, &[3, 3, 3, 2, 1])?;
    expect(&c.h2, 7, &[3, 3, 3, 3, 2])?;
    expect(&c.diamond, 5, &[3, 3, 2, 2])?;
    // Same order and size: an induced embedding is an isomorphism.
    let p3_k2 = Pattern::new(
        "P3+K2",
        Graph::new(5, [(0, 1), (1, 2), (3, 4)]).expect("valid"),
    )
    .expect("small");
    let co_h2 = c.h2.graph.complement();
    if co_h2.edge_count() != 3 || find_induced(&co_h2, &p3_k2).is_none() {
        return Err("complement of H2 is not P3 ∪ K2".into());
    }
    Ok(())
}

/// Runs the catalog consistency checks (edge counts, degree sequences,
/// `co-H2 = P3 ∪ K2`).
pub fn catalog_self_check() -> Result<(), String> {
    check_catalog(catalog())
}

/// The forbidden patterns, in detection order.
pub fn forbidden() -> [&'static Pattern; 3] {
    [Pattern::claw(), Pattern::h1(), Pattern::h2()]
}

/// Injective map from pattern vertices (by index) to host vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity plus edge-for-edge and non-edge-for-non-edge
    /// agreement with `host`.
    pub fn is_valid(&self, host: &Graph, pattern: &Pattern) -> bool {
        let p = &pattern.graph;
        if self.map.len() != p.n() || self.map.iter().any(|&v| v >= host.n()) {
            return false;
        }
        let distinct: HashSet<usize> = self.map.iter().copied().collect();
        if distinct.len() != self.map.len() {
            return false;
        }
        (0..p.n()).all(|a| {
            (a + 1..p.n()).all(|b| p.has_edge(a, b) == host.has_edge(self.map[a], self.map[b]))
        })
    }

    pub fn image(&self) -> Vec<usize> {
        let mut img = self.map.clone();
        img.sort_unstable();
        img
    }
}

/// Backtracking over pattern vertices in `pattern.order`, host candidates in
/// increasing id. `visit` returns `true` to stop.
fn search(host: &Graph, pattern: &Pattern, mut visit: impl FnMut(&[usize]) -> bool) {
    let k = pattern.graph.n();
    if k == 0 {
        visit(&[]);
        return;
    }
    if k > host.n() {
        return;
    }
    let stride = graph::words_for(host.n());
    let host_degree: Vec<usize> = host.vertices().map(|v| host.degree(v)).collect();
    let pat_degree: Vec<usize> = pattern
        .graph
        .vertices()
        .map(|v| pattern.graph.degree(v))
        .collect();
    let mut map = vec![usize::MAX; k];
    let mut cand = vec![0u64; stride * k];
    let full = host.all_vertices();

    // Candidates for depth d given the assignments at depths < d.
    let fill = |d: usize, map: &[usize], cand: &mut [u64]| {
        let slot = &mut cand[d * stride..(d + 1) * stride];
        slot.copy_from_slice(full.words());
        let pv = pattern.order[d];
        for &pu in &pattern.order[..d] {
            let hu = map[pu];
            let row = host.row(hu);
            if pattern.graph.has_edge(pv, pu) {
                for (s, r) in slot.iter_mut().zip(row) {
                    *s &= r;
                }
            } else {
                for (s, r) in slot.iter_mut().zip(row) {
                    *s &= !r;
                }
            }
            slot[hu / 64] &= !(1 << (hu % 64));
        }
    };

    fill(0, &map, &mut cand);
    let mut depth = 0usize;
    loop {
        let slot = &mut cand[depth * stride..(depth + 1) * stride];
        let next = slot.iter().position(|&w| w != 0).map(|i| {
            let b = slot[i].trailing_zeros() as usize;
            slot[i] &= slot[i] - 1;
            i * 64 + b
        });
        match next {
            None => {
                if depth == 0 {
                    return;
                }
                depth -= 1;
            }
            Some(hv) => {
                let pv = pattern.order[depth];
                if host_degree[hv] < pat_degree[pv] {
                    continue;
                }
                map[pv] = hv;
                if depth + 1 == k {
                    if visit(&map) {
                        return;
                    }
                } else {
                    depth += 1;
                    fill(depth, &map, &mut cand);
                }
            }
        }
    }
}

/// First induced copy of `pattern` in `host`, or `None`. Deterministic: the
/// first embedding in lexicographic order of host ids taken along the
/// pattern's search order.
pub fn find_induced(host: &Graph, pattern: &Pattern) -> Option<Embedding> {
    let mut found = None;
    search(host, pattern, |m| {
        found = Some(Embedding { map: m.to_vec() });
        true
    });
    found
}

/// Up to `limit` embeddings with pairwise distinct image sets.
pub fn all_induced(host: &Graph, pattern: &Pattern, limit: usize) -> Vec<Embedding> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    search(host, pattern, |m| {
        let e = Embedding { map: m.to_vec() };
        if seen.insert(e.image()) {
            out.push(e);
        }
        out.len() >= limit
    });
    out
}

/// A forbidden pattern found in a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub pattern: String,
    pub embedding: Embedding,
}

impl Witness {
    pub fn pattern(&self) -> &'static Pattern {
        forbidden()
            .into_iter()
            .find(|p| p.name == self.pattern)
            .expect("witnesses only name catalog patterns")
    }

    pub fn is_valid(&self, host: &Graph) -> bool {
        self.embedding.is_valid(host, self.pattern())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    is_member: bool,
    witness: Option<Witness>,
}

impl ClassVerdict {
    pub fn is_member(&self) -> bool {
        self.is_member
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    pub fn into_witness(self) -> Option<Witness> {
        self.witness
    }
}

/// Checks claw, then `H1`, then `H2`; the first one found is the witness.
pub fn is_class_member(g: &Graph) -> ClassVerdict {
    is_free_of(g, &forbidden())
}

/// Membership in the class of graphs with none of `patterns` induced.
pub fn is_free_of(g: &Graph, patterns: &[&Pattern]) -> ClassVerdict {
    for p in patterns {
        if let Some(embedding) = find_induced(g, p) {
            return ClassVerdict {
                is_member: false,
                witness: Some(Witness {
                    pattern: p.name.clone(),
                    embedding,
                }),
            };
        }
    }
    ClassVerdict {
        is_member: true,
        witness: None,
    }
}
