use serde::Serialize;

use super::{clique_number_within, Coloring, Deadline, NodeClock, TimedOut};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChromaticResult {
    pub chi: usize,
    pub coloring: Coloring,
}

/// Saturation-degree-first greedy colouring (DSATUR). Ties go to the larger
/// degree, then the smaller id; each vertex takes its smallest free colour.
pub fn greedy_upper_bound(g: &Graph) -> (usize, Coloring) {
    let n = g.n();
    let mut colors = vec![0usize; n];
    let mut seen: Vec<Vec<bool>> = vec![vec![false; n + 2]; n];
    let mut sat = vec![0usize; n];
    let degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut k = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == 0)
            .max_by(|&a, &b| {
                (sat[a], degree[a])
                    .cmp(&(sat[b], degree[b]))
                    .then(b.cmp(&a))
            })
            .expect("an uncoloured vertex remains");
        let c = (1..).find(|&c| !seen[v][c]).expect("some colour is free");
        colors[v] = c;
        k = k.max(c);
        for u in g.adjacent(v).iter() {
            if !seen[u][c] {
                seen[u][c] = true;
                sat[u] += 1;
            }
        }
    }
    (k, Coloring::new(colors, k))
}

/// DSATUR branch and bound for a fixed palette size.
struct KColoring<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    /// `forbid[v * (k + 1) + c]` = number of neighbours of `v` coloured `c`.
    forbid: Vec<u32>,
    sat: Vec<usize>,
    degree: Vec<usize>,
    uncolored: usize,
    clock: NodeClock,
}

impl<'a> KColoring<'a> {
    fn new(g: &'a Graph, k: usize, deadline: Deadline) -> Self {
        let n = g.n();
        KColoring {
            g,
            k,
            colors: vec![0; n],
            forbid: vec![0; n * (k + 1)],
            sat: vec![0; n],
            degree: g.vertices().map(|v| g.degree(v)).collect(),
            uncolored: n,
            clock: NodeClock::new(deadline),
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        self.uncolored -= 1;
        let stride = self.k + 1;
        for u in crate::graph::iter_words(self.g.row(v)) {
            let slot = &mut self.forbid[u * stride + c];
            if *slot == 0 {
                self.sat[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = 0;
        self.uncolored += 1;
        let stride = self.k + 1;
        for u in crate::graph::iter_words(self.g.row(v)) {
            let slot = &mut self.forbid[u * stride + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    fn pick(&self) -> usize {
        let mut best = usize::MAX;
        let mut key = (0, 0);
        for v in 0..self.colors.len() {
            if self.colors[v] == 0 {
                let kv = (self.sat[v], self.degree[v]);
                if best == usize::MAX || kv > key {
                    best = v;
                    key = kv;
                }
            }
        }
        best
    }

    /// `used` is the largest colour in play; opening colour `used + 1` is the
    /// only new colour tried since unused colours are interchangeable.
    fn solve(&mut self, used: usize) -> Result<bool, TimedOut> {
        if self.uncolored == 0 {
            return Ok(true);
        }
        self.clock.tick()?;
        let v = self.pick();
        if self.sat[v] >= self.k {
            return Ok(false);
        }
        let stride = self.k + 1;
        let top = (used + 1).min(self.k);
        for c in 1..=top {
            if self.forbid[v * stride + c] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.solve(used.max(c))? {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }
}

fn k_coloring_seeded(
    g: &Graph,
    k: usize,
    clique: &VertexSet,
    deadline: Deadline,
) -> Result<Option<Coloring>, TimedOut> {
    if g.n() == 0 {
        return Ok(Some(Coloring::new(Vec::new(), k)));
    }
    if clique.len() > k {
        return Ok(None);
    }
    let mut search = KColoring::new(g, k, deadline);
    // A clique needs distinct colours; fixing them to 1..=ω removes the
    // palette symmetry among them.
    for (i, v) in clique.iter().enumerate() {
        search.assign(v, i + 1);
    }
    if search.solve(clique.len())? {
        Ok(Some(Coloring::new(search.colors, k)))
    } else {
        Ok(None)
    }
}

/// A proper colouring with at most `k` colours, if one exists.
pub fn k_coloring_within(
    g: &Graph,
    k: usize,
    deadline: Deadline,
) -> Result<Option<Coloring>, TimedOut> {
    let clique = clique_number_within(g, deadline)?.witness;
    k_coloring_seeded(g, k, &clique, deadline)
}

pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    k_coloring_within(g, k, Deadline::none()).expect("no deadline")
}

/// Exact chromatic number: start from the DSATUR greedy bound and lower `k`
/// until `k - 1` colours are infeasible (or the clique bound is reached).
pub fn chromatic_number_within(g: &Graph, deadline: Deadline) -> Result<ChromaticResult, TimedOut> {
    let (mut best_k, mut best) = greedy_upper_bound(g);
    let clique = clique_number_within(g, deadline)?.witness;
    let omega = clique.len();
    while best_k > omega {
        match k_coloring_seeded(g, best_k - 1, &clique, deadline)? {
            Some(c) => {
                best_k = c.colors_used();
                best = c;
            }
            None => break,
        }
    }
    Ok(ChromaticResult {
        chi: best_k,
        coloring: Coloring::new(best.into_colors(), best_k),
    })
}

pub fn chromatic_number(g: &Graph) -> ChromaticResult {
    chromatic_number_within(g, Deadline::none()).expect("no deadline")
}
