//! Bounded-palette colouring by vertex insertion with Kempe-chain repair.
//!
//! Vertices are inserted in [`insertion_order`]. When the inserted vertex
//! `v` has no free colour, the following stages are tried in order and the
//! first success is logged:
//!
//! 1. **free colour**: some colour in `1..=budget` is unused on `N(v)`.
//! 2. **single swap**: for colours `a` (present on `N(v)`) and `b`, the
//!    `(a, b)`-chains through the `a`-neighbours of `v` contain no
//!    `b`-neighbour of `v`; swapping them frees `a`.
//! 3. **sequence shift**: walk a chain `v = v_0, v_1, ..., v_t` where
//!    `v_{i+1}` is the only neighbour of `v_i` holding its colour; `v_i`
//!    takes that colour and the last vertex `v_t` is recoloured by stage 1
//!    or 2.
//! 4. **random walk**: seeded random Kempe swaps around `v`, retrying
//!    stages 1-2 after each swap.
//! 5. **exact fallback**: re-solve the coloured prefix plus `v` exactly. If
//!    that fails the graph is not `budget`-colourable.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::exact::{clique_number, component_from, is_k_colorable, Coloring};
use crate::graph::{Graph, VertexSet};
use crate::patterns::{is_class_member, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    FreeColor,
    SingleSwap,
    SequenceShift,
    RandomWalk,
    ExactFallback,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StageRecord {
    pub vertex: usize,
    pub stage: Stage,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct StageCounts {
    pub free_color: usize,
    pub single_swap: usize,
    pub sequence_shift: usize,
    pub random_walk: usize,
    pub exact_fallback: usize,
}

impl StageCounts {
    fn bump(&mut self, stage: Stage) {
        match stage {
            Stage::FreeColor => self.free_color += 1,
            Stage::SingleSwap => self.single_swap += 1,
            Stage::SequenceShift => self.sequence_shift += 1,
            Stage::RandomWalk => self.random_walk += 1,
            Stage::ExactFallback => self.exact_fallback += 1,
        }
    }

    pub fn merge(&mut self, other: &StageCounts) {
        self.free_color += other.free_color;
        self.single_swap += other.single_swap;
        self.sequence_shift += other.sequence_shift;
        self.random_walk += other.random_walk;
        self.exact_fallback += other.exact_fallback;
    }

    pub fn total(&self) -> usize {
        self.free_color
            + self.single_swap
            + self.sequence_shift
            + self.random_walk
            + self.exact_fallback
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepairOutcome {
    pub coloring: Coloring,
    pub stage_log: Vec<StageRecord>,
    pub counts: StageCounts,
    pub fallback_used: bool,
}

impl RepairOutcome {
    pub fn colors_used(&self) -> usize {
        self.coloring.colors_used()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairConfig {
    pub seed: u64,
    /// Random-walk swaps per restart, as a multiple of `n`.
    pub walk_swaps_per_vertex: usize,
    pub walk_restarts: usize,
    /// Longest chain tried by the sequence shift.
    pub shift_max_depth: usize,
    /// Chain extensions examined per stuck vertex.
    pub shift_node_cap: usize,
}

impl Default for RepairConfig {
    fn default() -> Self {
        RepairConfig {
            seed: 0,
            walk_swaps_per_vertex: 2,
            walk_restarts: 8,
            shift_max_depth: 16,
            shift_node_cap: 256,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepairError {
    #[error("graph is not in the class: induced {} at {:?}", .0.pattern, .0.embedding.map)]
    NotMember(Witness),
    #[error("no colouring with omega + 1 = {budget} colours exists")]
    BoundExceeded { budget: usize },
}

/// Degeneracy order: repeatedly remove a minimum-degree vertex (largest id
/// on ties) and output the removals in reverse.
pub fn insertion_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by(|&a, &b| degree[a].cmp(&degree[b]).then(b.cmp(&a)))
            .expect("a vertex remains");
        removed[v] = true;
        for u in g.adjacent(v).iter() {
            if !removed[u] {
                degree[u] -= 1;
            }
        }
        order.push(v);
    }
    order.reverse();
    order
}

struct Repairer<'a> {
    g: &'a Graph,
    k: usize,
    /// 0 = not yet coloured.
    colors: Vec<usize>,
    rng: ChaCha8Rng,
    cfg: &'a RepairConfig,
}

impl Repairer<'_> {
    fn neighbor_colors(&self, v: usize) -> Vec<usize> {
        let mut count = vec![0usize; self.k + 1];
        for u in self.g.adjacent(v).iter() {
            count[self.colors[u]] += 1;
        }
        count
    }

    fn free_color(&self, v: usize) -> Option<usize> {
        let count = self.neighbor_colors(v);
        (1..=self.k).find(|&c| count[c] == 0)
    }

    fn try_free(&mut self, v: usize) -> bool {
        match self.free_color(v) {
            Some(c) => {
                self.colors[v] = c;
                true
            }
            None => false,
        }
    }

    fn try_single_swap(&mut self, v: usize) -> bool {
        let nbrs = self.g.adjacent(v);
        let count = self.neighbor_colors(v);
        for a in (1..=self.k).filter(|&a| count[a] > 0) {
            for b in (1..=self.k).filter(|&b| b != a) {
                let mut chain = VertexSet::empty(self.g.n());
                for u in nbrs.iter().filter(|&u| self.colors[u] == a) {
                    if !chain.contains(u) {
                        for w in component_from(self.g, &self.colors, u, (a, b)) {
                            chain.insert(w);
                        }
                    }
                }
                if chain
                    .iter()
                    .any(|w| nbrs.contains(w) && self.colors[w] == b)
                {
                    continue;
                }
                for w in chain.iter() {
                    self.colors[w] = if self.colors[w] == a { b } else { a };
                }
                self.colors[v] = a;
                return true;
            }
        }
        false
    }

    fn try_sequence_shift(&mut self, v: usize) -> bool {
        let mut in_chain = vec![false; self.g.n()];
        in_chain[v] = true;
        let mut budget = self.cfg.shift_node_cap;
        self.shift_from(v, 0, &mut in_chain, &mut budget)
    }

    /// `hole` is uncoloured; try to hand it the colour of a unique blocker
    /// and recolour the blocker instead.
    fn shift_from(
        &mut self,
        hole: usize,
        depth: usize,
        in_chain: &mut [bool],
        budget: &mut usize,
    ) -> bool {
        if depth >= self.cfg.shift_max_depth {
            return false;
        }
        let count = self.neighbor_colors(hole);
        for c in (1..=self.k).filter(|&c| count[c] == 1) {
            let blocker = self
                .g
                .adjacent(hole)
                .iter()
                .find(|&u| self.colors[u] == c)
                .expect("count says one");
            if in_chain[blocker] {
                continue;
            }
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            self.colors[hole] = c;
            self.colors[blocker] = 0;
            in_chain[blocker] = true;
            if self.try_free(blocker) || self.try_single_swap(blocker) {
                return true;
            }
            if self.shift_from(blocker, depth + 1, in_chain, budget) {
                return true;
            }
            in_chain[blocker] = false;
            self.colors[blocker] = c;
            self.colors[hole] = 0;
        }
        false
    }

    fn try_random_walk(&mut self, v: usize) -> bool {
        let snapshot = self.colors.clone();
        let steps = self.cfg.walk_swaps_per_vertex * self.g.n();
        let nbrs: Vec<usize> = self.g.adjacent(v).iter().collect();
        if nbrs.is_empty() || self.k < 2 {
            return false;
        }
        for _ in 0..self.cfg.walk_restarts {
            self.colors.copy_from_slice(&snapshot);
            for _ in 0..steps {
                let u = nbrs[self.rng.gen_range(0..nbrs.len())];
                let a = self.colors[u];
                if a == 0 {
                    continue;
                }
                let mut b = self.rng.gen_range(1..self.k);
                if b >= a {
                    b += 1;
                }
                for w in component_from(self.g, &self.colors, u, (a, b)) {
                    self.colors[w] = if self.colors[w] == a { b } else { a };
                }
                if self.try_free(v) || self.try_single_swap(v) {
                    return true;
                }
            }
        }
        self.colors.copy_from_slice(&snapshot);
        false
    }

    fn exact_fallback(&mut self, v: usize) -> bool {
        let mut prefix =
            VertexSet::from_vertices(self.g.n(), (0..self.g.n()).filter(|&u| self.colors[u] != 0));
        prefix.insert(v);
        let (sub, map) = self.g.induced(&prefix).expect("prefix within range");
        match is_k_colorable(&sub, self.k) {
            Some(c) => {
                for (i, &orig) in map.iter().enumerate() {
                    self.colors[orig] = c.color(i);
                }
                true
            }
            None => false,
        }
    }

    fn insert(&mut self, v: usize) -> Option<Stage> {
        if self.try_free(v) {
            return Some(Stage::FreeColor);
        }
        if self.try_single_swap(v) {
            return Some(Stage::SingleSwap);
        }
        if self.try_sequence_shift(v) {
            return Some(Stage::SequenceShift);
        }
        if self.try_random_walk(v) {
            return Some(Stage::RandomWalk);
        }
        if self.exact_fallback(v) {
            return Some(Stage::ExactFallback);
        }
        None
    }
}

/// A proper colouring with at most `budget` colours, or `None` when the
/// exact fallback proves none exists.
pub fn color_bounded(g: &Graph, budget: usize) -> Option<RepairOutcome> {
    color_bounded_with(g, budget, &RepairConfig::default())
}

pub fn color_bounded_with(g: &Graph, budget: usize, cfg: &RepairConfig) -> Option<RepairOutcome> {
    if budget == 0 && g.n() > 0 {
        return None;
    }
    let mut r = Repairer {
        g,
        k: budget,
        colors: vec![0; g.n()],
        rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        cfg,
    };
    let mut stage_log = Vec::with_capacity(g.n());
    let mut counts = StageCounts::default();
    for v in insertion_order(g) {
        let stage = r.insert(v)?;
        counts.bump(stage);
        stage_log.push(StageRecord { vertex: v, stage });
    }
    debug_assert!(g.edges().all(|(u, v)| r.colors[u] != r.colors[v]));
    Some(RepairOutcome {
        coloring: Coloring::new(r.colors, budget),
        fallback_used: counts.exact_fallback > 0,
        stage_log,
        counts,
    })
}

/// Colours a class member with at most `ω + 1` colours.
pub fn color_class_graph(g: &Graph) -> Result<RepairOutcome, RepairError> {
    color_class_graph_with(g, &RepairConfig::default())
}

pub fn color_class_graph_with(g: &Graph, cfg: &RepairConfig) -> Result<RepairOutcome, RepairError> {
    if let Some(w) = is_class_member(g).into_witness() {
        return Err(RepairError::NotMember(w));
    }
    let budget = clique_number(g).omega + 1;
    color_bounded_with(g, budget, cfg).ok_or(RepairError::BoundExceeded { budget })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::verify_coloring;
    use crate::graph::generators::{blowup, complete, cycle, mycielski_graph, star};

    #[test]
    fn insertion_order_examples() {
        assert_eq!(insertion_order(&complete(4).unwrap()), vec![0, 1, 2, 3]);
        assert_eq!(insertion_order(&star(3).unwrap()), vec![0, 1, 2, 3]);
        let c5 = cycle(5).unwrap();
        let order = insertion_order(&c5);
        for (i, &v) in order.iter().enumerate() {
            let earlier = order[..i].iter().filter(|&&u| c5.has_edge(u, v)).count();
            assert!(earlier <= 2);
        }
    }

    #[test]
    fn color_bounded_examples() {
        let c9 = cycle(9).unwrap();
        let out = color_bounded(&c9, 3).unwrap();
        assert!(verify_coloring(&c9, &out.coloring));
        assert_eq!(out.colors_used(), 3);

        let k6 = complete(6).unwrap();
        let out = color_bounded(&k6, 6).unwrap();
        assert!(out.stage_log.iter().all(|r| r.stage == Stage::FreeColor));
        assert_eq!(out.counts.free_color, 6);

        assert!(color_bounded(&cycle(5).unwrap(), 2).is_none());
        let b3 = blowup(&cycle(5).unwrap(), 3).unwrap().graph;
        assert!(color_bounded(&b3, 7).is_none());
        assert!(color_bounded(&Graph::empty(0), 0).is_some());
        assert!(color_bounded(&Graph::empty(1), 0).is_none());
    }

    #[test]
    fn class_graph_examples() {
        let c7 = cycle(7).unwrap();
        let out = color_class_graph(&c7).unwrap();
        assert_eq!(out.colors_used(), 3);
        let k5 = complete(5).unwrap();
        let out = color_class_graph(&k5).unwrap();
        assert!(out.colors_used() <= 6);
        assert!(verify_coloring(&k5, &out.coloring));
    }

    #[test]
    fn non_member_rejected_with_witness() {
        let g = mycielski_graph(4).unwrap();
        match color_class_graph(&g) {
            Err(RepairError::NotMember(w)) => {
                assert_eq!(w.pattern, "claw");
                assert!(w.is_valid(&g));
            }
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    fn repairer<'a>(
        g: &'a Graph,
        k: usize,
        colors: Vec<usize>,
        cfg: &'a RepairConfig,
    ) -> Repairer<'a> {
        Repairer {
            g,
            k,
            colors,
            rng: ChaCha8Rng::seed_from_u64(0),
            cfg,
        }
    }

    #[test]
    fn single_swap_frees_a_colour() {
        // two coloured edges 0-1 and 2-3; vertex 4 sees 0 (colour 1) and 2
        // (colour 2). The (1,2)-chain {0,1} avoids 2, so swapping it frees 1.
        let g = Graph::new(5, [(0, 1), (2, 3), (4, 0), (4, 2)]).unwrap();
        let cfg = RepairConfig::default();
        let mut r = repairer(&g, 2, vec![1, 2, 2, 1, 0], &cfg);
        assert!(r.free_color(4).is_none());
        assert!(r.try_single_swap(4));
        assert_eq!(r.colors, vec![2, 1, 2, 1, 1]);
    }

    #[test]
    fn single_swap_refuses_blocked_chain() {
        // odd cycle: every chain through an a-neighbour reaches the b-neighbour
        let g = cycle(5).unwrap();
        let cfg = RepairConfig::default();
        let mut r = repairer(&g, 2, vec![1, 2, 1, 2, 0], &cfg);
        assert!(!r.try_single_swap(4));
        assert_eq!(r.colors, vec![1, 2, 1, 2, 0]);
    }

    #[test]
    fn sequence_shift_moves_a_chain() {
        let g = Graph::new(5, [(0, 1), (0, 3), (0, 4), (1, 2), (1, 4), (2, 4), (3, 4)]).unwrap();
        let cfg = RepairConfig::default();
        let start = vec![3, 2, 1, 1, 0];
        let mut r = repairer(&g, 3, start.clone(), &cfg);
        assert!(!r.try_free(4) && !r.try_single_swap(4));
        assert_eq!(r.colors, start);
        assert!(r.try_sequence_shift(4));
        assert_eq!(r.colors, vec![3, 1, 3, 1, 2]);
        assert!(g.edges().all(|(u, v)| r.colors[u] != r.colors[v]));
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let g = blowup(&cycle(5).unwrap(), 2).unwrap().graph;
        let cfg = RepairConfig {
            seed: 7,
            ..RepairConfig::default()
        };
        assert_eq!(
            color_bounded_with(&g, 5, &cfg),
            color_bounded_with(&g, 5, &cfg)
        );
    }
}
