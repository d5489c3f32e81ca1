//! Exact invariants with certificates: clique number, k-colourability,
//! chromatic number; plus bichromatic (Kempe) component machinery.

mod clique;
mod coloring;
mod kempe;

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

pub use clique::{
    all_max_cliques_within, clique_number, clique_number_within, lex_first_max_clique_within,
    max_clique_within, CliqueResult,
};
pub use coloring::{
    chromatic_number, chromatic_number_within, greedy_upper_bound, is_k_colorable,
    k_coloring_within, ChromaticResult,
};
pub(crate) use kempe::component_from;
pub use kempe::{kempe_components, kempe_swap, KempeComponent, Shape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("solver time budget exhausted")]
pub struct TimedOut;

/// Optional wall-clock limit shared by the branch-and-bound searches.
#[derive(Debug, Clone, Copy, Default)]
pub struct Deadline(Option<Instant>);

impl Deadline {
    pub fn none() -> Deadline {
        Deadline(None)
    }

    pub fn after(budget: Duration) -> Deadline {
        Deadline(Instant::now().checked_add(budget))
    }

    pub fn expired(&self) -> bool {
        self.0.is_some_and(|t| Instant::now() >= t)
    }
}

/// Counts search nodes and polls the clock every few thousand of them.
#[derive(Debug)]
pub(crate) struct NodeClock {
    deadline: Deadline,
    nodes: u64,
}

impl NodeClock {
    pub(crate) fn new(deadline: Deadline) -> Self {
        NodeClock { deadline, nodes: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), TimedOut> {
        self.nodes += 1;
        if self.nodes & 0xfff == 0 && self.deadline.expired() {
            Err(TimedOut)
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("colour pair must be distinct, got ({0}, {0})")]
    SameColors(usize),
    #[error("colour {color} outside palette 1..={k}")]
    ColorOutOfPalette { color: usize, k: usize },
    #[error("component vertex {vertex} no longer carries either colour of the pair")]
    StaleComponent { vertex: usize },
    #[error("colouring covers {got} vertices, graph has {expected}")]
    SizeMismatch { expected: usize, got: usize },
}

/// Total vertex colouring with colours `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, k: usize) -> Coloring {
        Coloring { colors, k }
    }

    /// Palette size taken as the largest colour present.
    pub fn from_colors(colors: Vec<usize>) -> Coloring {
        let k = colors.iter().copied().max().unwrap_or(0);
        Coloring { colors, k }
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn palette(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colours actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        let mut count = 0;
        for &c in &self.colors {
            if c <= self.k && !seen[c] {
                seen[c] = true;
                count += 1;
            }
        }
        count
    }

    /// Vertices with colour `c` (the "c-vertices").
    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == c)
            .collect()
    }

    pub(crate) fn into_colors(self) -> Vec<usize> {
        self.colors
    }
}

/// True iff `coloring` assigns every vertex a colour in `1..=k` and no edge
/// is monochromatic.
pub fn verify_coloring(g: &Graph, coloring: &Coloring) -> bool {
    coloring.colors.len() == g.n()
        && coloring
            .colors
            .iter()
            .all(|&c| (1..=coloring.k).contains(&c))
        && g.edges()
            .all(|(u, v)| coloring.colors[u] != coloring.colors[v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::complete;

    #[test]
    fn verify_examples() {
        let k3 = complete(3).unwrap();
        assert!(verify_coloring(&k3, &Coloring::new(vec![1, 2, 3], 3)));
        assert!(!verify_coloring(&k3, &Coloring::new(vec![1, 1, 2], 3)));
        assert!(!verify_coloring(&k3, &Coloring::new(vec![1, 2], 3)));
        assert!(!verify_coloring(&k3, &Coloring::new(vec![1, 2, 4], 3)));
        assert!(!verify_coloring(&k3, &Coloring::new(vec![0, 1, 2], 3)));
    }

    #[test]
    fn coloring_accessors() {
        let c = Coloring::from_colors(vec![2, 1, 2, 4]);
        assert_eq!(c.palette(), 4);
        assert_eq!(c.colors_used(), 3);
        assert_eq!(c.class(2), vec![0, 2]);
    }

    #[test]
    fn deadline_in_the_past_expires() {
        assert!(Deadline::after(Duration::ZERO).expired());
        assert!(!Deadline::none().expired());
    }
}
