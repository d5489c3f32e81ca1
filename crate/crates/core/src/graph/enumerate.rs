//! Exhaustive enumeration of labelled graphs on a fixed vertex set.
//!
//! Graph number `mask` has edge `pairs[i]` iff bit `i` of `mask` is set, where
//! `pairs` lists `(u, v)`, `u < v`, in lexicographic order. Isomorphic copies
//! are all produced; no canonical reduction happens here.

use thiserror::Error;

use super::{Graph, GraphBuilder};

/// Largest `n` for which labelled enumeration is offered (2^21 graphs).
pub const MAX_ENUMERATION_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("labelled enumeration is limited to n <= {MAX_ENUMERATION_N} (got {0}); ingest larger corpora as graph6")]
pub struct EnumerationTooLarge(pub usize);

pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

pub fn labeled_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Decodes one edge mask into a graph.
pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut b = GraphBuilder::new(n).expect("enumeration sizes are small");
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            b.add_edge(u, v).expect("pair in range");
        }
    }
    b.build()
}

#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = graph_from_mask(self.n, &self.pairs, self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

/// Every labelled graph on `n` vertices, in edge-mask order.
pub fn enumerate_labeled(n: usize) -> Result<LabeledGraphs, EnumerationTooLarge> {
    if n > MAX_ENUMERATION_N {
        return Err(EnumerationTooLarge(n));
    }
    Ok(LabeledGraphs {
        n,
        pairs: vertex_pairs(n),
        next: 0,
        end: labeled_count(n),
    })
}
