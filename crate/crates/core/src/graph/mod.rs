//! Simple undirected graphs with bit-row adjacency.
//!
//! Vertices are dense ids `0..n`. A [`Graph`] is immutable once built; use
//! [`GraphBuilder`] when edges have to be added or removed incrementally.

mod bitset;
pub mod enumerate;
pub mod generators;
pub mod io;

use std::fmt;

use thiserror::Error;

pub use bitset::VertexSet;
pub(crate) use bitset::{iter_words, words_for};

/// Largest vertex count accepted by any constructor.
pub const MAX_VERTICES: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{n} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("{what} requires a parameter of at least {min}, got {got}")]
    ParameterTooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list; duplicate pairs collapse.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::new(n)?;
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// The edgeless graph on `n` vertices. Panics above [`MAX_VERTICES`].
    pub fn empty(n: usize) -> Graph {
        GraphBuilder::new(n)
            .expect("vertex count within bound")
            .build()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Raw adjacency words of `u`. Panics when `u` is out of range.
    #[inline]
    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.stride..(u + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.vertices().map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |u| {
            bitset::iter_words(self.row(u))
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Open neighbourhood `N(u)`.
    pub fn neighbors(&self, u: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(u)?;
        Ok(self.adjacent(u))
    }

    /// Closed neighbourhood `N(u) ∪ {u}`.
    pub fn closed_neighbors(&self, u: usize) -> Result<VertexSet, GraphError> {
        let mut s = self.neighbors(u)?;
        s.insert(u);
        Ok(s)
    }

    /// `N(u)` without the range check; panics on a bad vertex.
    #[inline]
    pub(crate) fn adjacent(&self, u: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(u).to_vec())
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|u| {
            let mut rest = set.clone();
            rest.remove(u);
            rest.is_subset(&self.adjacent(u))
        })
    }

    /// Induced subgraph on `set`. The returned map sends new ids to old ids
    /// (new vertex `i` is the `i`-th smallest member of `set`).
    pub fn induced(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if let Some(bad) = set.iter().find(|&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        let map = set.to_vec();
        let mut b = GraphBuilder::new(map.len())?;
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(i, j)?;
                }
            }
        }
        Ok((b.build(), map))
    }

    pub fn complement(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n).expect("same size");
        for u in self.vertices() {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    b.add_edge(u, v).expect("in range");
                }
            }
        }
        b.build()
    }

    /// Sorted (descending) degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|u| self.degree(u)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder {
            graph: self.clone(),
        }
    }

    fn check_vertex(&self, u: usize) -> Result<(), GraphError> {
        if u < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: u,
                n: self.n,
            })
        }
    }

    #[cfg(debug_assertions)]
    fn assert_invariants(&self) {
        for u in self.vertices() {
            assert!(!self.has_edge(u, u), "self-loop at {u}");
            for v in self.adjacent(u).iter() {
                assert!(self.has_edge(v, u), "asymmetric edge {u}-{v}");
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Mutable staging area for a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    graph: Graph,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let stride = words_for(n);
        Ok(GraphBuilder {
            graph: Graph {
                n,
                stride,
                adj: vec![0; n * stride],
            },
        })
    }

    pub fn n(&self) -> usize {
        self.graph.n
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.graph.n;
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self, GraphError> {
        self.check_pair(u, v)?;
        self.set(u, v, true);
        Ok(self)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<&mut Self, GraphError> {
        self.check_pair(u, v)?;
        self.set(u, v, false);
        Ok(self)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.graph.has_edge(u, v)
    }

    fn set(&mut self, u: usize, v: usize, on: bool) {
        let s = self.graph.stride;
        for (a, b) in [(u, v), (v, u)] {
            let w = &mut self.graph.adj[a * s + b / 64];
            if on {
                *w |= 1 << (b % 64);
            } else {
                *w &= !(1 << (b % 64));
            }
        }
    }

    pub fn build(self) -> Graph {
        #[cfg(debug_assertions)]
        self.graph.assert_invariants();
        self.graph
    }
}
