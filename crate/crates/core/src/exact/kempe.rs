use std::collections::VecDeque;

use serde::Serialize;

use super::{Coloring, ExactError};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Path,
    Cycle,
    Other,
}

/// A connected component of the subgraph induced by two colour classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KempeComponent {
    /// Traversal order for paths and cycles, BFS order otherwise.
    pub vertices: Vec<usize>,
    pub shape: Shape,
    pub colors: (usize, usize),
}

impl KempeComponent {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

#[inline]
fn in_pair(colors: &[usize], v: usize, pair: (usize, usize)) -> bool {
    colors[v] == pair.0 || colors[v] == pair.1
}

/// BFS over vertices coloured `pair.0`/`pair.1` starting at `start`. Works on
/// partial colourings too (colour 0 = uncoloured, never in a pair).
pub(crate) fn component_from(
    g: &Graph,
    colors: &[usize],
    start: usize,
    pair: (usize, usize),
) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut out = vec![start];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for u in crate::graph::iter_words(g.row(v)) {
            if !seen[u] && in_pair(colors, u, pair) {
                seen[u] = true;
                out.push(u);
                queue.push_back(u);
            }
        }
    }
    out
}

fn classify(
    g: &Graph,
    colors: &[usize],
    members: Vec<usize>,
    pair: (usize, usize),
) -> KempeComponent {
    let inside = |v: usize| in_pair(colors, v, pair);
    let local_nbrs =
        |v: usize| -> Vec<usize> { g.adjacent(v).iter().filter(|&u| inside(u)).collect() };
    let degrees: Vec<usize> = members.iter().map(|&v| local_nbrs(v).len()).collect();
    let edges: usize = degrees.iter().sum::<usize>() / 2;
    let max_deg = degrees.iter().copied().max().unwrap_or(0);

    let shape = if max_deg >= 3 {
        Shape::Other
    } else if edges + 1 == members.len() {
        Shape::Path
    } else if degrees.iter().all(|&d| d == 2) {
        Shape::Cycle
    } else {
        Shape::Other
    };

    let vertices = match shape {
        Shape::Other => members,
        Shape::Path | Shape::Cycle => {
            let start = match shape {
                Shape::Path => members
                    .iter()
                    .zip(&degrees)
                    .filter(|(_, &d)| d <= 1)
                    .map(|(&v, _)| v)
                    .min()
                    .expect("a path has an endpoint"),
                _ => *members.iter().min().expect("non-empty"),
            };
            let mut order = Vec::with_capacity(members.len());
            let mut prev = usize::MAX;
            let mut cur = start;
            loop {
                order.push(cur);
                let next = local_nbrs(cur)
                    .into_iter()
                    .filter(|&u| u != prev && !order.contains(&u))
                    .min();
                match next {
                    Some(u) => {
                        prev = cur;
                        cur = u;
                    }
                    None => break,
                }
            }
            order
        }
    };
    KempeComponent {
        vertices,
        shape,
        colors: pair,
    }
}

/// Partitions the vertices coloured `c1` or `c2` into connected components of
/// the bichromatic subgraph, each classified as path, cycle or other.
/// Components are listed by smallest vertex.
pub fn kempe_components(
    g: &Graph,
    coloring: &Coloring,
    c1: usize,
    c2: usize,
) -> Result<Vec<KempeComponent>, ExactError> {
    if c1 == c2 {
        return Err(ExactError::SameColors(c1));
    }
    for c in [c1, c2] {
        if c == 0 || c > coloring.palette() {
            return Err(ExactError::ColorOutOfPalette {
                color: c,
                k: coloring.palette(),
            });
        }
    }
    if coloring.len() != g.n() {
        return Err(ExactError::SizeMismatch {
            expected: g.n(),
            got: coloring.len(),
        });
    }
    let colors = coloring.colors();
    let mut assigned = vec![false; g.n()];
    let mut out = Vec::new();
    for v in g.vertices() {
        if assigned[v] || !in_pair(colors, v, (c1, c2)) {
            continue;
        }
        let members = component_from(g, colors, v, (c1, c2));
        for &u in &members {
            assigned[u] = true;
        }
        out.push(classify(g, colors, members, (c1, c2)));
    }
    Ok(out)
}

/// Exchanges the component's two colours on exactly its vertices.
pub fn kempe_swap(coloring: &Coloring, component: &KempeComponent) -> Result<Coloring, ExactError> {
    let (a, b) = component.colors;
    let mut colors = coloring.colors().to_vec();
    for &v in &component.vertices {
        let c = colors.get(v).copied().ok_or(ExactError::SizeMismatch {
            expected: v + 1,
            got: colors.len(),
        })?;
        colors[v] = if c == a {
            b
        } else if c == b {
            a
        } else {
            return Err(ExactError::StaleComponent { vertex: v });
        };
    }
    Ok(Coloring::new(colors, coloring.palette()))
}
