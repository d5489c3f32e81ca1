use serde::Serialize;

use super::{Deadline, NodeClock, TimedOut};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub omega: usize,
    pub witness: VertexSet,
}

/// Greedy sequential colouring of `cand`; returns vertices ordered by colour
/// class together with the class number of each, so `bounds[i]` bounds the
/// clique size available within `order[..=i]`.
fn color_sort(g: &Graph, cand: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.len());
    let mut bounds = Vec::with_capacity(cand.len());
    let mut uncolored = cand.clone();
    let mut class = 0;
    while !uncolored.is_empty() {
        class += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            avail.subtract_words(g.row(v));
            uncolored.remove(v);
            order.push(v);
            bounds.push(class);
        }
    }
    (order, bounds)
}

struct MaxClique<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    clock: NodeClock,
}

impl MaxClique<'_> {
    fn expand(&mut self, clique: &mut Vec<usize>, mut cand: VertexSet) -> Result<(), TimedOut> {
        self.clock.tick()?;
        let (order, bounds) = color_sort(self.g, &cand);
        for i in (0..order.len()).rev() {
            if clique.len() + bounds[i] <= self.best.len() {
                return Ok(());
            }
            let v = order[i];
            clique.push(v);
            let mut next = cand.clone();
            next.intersect_words(self.g.row(v));
            if next.is_empty() {
                if clique.len() > self.best.len() {
                    self.best = clique.clone();
                }
            } else {
                self.expand(clique, next)?;
            }
            clique.pop();
            cand.remove(v);
        }
        Ok(())
    }
}

/// A maximum clique of the subgraph induced by `within` (branch and bound
/// with greedy-colouring bounds).
pub fn max_clique_within(
    g: &Graph,
    within: &VertexSet,
    deadline: Deadline,
) -> Result<VertexSet, TimedOut> {
    let mut search = MaxClique {
        g,
        best: Vec::new(),
        clock: NodeClock::new(deadline),
    };
    let cand = within.intersection(&g.all_vertices());
    if !cand.is_empty() {
        search.expand(&mut Vec::new(), cand)?;
    }
    Ok(VertexSet::from_vertices(g.n(), search.best))
}

pub fn clique_number_within(g: &Graph, deadline: Deadline) -> Result<CliqueResult, TimedOut> {
    let witness = max_clique_within(g, &g.all_vertices(), deadline)?;
    Ok(CliqueResult {
        omega: witness.len(),
        witness,
    })
}

pub fn clique_number(g: &Graph) -> CliqueResult {
    clique_number_within(g, Deadline::none()).expect("no deadline")
}

/// Depth-first enumeration of `size`-cliques of `⟨cand⟩` in lexicographic
/// order of their sorted vertex lists. `visit` returns `true` to stop.
fn cliques_of_size(
    g: &Graph,
    clique: &mut Vec<usize>,
    cand: &VertexSet,
    size: usize,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if clique.len() == size {
        return visit(clique);
    }
    let mut rest = cand.clone();
    while let Some(v) = rest.first() {
        if clique.len() + rest.len() < size {
            return false;
        }
        rest.remove(v);
        let mut next = rest.clone();
        next.intersect_words(g.row(v));
        if clique.len() + 1 + next.len() >= size {
            clique.push(v);
            let stop = cliques_of_size(g, clique, &next, size, visit);
            clique.pop();
            if stop {
                return true;
            }
        }
    }
    false
}

/// The lexicographically smallest maximum clique of `⟨within⟩` (empty when
/// `within` is empty).
pub fn lex_first_max_clique_within(g: &Graph, within: &VertexSet) -> VertexSet {
    let omega = max_clique_within(g, within, Deadline::none())
        .expect("no deadline")
        .len();
    let mut found = Vec::new();
    cliques_of_size(g, &mut Vec::new(), within, omega, &mut |c| {
        found = c.to_vec();
        true
    });
    VertexSet::from_vertices(g.n(), found)
}

/// Every maximum clique of `⟨within⟩`, in lexicographic order.
pub fn all_max_cliques_within(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let omega = max_clique_within(g, within, Deadline::none())
        .expect("no deadline")
        .len();
    let mut out = Vec::new();
    cliques_of_size(g, &mut Vec::new(), within, omega, &mut |c| {
        out.push(VertexSet::from_vertices(g.n(), c.iter().copied()));
        false
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{blowup, complete, cycle, join_of_c5};

    #[test]
    fn clique_number_examples() {
        assert_eq!(clique_number(&complete(5).unwrap()).omega, 5);
        assert_eq!(clique_number(&cycle(7).unwrap()).omega, 2);
        assert_eq!(
            clique_number(&blowup(&cycle(5).unwrap(), 3).unwrap().graph).omega,
            6
        );
        assert_eq!(clique_number(&join_of_c5(2).unwrap().graph).omega, 4);
        assert_eq!(clique_number(&Graph::empty(0)).omega, 0);
        assert_eq!(clique_number(&Graph::empty(3)).omega, 1);
    }

    #[test]
    fn witness_is_a_clique() {
        let g = join_of_c5(3).unwrap().graph;
        let r = clique_number(&g);
        assert_eq!(r.omega, 6);
        assert!(g.is_clique(&r.witness));
    }

    #[test]
    fn lex_first_and_all_max_cliques() {
        let c5 = cycle(5).unwrap();
        let n0 = c5.neighbors(0).unwrap();
        assert_eq!(lex_first_max_clique_within(&c5, &n0).to_vec(), vec![1]);
        assert_eq!(all_max_cliques_within(&c5, &n0).len(), 2);

        let all = all_max_cliques_within(&c5, &c5.all_vertices());
        let lists: Vec<Vec<usize>> = all.iter().map(VertexSet::to_vec).collect();
        assert_eq!(
            lists,
            vec![vec![0, 1], vec![0, 4], vec![1, 2], vec![2, 3], vec![3, 4]]
        );
        assert!(lex_first_max_clique_within(&c5, &VertexSet::empty(5)).is_empty());
    }
}
