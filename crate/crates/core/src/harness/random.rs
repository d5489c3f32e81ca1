use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphBuilder};
use crate::patterns::{find_induced, forbidden, Pattern};

/// Samples `G(n, p)` and then deletes one randomly chosen edge of a found
/// forbidden pattern per try until none of `patterns` is induced. `None`
/// if `max_tries` deletions were not enough.
///
/// # Panics
/// If `p` is outside `[0, 1]` or `n` exceeds the vertex limit.
pub fn random_free_graph(
    seed: u64,
    n: usize,
    p: f64,
    max_tries: usize,
    patterns: &[&Pattern],
) -> Option<Graph> {
    assert!(
        (0.0..=1.0).contains(&p),
        "edge probability {p} outside [0, 1]"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new(n).expect("n within the vertex limit");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v).expect("in range");
            }
        }
    }
    let mut g = b.build();
    for _ in 0..=max_tries {
        let found = patterns
            .iter()
            .find_map(|p| find_induced(&g, p).map(|e| (p, e)));
        let Some((pattern, embedding)) = found else {
            return Some(g);
        };
        let edges: Vec<(usize, usize)> = pattern.graph().edges().collect();
        let &(a, c) = edges
            .choose(&mut rng)
            .expect("forbidden patterns have edges");
        let mut b = g.to_builder();
        b.remove_edge(embedding.map[a], embedding.map[c])
            .expect("in range");
        g = b.build();
    }
    None
}

/// A `{claw, H1, H2}`-free graph; see [`random_free_graph`].
pub fn random_class_graph(seed: u64, n: usize, p: f64, max_tries: usize) -> Option<Graph> {
    random_free_graph(seed, n, p, max_tries, &forbidden())
}

/// A claw-free graph; see [`random_free_graph`].
pub fn random_claw_free_graph(seed: u64, n: usize, p: f64, max_tries: usize) -> Option<Graph> {
    random_free_graph(seed, n, p, max_tries, &[Pattern::claw()])
}
