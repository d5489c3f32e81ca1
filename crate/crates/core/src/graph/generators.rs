//! Constructions for the graph families used by the regression suites.

use super::{Graph, GraphBuilder, GraphError};

pub fn cycle(k: usize) -> Result<Graph, GraphError> {
    if k < 3 {
        return Err(GraphError::ParameterTooSmall {
            what: "cycle",
            min: 3,
            got: k,
        });
    }
    Graph::new(k, (0..k).map(|i| (i, (i + 1) % k)))
}

pub fn complete(k: usize) -> Result<Graph, GraphError> {
    if k < 1 {
        return Err(GraphError::ParameterTooSmall {
            what: "complete",
            min: 1,
            got: k,
        });
    }
    Graph::new(k, (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))))
}

pub fn path(k: usize) -> Result<Graph, GraphError> {
    if k < 1 {
        return Err(GraphError::ParameterTooSmall {
            what: "path",
            min: 1,
            got: k,
        });
    }
    Graph::new(k, (1..k).map(|i| (i - 1, i)))
}

/// `K_{1,leaves}` with the centre at vertex 0.
pub fn star(leaves: usize) -> Result<Graph, GraphError> {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// Disjoint union, `h` relabelled after `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let off = g.n();
    Graph::new(
        off + h.n(),
        g.edges().chain(h.edges().map(|(u, v)| (u + off, v + off))),
    )
}

/// Result of [`blowup`]: vertex `u` of the source became the clique `bags[u]`.
#[derive(Debug, Clone)]
pub struct Blowup {
    pub graph: Graph,
    pub bags: Vec<Vec<usize>>,
}

impl Blowup {
    /// Source vertex whose bag contains `v`.
    pub fn bag_of(&self, v: usize) -> usize {
        v / self.bags.first().map_or(1, Vec::len)
    }
}

/// Replaces every vertex by `K_m`; bags of adjacent vertices are fully joined.
pub fn blowup(g: &Graph, m: usize) -> Result<Blowup, GraphError> {
    if m == 0 {
        return Err(GraphError::ParameterTooSmall {
            what: "blowup multiplicity",
            min: 1,
            got: 0,
        });
    }
    let bags: Vec<Vec<usize>> = g
        .vertices()
        .map(|u| (u * m..(u + 1) * m).collect())
        .collect();
    let mut b = GraphBuilder::new(g.n() * m)?;
    for bag in &bags {
        for (i, &a) in bag.iter().enumerate() {
            for &c in &bag[i + 1..] {
                b.add_edge(a, c)?;
            }
        }
    }
    for (u, v) in g.edges() {
        for &a in &bags[u] {
            for &c in &bags[v] {
                b.add_edge(a, c)?;
            }
        }
    }
    Ok(Blowup {
        graph: b.build(),
        bags,
    })
}

/// Result of [`join`]/[`join_all`]: `parts[i]` lists the vertices of the `i`-th operand.
#[derive(Debug, Clone)]
pub struct Join {
    pub graph: Graph,
    pub parts: Vec<Vec<usize>>,
}

/// Disjoint union of `g` and `h` plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    join_all([g, h]).map(|j| j.graph)
}

/// Iterated join of all operands.
pub fn join_all<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> Result<Join, GraphError> {
    let graphs: Vec<&Graph> = graphs.into_iter().collect();
    let total: usize = graphs.iter().map(|g| g.n()).sum();
    let mut b = GraphBuilder::new(total)?;
    let mut parts = Vec::with_capacity(graphs.len());
    let mut off = 0;
    for g in &graphs {
        for (u, v) in g.edges() {
            b.add_edge(u + off, v + off)?;
        }
        parts.push((off..off + g.n()).collect::<Vec<_>>());
        off += g.n();
    }
    for (i, a) in parts.iter().enumerate() {
        for c in &parts[i + 1..] {
            for &u in a {
                for &v in c {
                    b.add_edge(u, v)?;
                }
            }
        }
    }
    Ok(Join {
        graph: b.build(),
        parts,
    })
}

/// Join of `m` copies of `C_5`.
pub fn join_of_c5(m: usize) -> Result<Join, GraphError> {
    let c5 = cycle(5)?;
    join_all(std::iter::repeat_n(&c5, m))
}

/// Result of [`mycielski`]. Originals keep ids `0..n`; `shadow[u] = n + u`;
/// `apex = 2n`.
#[derive(Debug, Clone)]
pub struct Mycielski {
    pub graph: Graph,
    pub shadow: Vec<usize>,
    pub apex: usize,
}

pub fn mycielski(g: &Graph) -> Result<Mycielski, GraphError> {
    let n = g.n();
    let apex = 2 * n;
    let mut b = GraphBuilder::new(2 * n + 1)?;
    for (u, v) in g.edges() {
        b.add_edge(u, v)?;
        b.add_edge(n + u, v)?;
        b.add_edge(u, n + v)?;
    }
    for u in 0..n {
        b.add_edge(n + u, apex)?;
    }
    Ok(Mycielski {
        graph: b.build(),
        shadow: (n..2 * n).collect(),
        apex,
    })
}

/// The Mycielski graph with chromatic number `chi`: `K_2` for 2, `C_5` for 3,
/// the Grötzsch graph for 4, and so on.
pub fn mycielski_graph(chi: usize) -> Result<Graph, GraphError> {
    if chi < 2 {
        return Err(GraphError::ParameterTooSmall {
            what: "mycielski chromatic number",
            min: 2,
            got: chi,
        });
    }
    let mut g = complete(2)?;
    for _ in 2..chi {
        g = mycielski(&g)?.graph;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has_triangle(g: &Graph) -> bool {
        g.edges()
            .any(|(u, v)| g.vertices().any(|w| g.has_edge(u, w) && g.has_edge(v, w)))
    }

    #[test]
    fn cycles_and_cliques() {
        let c5 = cycle(5).unwrap();
        assert_eq!((c5.n(), c5.edge_count()), (5, 5));
        assert!(c5.vertices().all(|u| c5.degree(u) == 2));
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
    }

    #[test]
    fn blowup_shapes() {
        let c5 = cycle(5).unwrap();
        assert_eq!(blowup(&c5, 1).unwrap().graph, c5);
        let b = blowup(&c5, 2).unwrap();
        assert_eq!(b.graph.n(), 10);
        assert_eq!(b.bags[3], vec![6, 7]);
        assert_eq!(b.bag_of(7), 3);
        assert_eq!(
            blowup(&complete(2).unwrap(), 3).unwrap().graph,
            complete(6).unwrap()
        );
        assert!(blowup(&c5, 0).is_err());
    }

    #[test]
    fn blowup_edge_count_formula() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
        for m in 1..5 {
            let b = blowup(&g, m).unwrap().graph;
            assert_eq!(b.n(), m * g.n());
            assert_eq!(
                b.edge_count(),
                m * m * g.edge_count() + g.n() * m * (m - 1) / 2
            );
        }
    }

    #[test]
    fn join_shapes() {
        let k1 = complete(1).unwrap();
        assert_eq!(join(&k1, &k1).unwrap(), complete(2).unwrap());
        let c5 = cycle(5).unwrap();
        let j = join(&c5, &c5).unwrap();
        assert_eq!((j.n(), j.edge_count()), (10, 35));
        let p3 = path(3).unwrap();
        let j = join(&c5, &p3).unwrap();
        for u in 0..5 {
            assert_eq!(j.degree(u), c5.degree(u) + 3);
        }
        assert_eq!(join_of_c5(3).unwrap().graph.edge_count(), 15 + 3 * 25);
    }

    #[test]
    fn mycielski_identities() {
        let m = mycielski(&complete(2).unwrap()).unwrap();
        assert_eq!(m.graph.n(), 5);
        assert!(m.graph.vertices().all(|u| m.graph.degree(u) == 2));
        assert_eq!(m.apex, 4);

        let grotzsch = mycielski_graph(4).unwrap();
        assert_eq!((grotzsch.n(), grotzsch.edge_count()), (11, 20));
        assert!(!has_triangle(&grotzsch));
        let m5 = mycielski_graph(5).unwrap();
        assert_eq!((m5.n(), m5.edge_count()), (23, 71));
        assert!(!has_triangle(&m5));
    }

    #[test]
    fn mycielski_shadow_adjacency() {
        let g = cycle(5).unwrap();
        let m = mycielski(&g).unwrap();
        for u in g.vertices() {
            let shadow_nbrs: Vec<usize> = m
                .graph
                .neighbors(m.shadow[u])
                .unwrap()
                .iter()
                .filter(|&x| x < g.n())
                .collect();
            assert_eq!(shadow_nbrs, g.neighbors(u).unwrap().to_vec());
            assert!(m.graph.has_edge(m.shadow[u], m.apex));
        }
    }
}
