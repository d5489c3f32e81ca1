// Brute-force reference implementations. They use only `has_edge` and `n`,
// never the crate's solvers.
#![allow(dead_code)]

use clawbound::graph::Graph;

pub fn naive_clique_number(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let is_clique = vs
            .iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&w| g.has_edge(u, w)));
        if is_clique {
            best = best.max(vs.len());
        }
    }
    best
}

/// Tries every assignment in `k^n` for increasing `k`.
pub fn naive_chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| g.has_edge(u, v))
        .collect();
    for k in 1..=n {
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut colors = vec![0; n];
            let mut x = code;
            for c in colors.iter_mut() {
                *c = x % k;
                x /= k;
            }
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
        }
    }
    n
}

/// Whether some injective map of `pattern` into `host` preserves both
/// edges and non-edges.
pub fn naive_has_induced(host: &Graph, pattern: &Graph) -> bool {
    fn extend(host: &Graph, pattern: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == pattern.n() {
            return true;
        }
        for v in 0..host.n() {
            if map.contains(&v) {
                continue;
            }
            if (0..i).all(|j| pattern.has_edge(i, j) == host.has_edge(v, map[j])) {
                map.push(v);
                if extend(host, pattern, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    extend(host, pattern, &mut Vec::new())
}

pub fn claw() -> Graph {
    Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
}

/// Diamond on 0..3 (missing edge 2-3) with a pendant vertex on 2.
pub fn h1() -> Graph {
    Graph::new(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4)]).unwrap()
}

/// Complement of `P3 ∪ K2`.
pub fn h2() -> Graph {
    let p3_k2 = Graph::new(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
    let mut edges = Vec::new();
    for u in 0..5 {
        for v in u + 1..5 {
            if !p3_k2.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(5, edges).unwrap()
}

pub fn naive_is_member(g: &Graph) -> bool {
    [claw(), h1(), h2()]
        .iter()
        .all(|p| !naive_has_induced(g, p))
}

/// graph6 written straight from the format description: `n + 63`, then the
/// upper triangle column by column, six bits per character, zero padded.
pub fn naive_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        out.push((v + 63) as char);
    }
    out
}

/// All labeled graphs on `n` vertices, by adjacency bitmask over pairs
/// `(i, j)`, `i < j`, in lexicographic order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}
