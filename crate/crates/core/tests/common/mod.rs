#![allow(dead_code)]

use fworm::copies::has_spanning_copy;
use fworm::graph::{complete, cycle, Graph};
use fworm::NamedGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Catalog graphs on at most 9 vertices.
pub fn named_small() -> Vec<(String, Graph)> {
    use NamedGraph::*;
    let mut names = Vec::new();
    for s in 2..=9 {
        names.extend([Complete(s), Path(s)]);
    }
    for s in 3..=9 {
        names.push(Cycle(s));
    }
    names.push(Empty(4));
    for s in 3..=8 {
        names.extend([Star(s), Wheel(s)]);
    }
    for a in 1..=4 {
        for b in a..=9 - a {
            if a + b >= 3 {
                names.push(CompleteBipartite(a, b));
            }
        }
    }
    names.extend(NamedGraph::fixed().iter().copied());
    names
        .into_iter()
        .map(|g| (g.to_string(), g.build()))
        .filter(|(_, g)| g.order() <= 9)
        .collect()
}

/// Seeded G(n, p) graphs on 5..=9 vertices at densities 0.2, 0.5, 0.8.
pub fn random_small(per_cell: u64) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 5..=9 {
        for (d, p) in [0.2, 0.5, 0.8].into_iter().enumerate() {
            for rep in 0..per_cell {
                let seed = (n as u64) * 1000 + d as u64 * 100 + rep;
                out.push((format!("gnp({n},{p},{seed})"), gnp(n, p, seed)));
            }
        }
    }
    out
}

pub fn patterns() -> Vec<(&'static str, Graph)> {
    vec![("k3", complete(3)), ("c4", cycle(4)), ("k4", complete(4))]
}

/// Whether the subgraph induced on `vertices` is exactly `pattern`
/// (spanning copy present and no extra edges).
pub fn induces_exactly(host: &Graph, vertices: &[usize], pattern: &Graph) -> bool {
    let induced = host.induced_subgraph(vertices);
    induced.size() == pattern.size() && has_spanning_copy(&induced, pattern).unwrap()
}

/// Breadth-first distances from `source` using only edges accepted by `keep`.
pub fn bfs_with(g: &Graph, source: usize, keep: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.order()];
    dist[source] = 0;
    let mut queue = std::collections::VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v] == usize::MAX && keep(u, v) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}
