use super::{Graph, Label};

pub fn empty(n: usize) -> Graph {
    Graph::new(n)
}

/// The complete graph `K_s`.
pub fn complete(s: usize) -> Graph {
    let mut g = Graph::new(s);
    for u in 0..s {
        for v in u + 1..s {
            g.add_edge(u, v);
        }
    }
    g
}

/// Path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// Cycle on `n >= 3` vertices; smaller `n` degrade to a path.
pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(n - 1, 0);
    }
    g
}

/// Join `g1 ∨ g2`: disjoint union (vertices of `g1` first) plus every
/// cross pair. Labels survive only when both sides carry them, or one side
/// is empty.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let shift = g1.order();
    let mut g = Graph::new(shift + g2.order());
    for (u, v) in g1.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in g2.edges() {
        g.add_edge(u + shift, v + shift);
    }
    for u in 0..shift {
        for v in 0..g2.order() {
            g.add_edge(u, v + shift);
        }
    }
    let labels = match (g1.labels(), g2.labels()) {
        (Some(a), Some(b)) => Some([a, b].concat()),
        (Some(a), None) if g2.order() == 0 => Some(a.to_vec()),
        (None, Some(b)) if g1.order() == 0 => Some(b.to_vec()),
        _ => None,
    };
    if let Some(labels) = labels {
        g.set_labels(labels)
            .expect("label count matches vertex count");
    }
    g
}

/// Strong product `g1 ⊠ g2`. Vertex `(i, t)` has index `i * |V(g2)| + t`
/// and label `ProductVertex { i, t }`.
pub fn strong_product(g1: &Graph, g2: &Graph) -> Graph {
    let m = g2.order();
    let idx = |i: usize, t: usize| i * m + t;
    let mut g = Graph::new(g1.order() * m);
    for i in 0..g1.order() {
        for (s, t) in g2.edges() {
            g.add_edge(idx(i, s), idx(i, t));
        }
    }
    for (i, j) in g1.edges() {
        for t in 0..m {
            g.add_edge(idx(i, t), idx(j, t));
        }
        for (s, t) in g2.edges() {
            g.add_edge(idx(i, s), idx(j, t));
            g.add_edge(idx(i, t), idx(j, s));
        }
    }
    let labels = (0..g1.order())
        .flat_map(|i| (0..m).map(move |t| Label::ProductVertex { i, t }))
        .collect();
    g.set_labels(labels)
        .expect("label count matches vertex count");
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    #[test]
    fn complete_graph_sizes() {
        assert_eq!((complete(0).order(), complete(0).size()), (0, 0));
        assert_eq!((complete(4).order(), complete(4).size()), (4, 6));
        assert_eq!((complete(9).order(), complete(9).size()), (9, 36));
    }

    #[test]
    fn join_examples() {
        assert_eq!(join(&complete(1), &complete(1)), complete(2));
        let g = join(&cycle(5), &complete(3));
        assert_eq!((g.order(), g.size()), (8, 23));
        assert_eq!(join(&empty(0), &cycle(5)), cycle(5));
    }

    #[test]
    fn strong_product_examples() {
        assert_eq!(
            strong_product(&complete(2), &complete(2)).without_labels(),
            complete(4)
        );
        let g = strong_product(&cycle(5), &complete(3));
        assert_eq!((g.order(), g.size()), (15, 60));
        let p = NamedGraph::Petersen.build();
        assert_eq!(strong_product(&p, &complete(1)).without_labels(), p);
    }

    #[test]
    fn strong_product_matches_edge_rule() {
        let (g1, g2) = (cycle(5), path(3));
        let g = strong_product(&g1, &g2);
        let m = g2.order();
        for a in 0..g.order() {
            for b in 0..g.order() {
                if a == b {
                    continue;
                }
                let (u1, u2, v1, v2) = (a / m, a % m, b / m, b % m);
                let rule = (u1 == v1 && g2.has_edge(u2, v2))
                    || (u2 == v2 && g1.has_edge(u1, v1))
                    || (g1.has_edge(u1, v1) && g2.has_edge(u2, v2));
                assert_eq!(g.has_edge(a, b), rule, "pair {a} {b}");
            }
        }
    }
}
