//! `(G ⊠ K_{n-1}) ∨ K_{(n-3)(n-1)}` for a connected, triangle-free,
//! non-bipartite `G`.
//!
//! Vertex `t` of `V_i` has index `i * (n-1) + t`; the universal vertices
//! `V*` follow.

use serde_json::{json, Value};

use super::dense_proper;
use crate::error::{contract, Result};
use crate::graph::{complete, join, strong_product, Graph, GraphJson, Label};
use crate::worm::Coloring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapLayout {
    pub graph: Graph,
    pub base: Graph,
    pub n: usize,
    parts: Vec<Vec<usize>>,
    universal: Vec<usize>,
}

impl GapLayout {
    /// `V_i`, the `n - 1` vertices standing in for `v_i`.
    pub fn part(&self, i: usize) -> &[usize] {
        &self.parts[i]
    }

    /// `V*`.
    pub fn universal(&self) -> &[usize] {
        &self.universal
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn to_json(&self) -> Value {
        json!({
            "construction": "gap",
            "pattern_order": self.n,
            "base": GraphJson::from(&self.base),
            "parts": self.parts,
            "universal": self.universal,
            "graph": GraphJson::from(&self.graph),
        })
    }
}

pub fn gap_graph(g: &Graph, n: usize) -> Result<GapLayout> {
    if n < 4 {
        return Err(contract(format!(
            "pattern order must be at least 4, got {n}"
        )));
    }
    if g.order() == 0 || !g.is_connected() {
        return Err(contract("base graph is not connected"));
    }
    if !g.is_triangle_free() {
        return Err(contract("base graph is not triangle-free"));
    }
    if is_bipartite(g) {
        return Err(contract(
            "base graph is bipartite, so its chromatic number is below 3",
        ));
    }
    let m = n - 1;
    let ell = g.order();
    let universal_len = (n - 3) * m;
    let product = strong_product(&g.clone().without_labels(), &complete(m));
    let mut graph = join(&product, &complete(universal_len));
    let mut labels: Vec<Label> = (0..ell)
        .flat_map(|i| (0..m).map(move |t| Label::ProductVertex { i, t }))
        .collect();
    labels.extend((0..universal_len).map(|slot| Label::Universal { slot }));
    graph.set_labels(labels)?;
    Ok(GapLayout {
        graph,
        base: g.clone().without_labels(),
        n,
        parts: (0..ell).map(|i| (i * m..(i + 1) * m).collect()).collect(),
        universal: (ell * m..ell * m + universal_len).collect(),
    })
}

fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![usize::MAX; g.order()];
    for root in 0..g.order() {
        if side[root] != usize::MAX {
            continue;
        }
        side[root] = 0;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if side[v] == usize::MAX {
                    side[v] = 1 - side[u];
                    stack.push(v);
                } else if side[v] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// The `(n-1)`-color witness: slot `s` of `V*` gets `s / (n-3)`, slot `t`
/// of every `V_i` gets `t`.
pub fn witness_gap_low(layout: &GapLayout) -> Coloring {
    let per = layout.n - 3;
    let mut colors = vec![0; layout.graph.order()];
    for part in &layout.parts {
        for (t, &v) in part.iter().enumerate() {
            colors[v] = t;
        }
    }
    for (s, &v) in layout.universal.iter().enumerate() {
        colors[v] = s / per;
    }
    Coloring::new(colors)
}

/// The `t + n - 3` color witness for a proper `t`-coloring of the base
/// graph: `V*` takes colors `0..n-3`, each on `n - 1` vertices, and `V_i` is
/// monochromatic in `n - 3 + φ(v_i)` with `φ` densified to `0..t`.
pub fn witness_gap_high(layout: &GapLayout, proper: &Coloring) -> Result<Coloring> {
    let (phi, _) = dense_proper(&layout.base, proper)?;
    let offset = layout.n - 3;
    let mut colors = vec![0; layout.graph.order()];
    for (part, &c) in layout.parts.iter().zip(&phi) {
        for &v in part {
            colors[v] = offset + c;
        }
    }
    for (s, &v) in layout.universal.iter().enumerate() {
        colors[v] = s / (layout.n - 1);
    }
    Ok(Coloring::new(colors))
}

/// For every base edge `v_i v_j`, `V_i ∪ V_j ∪ V*` carries exactly `n - 1`
/// colors, each on exactly `n - 1` vertices.
pub fn star_condition(layout: &GapLayout, coloring: &Coloring) -> bool {
    let m = layout.n - 1;
    layout.base.edges().all(|(i, j)| {
        let mut counts = std::collections::HashMap::new();
        for &v in layout.parts[i]
            .iter()
            .chain(&layout.parts[j])
            .chain(&layout.universal)
        {
            *counts.entry(coloring.color(v)).or_insert(0usize) += 1;
        }
        counts.len() == m && counts.values().all(|&c| c == m)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::copies::enumerate_copies;
    use crate::graph::{cycle, NamedGraph};
    use crate::worm::verify;

    #[test]
    fn orders() {
        assert_eq!(
            gap_graph(&NamedGraph::Groetzsch.build(), 4)
                .unwrap()
                .graph
                .order(),
            36
        );
        assert_eq!(gap_graph(&cycle(5), 4).unwrap().graph.order(), 18);
        let l = gap_graph(&cycle(5), 5).unwrap();
        assert_eq!(l.graph.order(), 20 + 8);
        assert_eq!(l.universal().len(), 8);
    }

    #[test]
    fn preconditions() {
        assert!(gap_graph(&complete(3), 4).is_err());
        assert!(gap_graph(&cycle(6), 4).is_err());
        assert!(gap_graph(&cycle(5), 3).is_err());
        let two_c5 = {
            let mut g = Graph::new(10);
            for i in 0..5 {
                g.add_edge(i, (i + 1) % 5);
                g.add_edge(5 + i, 5 + (i + 1) % 5);
            }
            g
        };
        assert!(gap_graph(&two_c5, 4).is_err());
    }

    #[test]
    fn part_structure() {
        let l = gap_graph(&cycle(5), 4).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                for &u in l.part(i) {
                    for &v in l.part(j) {
                        if u != v {
                            let expect = i == j || l.base.has_edge(i, j);
                            assert_eq!(l.graph.has_edge(u, v), expect);
                        }
                    }
                }
            }
        }
        for &u in l.universal() {
            assert_eq!(l.graph.degree(u), l.graph.order() - 1);
        }
    }

    #[test]
    fn c5_witnesses() {
        let l = gap_graph(&cycle(5), 4).unwrap();
        let fam = enumerate_copies(&l.graph, &complete(4)).unwrap();
        let low = witness_gap_low(&l);
        assert_eq!(low.used_count(), 3);
        assert_eq!(low.class_sizes(), vec![6, 6, 6]);
        assert!(verify(&l.graph, &fam, &low).unwrap().is_ok());
        assert!(star_condition(&l, &low));
        let high = witness_gap_high(&l, &Coloring::new(vec![0, 1, 0, 1, 2])).unwrap();
        assert_eq!(high.used_count(), 4);
        assert!(verify(&l.graph, &fam, &high).unwrap().is_ok());
        assert!(star_condition(&l, &high));
        assert!(witness_gap_high(&l, &Coloring::uniform(5)).is_err());
    }
}
