//! Simple undirected graphs on dense vertex indices.
//!
//! A [`Graph`] keeps both a bit-matrix (constant-time adjacency tests) and
//! sorted neighbor lists (fast iteration). Graphs produced by the
//! constructions carry per-vertex [`Label`]s recording where each vertex
//! came from.

mod export;
mod graph6;
mod named;
mod ops;

pub use export::{to_dot, GraphJson};
pub use graph6::{decode_graph6, encode_graph6};
pub use named::NamedGraph;
pub use ops::{complete, cycle, empty, join, path, strong_product};

use serde::{Deserialize, Serialize};

use crate::error::{contract, Result};

/// Which part of a gadget an inner vertex belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InnerPart {
    /// Inner vertices adjacent to both outer vertices.
    S,
    /// Inner vertices adjacent to neither outer vertex.
    SPrime,
}

/// Construction provenance of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Label {
    /// `v_i^j`: copy `j` of base vertex `i`.
    CopyVertex { i: usize, j: usize },
    /// Inner vertex of the gadget sitting between `v_i^j` and `v_i^{j+1}`.
    GadgetInner { i: usize, j: usize, part: InnerPart },
    /// Vertex `(i, t)` of a strong product.
    ProductVertex { i: usize, t: usize },
    /// Universal vertex added by a join.
    Universal { slot: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    matrix: Vec<u64>,
    nbrs: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Option<Vec<Label>>,
}

impl Default for Graph {
    fn default() -> Self {
        Graph::new(0)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            matrix: vec![0; n * words],
            nbrs: vec![Vec::new(); n],
            edge_count: 0,
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(contract(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(contract(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Adds the edge `uv`; returns `false` if it was already present.
    ///
    /// Panics on a self-loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert_ne!(u, v, "self-loops are not allowed");
        if self.has_edge(u, v) {
            return false;
        }
        self.matrix[u * self.words + v / 64] |= 1 << (v % 64);
        self.matrix[v * self.words + u / 64] |= 1 << (u % 64);
        let pos = self.nbrs[u].binary_search(&v).unwrap_err();
        self.nbrs[u].insert(pos, v);
        let pos = self.nbrs[v].binary_search(&u).unwrap_err();
        self.nbrs[v].insert(pos, u);
        self.edge_count += 1;
        true
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.nbrs.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.nbrs.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nbrs
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<Label> {
        self.labels.as_ref().map(|ls| ls[v])
    }

    /// Attaches provenance labels; there must be exactly one per vertex.
    pub fn set_labels(&mut self, labels: Vec<Label>) -> Result<()> {
        if labels.len() != self.n {
            return Err(contract(format!(
                "{} labels supplied for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    /// The subgraph induced by `vertices`, re-indexed in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut sub = Graph::new(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    sub.add_edge(a, b);
                }
            }
        }
        sub
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(None)
    }

    fn is_connected_without(&self, removed: Option<usize>) -> bool {
        let Some(start) = (0..self.n).find(|&v| Some(v) != removed) else {
            return true;
        };
        let mut seen = vec![false; self.n];
        if let Some(r) = removed {
            seen[r] = true;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.nbrs[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n - usize::from(removed.is_some())
    }

    /// Cut vertices, found by deleting each vertex in turn.
    pub fn articulation_points(&self) -> Vec<usize> {
        if !self.is_connected() {
            return Vec::new();
        }
        (0..self.n)
            .filter(|&v| !self.is_connected_without(Some(v)))
            .collect()
    }

    /// At least three vertices, connected, and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.articulation_points().is_empty()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| {
            (0..self.words)
                .all(|w| self.matrix[u * self.words + w] & self.matrix[v * self.words + w] == 0)
        })
    }

    /// Clique number by simple branch and bound.
    pub fn clique_number(&self) -> usize {
        fn grow(g: &Graph, clique: usize, candidates: Vec<usize>, best: &mut usize) {
            if clique + candidates.len() <= *best {
                return;
            }
            if candidates.is_empty() {
                *best = clique;
                return;
            }
            for (idx, &v) in candidates.iter().enumerate() {
                if clique + candidates.len() - idx <= *best {
                    return;
                }
                let next = candidates[idx + 1..]
                    .iter()
                    .copied()
                    .filter(|&w| g.has_edge(v, w))
                    .collect();
                grow(g, clique + 1, next, best);
            }
        }
        let mut best = 0;
        grow(self, 0, (0..self.n).collect(), &mut best);
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_edge_is_symmetric_and_idempotent() {
        let mut g = Graph::new(70);
        assert!(g.add_edge(3, 66));
        assert!(!g.add_edge(66, 3));
        assert!(g.has_edge(3, 66) && g.has_edge(66, 3));
        assert!(!g.has_edge(3, 3));
        assert_eq!(g.size(), 1);
        assert_eq!(g.neighbors(66), &[3]);
    }

    #[test]
    fn from_edges_rejects_loops_and_out_of_range() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn set_labels_requires_one_per_vertex() {
        let mut g = Graph::new(2);
        assert!(g.set_labels(vec![Label::Universal { slot: 0 }]).is_err());
        g.set_labels(vec![
            Label::Universal { slot: 0 },
            Label::Universal { slot: 1 },
        ])
        .unwrap();
        assert_eq!(g.label(1), Some(Label::Universal { slot: 1 }));
    }

    #[test]
    fn two_connectivity() {
        assert!(cycle(4).is_two_connected());
        assert!(complete(3).is_two_connected());
        assert!(!path(3).is_two_connected());
        assert!(!complete(2).is_two_connected());
        assert_eq!(path(3).articulation_points(), vec![1]);
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(empty(0).clique_number(), 0);
        assert_eq!(empty(3).clique_number(), 1);
        assert_eq!(cycle(5).clique_number(), 2);
        assert_eq!(complete(6).clique_number(), 6);
        assert_eq!(NamedGraph::Groetzsch.build().clique_number(), 2);
    }
}
