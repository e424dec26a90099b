//! Gadget chains with supplementary copies: `C¹(G, F, N₀)` and `C²(G, F)`.
//!
//! Vertex layout: copy vertex `v_i^j` has index `i * (N₀ + 1) + j`; the
//! inner vertices of gadget `(i, j)` (between `v_i^j` and `v_i^{j+1}`)
//! follow, gadget by gadget in `(i, j)` order, `S` before `S'`.

use itertools::Itertools;
use serde::Serialize;
use serde_json::{json, Value};

use super::{add_gadget_edges, color_gadget, dense_proper, GadgetShape};
use crate::error::{contract, Error, Result};
use crate::graph::{Graph, GraphJson, InnerPart, Label};
use crate::worm::Coloring;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetEmbedding {
    pub i: usize,
    pub j: usize,
    pub x: usize,
    pub y: usize,
    pub inner_s: Vec<usize>,
    pub inner_sprime: Vec<usize>,
}

impl GadgetEmbedding {
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        [self.x, self.y]
            .into_iter()
            .chain(self.inner_s.iter().copied())
            .chain(self.inner_sprime.iter().copied())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SupplementaryKind {
    /// First type: one per base edge `v_i v_j`, `i < j`.
    Edge { i: usize, j: usize },
    /// Second type: one per `n`-subset of base vertices inducing an edge.
    Subset { members: Vec<usize> },
}

/// One inserted induced copy of the pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupplementaryCopy {
    pub kind: SupplementaryKind,
    /// `vertices[p]` is the host vertex playing pattern vertex `p`.
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

/// A built `C¹` (or `C²`) graph with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C1Layout {
    pub graph: Graph,
    pub base: Graph,
    pub pattern: Graph,
    pub n0: usize,
    pub gadgets: Vec<GadgetEmbedding>,
    /// `sequences[i]` lists the `V_i`-sequence `v_i^0, v_i^c, v_i^{2c}, ...`
    /// with `c = ceil(n/2)`.
    pub sequences: Vec<Vec<usize>>,
    pub supplementary: Vec<SupplementaryCopy>,
    shape: GadgetShape,
}

/// `ceil((n+1)^2 Δ(G) / 4)`.
pub fn default_n0(base: &Graph, pattern_order: usize) -> usize {
    ((pattern_order + 1) * (pattern_order + 1) * base.max_degree()).div_ceil(4)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Pattern vertices by degree descending, then index.
fn embedding_order(pattern: &Graph) -> Vec<usize> {
    (0..pattern.order())
        .sorted_by_key(|&p| (std::cmp::Reverse(pattern.degree(p)), p))
        .collect()
}

/// Builds `C¹(G, F, N₀)`; `n0` defaults to `ceil((n+1)^2 Δ(G) / 4)`.
/// A smaller `n0` is accepted when every `V_i`-sequence can still supply
/// its supplementary copies.
pub fn c1(base: &Graph, pattern: &Graph, n0: Option<usize>) -> Result<C1Layout> {
    let n0 = n0.unwrap_or_else(|| default_n0(base, pattern.order()));
    build(base, pattern, n0, false)
}

/// Builds `C²(G, F)`: `C¹` with
/// `N₀ = ceil((n+1)^2 Δ / 4) + binom(|V(G)| - 1, n - 1) * ceil(n/2)`, plus a
/// second-type copy on one fresh sequence vertex per member of every
/// `n`-subset of base vertices that induces at least one edge.
pub fn c2(base: &Graph, pattern: &Graph) -> Result<C1Layout> {
    let n = pattern.order();
    let extra = binomial(base.order().saturating_sub(1), n.saturating_sub(1)) * n.div_ceil(2);
    build(base, pattern, default_n0(base, n) + extra, true)
}

fn build(base: &Graph, pattern: &Graph, n0: usize, second_type: bool) -> Result<C1Layout> {
    let shape = GadgetShape::of(pattern)?;
    let n = shape.n;
    let ell = base.order();
    let step = n.div_ceil(2);
    let (upper, lower) = (n.div_ceil(2), n / 2);

    let sequences: Vec<Vec<usize>> = (0..ell)
        .map(|i| (0..=n0 / step).map(|k| i * (n0 + 1) + k * step).collect())
        .collect();

    let base_edges: Vec<(usize, usize)> = base.edges().collect();
    let subsets: Vec<Vec<usize>> = if second_type {
        (0..ell)
            .combinations(n)
            .filter(|s| {
                s.iter()
                    .tuple_combinations()
                    .any(|(&a, &b)| base.has_edge(a, b))
            })
            .collect()
    } else {
        Vec::new()
    };

    let mut needed = vec![0usize; ell];
    for &(i, j) in &base_edges {
        needed[i] += upper;
        needed[j] += lower;
    }
    for s in &subsets {
        for &i in s {
            needed[i] += 1;
        }
    }
    for i in 0..ell {
        if needed[i] > sequences[i].len() {
            return Err(Error::Capacity {
                sequence: i,
                needed: needed[i],
                available: sequences[i].len(),
            });
        }
    }

    let copy_count = ell * (n0 + 1);
    let total = copy_count + ell * n0 * shape.inner_len();
    let mut graph = Graph::new(total);
    let mut labels = Vec::with_capacity(total);
    for i in 0..ell {
        labels.extend((0..=n0).map(|j| Label::CopyVertex { i, j }));
    }
    let mut gadgets = Vec::with_capacity(ell * n0);
    let mut next = copy_count;
    for i in 0..ell {
        for j in 0..n0 {
            let inner_s: Vec<usize> = (next..next + shape.s_len).collect();
            let inner_sprime: Vec<usize> = (next + shape.s_len..next + shape.inner_len()).collect();
            next += shape.inner_len();
            let (x, y) = (i * (n0 + 1) + j, i * (n0 + 1) + j + 1);
            add_gadget_edges(&mut graph, x, y, &inner_s, &inner_sprime);
            labels.extend(inner_s.iter().map(|_| Label::GadgetInner {
                i,
                j,
                part: InnerPart::S,
            }));
            labels.extend(inner_sprime.iter().map(|_| Label::GadgetInner {
                i,
                j,
                part: InnerPart::SPrime,
            }));
            gadgets.push(GadgetEmbedding {
                i,
                j,
                x,
                y,
                inner_s,
                inner_sprime,
            });
        }
    }
    graph.set_labels(labels)?;

    let order = embedding_order(pattern);
    let pattern_edges: Vec<(usize, usize)> = pattern.edges().collect();
    let mut cursor = vec![0usize; ell];
    let mut take = |i: usize| {
        let v = sequences[i][cursor[i]];
        cursor[i] += 1;
        v
    };
    let mut supplementary = Vec::new();
    let mut insert = |graph: &mut Graph, kind: SupplementaryKind, allocated: Vec<usize>| {
        let mut vertices = vec![0; n];
        for (&p, &v) in order.iter().zip(&allocated) {
            vertices[p] = v;
        }
        let edges: Vec<(usize, usize)> = pattern_edges
            .iter()
            .map(|&(a, b)| (vertices[a], vertices[b]))
            .collect();
        for &(u, v) in &edges {
            graph.add_edge(u, v);
        }
        supplementary.push(SupplementaryCopy {
            kind,
            vertices,
            edges,
        });
    };
    for &(i, j) in &base_edges {
        let mut allocated: Vec<usize> = (0..upper).map(|_| take(i)).collect();
        allocated.extend((0..lower).map(|_| take(j)));
        insert(&mut graph, SupplementaryKind::Edge { i, j }, allocated);
    }
    for s in subsets {
        let allocated = s.iter().map(|&i| take(i)).collect();
        insert(
            &mut graph,
            SupplementaryKind::Subset { members: s },
            allocated,
        );
    }

    Ok(C1Layout {
        graph,
        base: base.clone().without_labels(),
        pattern: pattern.clone().without_labels(),
        n0,
        gadgets,
        sequences,
        supplementary,
        shape,
    })
}

impl C1Layout {
    /// Index of `v_i^j`.
    pub fn copy_vertex(&self, i: usize, j: usize) -> usize {
        assert!(
            i < self.base.order() && j <= self.n0,
            "copy vertex out of range"
        );
        i * (self.n0 + 1) + j
    }

    pub fn sequence(&self, i: usize) -> &[usize] {
        &self.sequences[i]
    }

    pub fn pattern_order(&self) -> usize {
        self.shape.n
    }

    /// Number of distinct colors on the outer vertices of gadgets.
    pub fn outer_color_count(&self, coloring: &Coloring) -> usize {
        let mut colors: Vec<usize> = self
            .gadgets
            .iter()
            .flat_map(|g| [coloring.color(g.x), coloring.color(g.y)])
            .collect();
        colors.sort_unstable();
        colors.dedup();
        colors.len()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "construction": if self.supplementary.iter().any(|s| matches!(s.kind, SupplementaryKind::Subset { .. })) { "c2" } else { "c1" },
            "pattern_order": self.shape.n,
            "n0": self.n0,
            "base": GraphJson::from(&self.base),
            "gadgets": self.gadgets,
            "sequences": self.sequences,
            "supplementary": self.supplementary,
            "graph": GraphJson::from(&self.graph),
        })
    }
}

/// Lifts a proper coloring of the base graph with `k` colors to a WORM
/// coloring of the construction with exactly `max(k, n-1)` colors: every
/// `v_i^s` takes the color of `v_i`, and each gadget is filled as in
/// [`super::GadgetLayout::witness`] with its auxiliary colors chosen lowest
/// first.
pub fn witness_c1(layout: &C1Layout, proper: &Coloring) -> Result<Coloring> {
    let (phi, k) = dense_proper(&layout.base, proper)?;
    if k > layout.base.order() {
        return Err(contract("more colors than base vertices"));
    }
    let palette = k.max(layout.shape.n - 1);
    let mut colors = vec![usize::MAX; layout.graph.order()];
    for (i, &c) in phi.iter().enumerate() {
        for j in 0..=layout.n0 {
            colors[layout.copy_vertex(i, j)] = c;
        }
    }
    for g in &layout.gadgets {
        color_gadget(
            &mut colors,
            layout.shape,
            phi[g.i],
            &g.inner_s,
            &g.inner_sprime,
            palette,
        );
    }
    debug_assert!(colors.iter().all(|&c| c != usize::MAX));
    Ok(Coloring::new(colors))
}
