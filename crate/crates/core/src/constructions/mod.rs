//! Deterministic builders for the WORM constructions and the witness
//! colorings that go with them.
//!
//! * [`gadget`]: `G₁(F)`, a near-complete graph whose two outer vertices
//!   receive equal colors in every F-WORM coloring.
//! * [`c1`] / [`c2`]: chains of gadgets per base vertex, tied together by
//!   supplementary induced copies of `F`; WORM colorings correspond to
//!   proper colorings of the base graph.
//! * [`gap_graph`]: `(G ⊠ K_{n-1}) ∨ K_{(n-3)(n-1)}`, whose `K_n`-WORM
//!   feasible set has a gap when `χ(G) >= 4`.

mod gadget;
mod gap;
mod reduction;

pub use gadget::{gadget, GadgetLayout};
pub use gap::{gap_graph, star_condition, witness_gap_high, witness_gap_low, GapLayout};
pub use reduction::{
    c1, c2, default_n0, witness_c1, C1Layout, GadgetEmbedding, SupplementaryCopy, SupplementaryKind,
};

use crate::error::{contract, Result};
use crate::graph::Graph;
use crate::worm::Coloring;

/// Sizes derived from the pattern that every gadget needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct GadgetShape {
    /// Pattern order.
    n: usize,
    /// Pattern minimum degree.
    delta: usize,
    s_len: usize,
    sprime_len: usize,
}

impl GadgetShape {
    pub(crate) fn of(pattern: &Graph) -> Result<Self> {
        let n = pattern.order();
        if n < 3 {
            return Err(contract(format!(
                "pattern must have at least 3 vertices, has {n}"
            )));
        }
        if !pattern.is_two_connected() {
            return Err(contract("pattern is not 2-connected"));
        }
        let delta = pattern.min_degree();
        let inner = (n - 1) * (n - 1) - 1;
        let sprime_len = n - delta - 1;
        Ok(GadgetShape {
            n,
            delta,
            s_len: inner - sprime_len,
            sprime_len,
        })
    }

    pub(crate) fn inner_len(&self) -> usize {
        self.s_len + self.sprime_len
    }
}

/// Adds the gadget edges: inner vertices form a clique, both outer vertices
/// see all of `s` and nothing else.
pub(crate) fn add_gadget_edges(g: &mut Graph, x: usize, y: usize, s: &[usize], sprime: &[usize]) {
    let inner: Vec<usize> = s.iter().chain(sprime).copied().collect();
    for (a, &u) in inner.iter().enumerate() {
        for &v in &inner[a + 1..] {
            g.add_edge(u, v);
        }
    }
    for &u in s {
        g.add_edge(x, u);
        g.add_edge(y, u);
    }
}

/// Colors one gadget the way the colorability argument does: the outer
/// color on `S'` and on the first `δ - 1` vertices of `S`; the rest of `S`
/// split into blocks of `n - 1` over the `n - 2` lowest colors of
/// `0..palette` other than the outer color.
pub(crate) fn color_gadget(
    colors: &mut [usize],
    shape: GadgetShape,
    outer: usize,
    s: &[usize],
    sprime: &[usize],
    palette: usize,
) {
    for &v in sprime {
        colors[v] = outer;
    }
    let shared = shape.delta - 1;
    for &v in &s[..shared] {
        colors[v] = outer;
    }
    let aux: Vec<usize> = (0..palette)
        .filter(|&c| c != outer)
        .take(shape.n - 2)
        .collect();
    for (block, chunk) in s[shared..].chunks(shape.n - 1).enumerate() {
        for &v in chunk {
            colors[v] = aux[block];
        }
    }
}

/// Validates `proper` on `base` and maps its color ids to `0..k`
/// preserving their order.
pub(crate) fn dense_proper(base: &Graph, proper: &Coloring) -> Result<(Vec<usize>, usize)> {
    if proper.len() != base.order() {
        return Err(contract(format!(
            "coloring covers {} vertices, base graph has {}",
            proper.len(),
            base.order()
        )));
    }
    if !proper.is_proper(base) {
        return Err(contract("input coloring is not proper on the base graph"));
    }
    let mut ids = proper.colors().to_vec();
    ids.sort_unstable();
    ids.dedup();
    let dense = proper
        .colors()
        .iter()
        .map(|c| ids.binary_search(c).expect("id present"))
        .collect();
    Ok((dense, ids.len()))
}
