//! WORM colorings: verification, exact spectrum search and oracles.
//!
//! A coloring is an F-WORM coloring when every F-copy sees more than one
//! and fewer than `n` distinct colors. A host without any F-copy admits a
//! coloring with every number of colors from 1 to `|V|`.

mod complete;
mod feasible;
mod oracle;
mod solver;

pub use complete::{complete_graph_w_minus, worm_from_proper, CompleteWMinus};
pub use feasible::{Extremum, FeasibleSet, Gap, KStatus};
pub use oracle::{brute_force_feasible, worm_partitions, RestrictedGrowth, ORACLE_VERTEX_LIMIT};
pub use solver::{
    chromatic_number, feasible_set, proper_coloring_exactly, search_exactly_k, w_minus, w_plus,
    Budget,
};

use serde::{Deserialize, Serialize};

use crate::copies::CopyFamily;
use crate::error::{contract, Result};
use crate::graph::Graph;

/// A total assignment of color ids to vertices `0..len`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    /// Every vertex gets color 0.
    pub fn uniform(n: usize) -> Self {
        Coloring { colors: vec![0; n] }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct color ids.
    pub fn used_count(&self) -> usize {
        let mut ids = self.colors.clone();
        ids.sort_unstable();
        ids.dedup();
        ids.len()
    }

    /// Relabels ids `0, 1, ...` in order of first appearance.
    pub fn normalized(&self) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                let next = map.len();
                *map.entry(c).or_insert(next)
            })
            .collect();
        Coloring { colors }
    }

    /// Color classes ordered by their smallest vertex.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let norm = self.normalized();
        let mut classes = vec![Vec::new(); norm.used_count()];
        for (v, &c) in norm.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    /// Class sizes in ascending order.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.classes().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    /// Whether no edge of `g` joins two vertices of the same color.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.order() && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Outcome of checking a coloring against a copy family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "copy", rename_all = "snake_case")]
pub enum Verdict {
    Ok,
    MonochromaticCopy(Vec<usize>),
    RainbowCopy(Vec<usize>),
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }
}

pub(crate) fn distinct_count(
    colors: impl Iterator<Item = usize>,
    scratch: &mut Vec<usize>,
) -> usize {
    scratch.clear();
    scratch.extend(colors);
    scratch.sort_unstable();
    scratch.dedup();
    scratch.len()
}

/// Checks every copy in `family`; reports the first violation in member order.
pub fn verify(host: &Graph, family: &CopyFamily, coloring: &Coloring) -> Result<Verdict> {
    if coloring.len() != host.order() {
        return Err(contract(format!(
            "coloring covers {} vertices, host has {}",
            coloring.len(),
            host.order()
        )));
    }
    if family.max_vertex().is_some_and(|v| v >= host.order()) {
        return Err(contract("copy family mentions vertices outside the host"));
    }
    let n = family.pattern_order();
    let mut scratch = Vec::with_capacity(n);
    for member in family.members() {
        let distinct = distinct_count(member.iter().map(|&v| coloring.color(v)), &mut scratch);
        if distinct <= 1 {
            return Ok(Verdict::MonochromaticCopy(member.clone()));
        }
        if distinct >= n {
            return Ok(Verdict::RainbowCopy(member.clone()));
        }
    }
    Ok(Verdict::Ok)
}
