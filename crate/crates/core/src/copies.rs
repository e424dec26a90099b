//! F-copies of a pattern inside a host graph.
//!
//! An F-copy is an `n`-vertex set of the host whose induced subgraph
//! contains a spanning subgraph isomorphic to the pattern. These sets are
//! the hyperedges that every WORM coloring must keep neither monochromatic
//! nor rainbow.

use std::collections::HashSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{contract, Error, Result};
use crate::graph::Graph;

/// Deduplicated F-copies, each stored as a sorted vertex tuple; the list is
/// sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopyFamily {
    #[serde(rename = "n")]
    pattern_order: usize,
    #[serde(rename = "copies")]
    members: Vec<Vec<usize>>,
}

impl CopyFamily {
    /// Builds a family from arbitrary vertex sets (sorted and deduplicated here).
    pub fn from_members(
        pattern_order: usize,
        members: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self> {
        let mut members: Vec<Vec<usize>> = members
            .into_iter()
            .map(|mut m| {
                m.sort_unstable();
                m
            })
            .collect();
        for m in &members {
            if m.len() != pattern_order || m.windows(2).any(|w| w[0] == w[1]) {
                return Err(contract(format!(
                    "copy {m:?} is not a set of {pattern_order} distinct vertices"
                )));
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(CopyFamily {
            pattern_order,
            members,
        })
    }

    pub fn empty(pattern_order: usize) -> Self {
        CopyFamily {
            pattern_order,
            members: Vec::new(),
        }
    }

    pub fn pattern_order(&self) -> usize {
        self.pattern_order
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: &[usize]) -> bool {
        self.members
            .binary_search_by(|m| m.as_slice().cmp(set))
            .is_ok()
    }

    /// Largest vertex index mentioned, if any.
    pub fn max_vertex(&self) -> Option<usize> {
        self.members.iter().filter_map(|m| m.last().copied()).max()
    }
}

/// All F-copies of `pattern` in `host`, found by backtracking subgraph
/// monomorphism search.
pub fn enumerate_copies(host: &Graph, pattern: &Graph) -> Result<CopyFamily> {
    enumerate_copies_with_budget(host, pattern, None)
}

/// As [`enumerate_copies`], but gives up with [`Error::BudgetExceeded`] once
/// more than `max_embeddings` complete embeddings have been visited. A
/// partial family is never returned.
pub fn enumerate_copies_with_budget(
    host: &Graph,
    pattern: &Graph,
    max_embeddings: Option<u64>,
) -> Result<CopyFamily> {
    let n = pattern.order();
    if n < 2 {
        return Err(contract(format!(
            "pattern must have at least 2 vertices, has {n}"
        )));
    }
    let plan = SearchPlan::new(pattern);
    let mut search = Search {
        host,
        pattern,
        plan: &plan,
        image: vec![usize::MAX; n],
        used: vec![false; host.order()],
        found: HashSet::new(),
        explored: 0,
        limit: max_embeddings,
    };
    search.extend(0)?;
    let members = search.found.into_iter().collect::<Vec<_>>();
    CopyFamily::from_members(n, members)
}

struct SearchPlan {
    order: Vec<usize>,
    /// For each position, the already-placed pattern neighbors.
    back_neighbors: Vec<Vec<usize>>,
}

impl SearchPlan {
    /// Highest degree first, then repeatedly the vertex with the most
    /// already-placed neighbors (ties: degree desc, index asc).
    fn new(pattern: &Graph) -> Self {
        let n = pattern.order();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let links = pattern.neighbors(v).iter().filter(|&&w| placed[w]).count();
                    (links, pattern.degree(v), std::cmp::Reverse(v))
                })
                .expect("unplaced vertex exists");
            placed[next] = true;
            order.push(next);
        }
        let back_neighbors = order
            .iter()
            .enumerate()
            .map(|(pos, &p)| {
                order[..pos]
                    .iter()
                    .copied()
                    .filter(|&q| pattern.has_edge(p, q))
                    .collect()
            })
            .collect();
        SearchPlan {
            order,
            back_neighbors,
        }
    }
}

struct Search<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    plan: &'a SearchPlan,
    image: Vec<usize>,
    used: Vec<bool>,
    found: HashSet<Vec<usize>>,
    explored: u64,
    limit: Option<u64>,
}

impl Search<'_> {
    fn extend(&mut self, pos: usize) -> Result<()> {
        if pos == self.plan.order.len() {
            self.explored += 1;
            if self.limit.is_some_and(|l| self.explored > l) {
                return Err(Error::BudgetExceeded {
                    explored: self.explored,
                });
            }
            let mut set = self.image.clone();
            set.sort_unstable();
            self.found.insert(set);
            return Ok(());
        }
        let p = self.plan.order[pos];
        let need = self.pattern.degree(p);
        let back = &self.plan.back_neighbors[pos];
        let candidates: Vec<usize> = match back.first() {
            Some(&anchor) => self.host.neighbors(self.image[anchor]).to_vec(),
            None => (0..self.host.order()).collect(),
        };
        for h in candidates {
            if self.used[h] || self.host.degree(h) < need {
                continue;
            }
            if !back.iter().all(|&q| self.host.has_edge(h, self.image[q])) {
                continue;
            }
            self.image[p] = h;
            self.used[h] = true;
            let res = self.extend(pos + 1);
            self.used[h] = false;
            res?;
        }
        Ok(())
    }
}

/// Whether some bijection from pattern vertices onto `induced`'s vertices
/// maps every pattern edge to an edge. Tries all `n!` bijections.
pub fn has_spanning_copy(induced: &Graph, pattern: &Graph) -> Result<bool> {
    let n = pattern.order();
    if induced.order() != n {
        return Err(contract(format!(
            "spanning copy test needs equal orders, got {} and {n}",
            induced.order()
        )));
    }
    if pattern.size() > induced.size() {
        return Ok(false);
    }
    let pattern_edges: Vec<(usize, usize)> = pattern.edges().collect();
    Ok((0..n).permutations(n).any(|f| {
        pattern_edges
            .iter()
            .all(|&(a, b)| induced.has_edge(f[a], f[b]))
    }))
}
