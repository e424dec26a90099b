//! Exhaustive set-partition oracle, independent of the search engine.

use super::{distinct_count, verify, Coloring, FeasibleSet, KStatus, Verdict};
use crate::copies::CopyFamily;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hosts above this size are refused by the oracle (Bell(12) ≈ 4.2M partitions).
pub const ORACLE_VERTEX_LIMIT: usize = 12;

/// Restricted growth strings of length `n`: `a[0] = 0` and
/// `a[i] <= 1 + max(a[..i])`. Each one encodes a set partition, with block
/// count `1 + max(a)`.
#[derive(Clone, Debug)]
pub struct RestrictedGrowth {
    current: Vec<usize>,
    prefix_max: Vec<usize>,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        RestrictedGrowth {
            current: vec![0; n],
            prefix_max: vec![0; n],
            started: false,
            done: false,
        }
    }

    /// Steps to the next string without allocating.
    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let n = self.current.len();
        let Some(i) = (1..n)
            .rev()
            .find(|&i| self.current[i] <= self.prefix_max[i - 1])
        else {
            self.done = true;
            return None;
        };
        self.current[i] += 1;
        self.prefix_max[i] = self.prefix_max[i - 1].max(self.current[i]);
        for j in i + 1..n {
            self.current[j] = 0;
            self.prefix_max[j] = self.prefix_max[i];
        }
        Some(&self.current)
    }

    /// Number of blocks in the current string.
    pub fn blocks(&self) -> usize {
        self.prefix_max.last().map_or(0, |m| m + 1)
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        self.advance().map(|a| Coloring::new(a.to_vec()))
    }
}

fn guard(host: &Graph) -> Result<()> {
    if host.order() > ORACLE_VERTEX_LIMIT {
        return Err(Error::TooLarge {
            vertices: host.order(),
            limit: ORACLE_VERTEX_LIMIT,
        });
    }
    Ok(())
}

/// Feasible set by checking every set partition of the vertex set. Never
/// reports `Unknown`; the stored witness for each `k` is the first valid
/// partition in restricted-growth order.
pub fn brute_force_feasible(host: &Graph, family: &CopyFamily) -> Result<FeasibleSet> {
    guard(host)?;
    // Validates the family against the host once.
    verify(host, family, &Coloring::uniform(host.order()))?;
    let n = host.order();
    let pattern_order = family.pattern_order();
    let mut statuses = vec![KStatus::Infeasible; n];
    let mut scratch = Vec::new();
    let mut rgs = RestrictedGrowth::new(n);
    while let Some(colors) = rgs.advance() {
        let blocks = colors.iter().max().map_or(0, |m| m + 1);
        if blocks == 0 || statuses[blocks - 1].is_feasible() {
            continue;
        }
        let ok = family.members().iter().all(|m| {
            let d = distinct_count(m.iter().map(|&v| colors[v]), &mut scratch);
            d > 1 && d < pattern_order
        });
        if ok {
            statuses[blocks - 1] = KStatus::Feasible(Coloring::new(colors.to_vec()));
        }
    }
    Ok(FeasibleSet::from_statuses(statuses))
}

/// Every WORM coloring of `host` up to renaming of colors, one per set
/// partition, in restricted-growth order.
pub fn worm_partitions<'a>(
    host: &'a Graph,
    family: &'a CopyFamily,
) -> Result<impl Iterator<Item = Coloring> + 'a> {
    guard(host)?;
    verify(host, family, &Coloring::uniform(host.order()))?;
    Ok(RestrictedGrowth::new(host.order())
        .filter(move |c| matches!(verify(host, family, c), Ok(Verdict::Ok))))
}
