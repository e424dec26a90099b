//! Exactly-k coloring search over a mix of WORM hyperedges and proper
//! (bichromatic) edges.
//!
//! Depth-first search with forward checking on per-vertex color domains:
//!
//! * a copy with `n - 1` colored vertices, all one color, bans that color on
//!   its last vertex; with `n - 1` distinct colors it restricts the last
//!   vertex to those colors;
//! * a proper edge bans the color of a colored endpoint on the other one;
//! * colors are introduced in increasing order (a vertex may open at most one
//!   new color), which removes the `k!` relabelings of each solution;
//! * unused colors must still be reachable by enough uncolored vertices.
//!
//! Unused colors are interchangeable, so each domain holds either all of
//! them or none; the surjectivity check relies on this.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::{verify, Coloring, Extremum, FeasibleSet, KStatus};
use crate::copies::CopyFamily;
use crate::error::Result;
use crate::graph::Graph;

/// Node and wall-clock limits for one exactly-k search. Exceeding either
/// yields `Unknown`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(limit: u64) -> Self {
        Budget {
            node_limit: Some(limit),
            time_limit: None,
        }
    }

    pub fn time(limit: Duration) -> Self {
        Budget {
            node_limit: None,
            time_limit: Some(limit),
        }
    }
}

struct Problem<'a> {
    n: usize,
    copy_order: usize,
    members: &'a [Vec<usize>],
    member_of: Vec<Vec<usize>>,
    proper: Vec<Vec<usize>>,
    rank: Vec<usize>,
}

impl<'a> Problem<'a> {
    fn new(n: usize, family: Option<&'a CopyFamily>, proper_edges: Option<&Graph>) -> Self {
        let members: &[Vec<usize>] = family.map_or(&[], |f| f.members());
        let mut member_of = vec![Vec::new(); n];
        for (idx, m) in members.iter().enumerate() {
            for &v in m {
                member_of[v].push(idx);
            }
        }
        let proper: Vec<Vec<usize>> = match proper_edges {
            Some(g) => (0..n).map(|v| g.neighbors(v).to_vec()).collect(),
            None => vec![Vec::new(); n],
        };
        let rank = Self::degeneracy_rank(n, members, &proper);
        Problem {
            n,
            copy_order: family.map_or(0, CopyFamily::pattern_order),
            members,
            member_of,
            proper,
            rank,
        }
    }

    /// Rank in reverse degeneracy order of the conflict graph (vertices
    /// sharing a copy or a proper edge): the densest core comes first.
    fn degeneracy_rank(n: usize, members: &[Vec<usize>], proper: &[Vec<usize>]) -> Vec<usize> {
        let mut conflict = Graph::new(n);
        for m in members {
            for (a, &u) in m.iter().enumerate() {
                for &v in &m[a + 1..] {
                    conflict.add_edge(u, v);
                }
            }
        }
        for (u, ns) in proper.iter().enumerate() {
            for &v in ns {
                if u < v {
                    conflict.add_edge(u, v);
                }
            }
        }
        let mut degree: Vec<usize> = (0..n).map(|v| conflict.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut rank = vec![0; n];
        for step in 0..n {
            let v = (0..n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (degree[v], v))
                .expect("vertex left");
            removed[v] = true;
            rank[v] = n - 1 - step;
            for &w in conflict.neighbors(v) {
                degree[w] = degree[w].saturating_sub(1);
            }
        }
        rank
    }
}

enum Outcome {
    Found,
    Exhausted,
    Aborted,
}

const NONE: usize = usize::MAX;

struct Search<'p> {
    p: &'p Problem<'p>,
    k: usize,
    words: usize,
    colors: Vec<usize>,
    domains: Vec<u64>,
    trail: Vec<(usize, u64)>,
    nodes: u64,
    budget: Budget,
    started: Instant,
}

impl<'p> Search<'p> {
    fn new(p: &'p Problem<'p>, k: usize, budget: Budget) -> Self {
        let words = k.div_ceil(64).max(1);
        let mut full = vec![0u64; words];
        for c in 0..k {
            full[c / 64] |= 1 << (c % 64);
        }
        let domains = (0..p.n).flat_map(|_| full.iter().copied()).collect();
        Search {
            p,
            k,
            words,
            colors: vec![NONE; p.n],
            domains,
            trail: Vec::new(),
            nodes: 0,
            budget,
            started: Instant::now(),
        }
    }

    #[inline]
    fn allows(&self, v: usize, c: usize) -> bool {
        self.domains[v * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    fn set_word(&mut self, idx: usize, value: u64) {
        let old = self.domains[idx];
        if old != value {
            self.trail.push((idx, old));
            self.domains[idx] = value;
        }
    }

    fn is_empty_domain(&self, v: usize) -> bool {
        self.domains[v * self.words..(v + 1) * self.words]
            .iter()
            .all(|&w| w == 0)
    }

    /// Removes `c` from `v`'s domain; `false` on wipe-out.
    fn remove(&mut self, v: usize, c: usize) -> bool {
        let idx = v * self.words + c / 64;
        self.set_word(idx, self.domains[idx] & !(1 << (c % 64)));
        !self.is_empty_domain(v)
    }

    /// Restricts `v`'s domain to `keep`; `false` on wipe-out.
    fn restrict(&mut self, v: usize, keep: &[u64]) -> bool {
        for (w, &mask) in keep.iter().enumerate().take(self.words) {
            let idx = v * self.words + w;
            self.set_word(idx, self.domains[idx] & mask);
        }
        !self.is_empty_domain(v)
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (idx, old) = self.trail.pop().expect("trail entry");
            self.domains[idx] = old;
        }
    }

    fn over_budget(&self) -> bool {
        if self.budget.node_limit.is_some_and(|l| self.nodes > l) {
            return true;
        }
        self.nodes.is_multiple_of(1024)
            && self
                .budget
                .time_limit
                .is_some_and(|t| self.started.elapsed() > t)
    }

    /// Forward checking after coloring `v` with `c`.
    fn propagate(&mut self, v: usize, c: usize) -> bool {
        let p = self.p;
        for &w in &p.proper[v] {
            if self.colors[w] == c {
                return false;
            }
            if self.colors[w] == NONE && !self.remove(w, c) {
                return false;
            }
        }
        let n = p.copy_order;
        let mut seen: Vec<usize> = Vec::with_capacity(n);
        let mut keep = vec![0u64; self.words];
        for &m in &p.member_of[v] {
            seen.clear();
            let mut free = NONE;
            let mut free_count = 0;
            for &u in &p.members[m] {
                match self.colors[u] {
                    NONE => {
                        free = u;
                        free_count += 1;
                    }
                    col => {
                        if !seen.contains(&col) {
                            seen.push(col);
                        }
                    }
                }
            }
            match free_count {
                0 => {
                    if seen.len() <= 1 || seen.len() >= n {
                        return false;
                    }
                }
                1 => {
                    if seen.len() == 1 && !self.remove(free, seen[0]) {
                        return false;
                    }
                    if seen.len() == n - 1 {
                        keep.iter_mut().for_each(|w| *w = 0);
                        for &col in &seen {
                            keep[col / 64] |= 1 << (col % 64);
                        }
                        if !self.restrict(free, &keep) {
                            return false;
                        }
                    }
                }
                _ => {}
            }
        }
        true
    }

    fn run(&mut self, used: usize, assigned: usize) -> Outcome {
        self.nodes += 1;
        if self.over_budget() {
            return Outcome::Aborted;
        }
        if assigned == self.p.n {
            return if used == self.k {
                Outcome::Found
            } else {
                Outcome::Exhausted
            };
        }
        let unused = self.k - used;
        // Allowed values are the domain restricted to 0..=used (one fresh color).
        let top = used.min(self.k - 1);
        let mut fresh_capable = 0;
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..self.p.n {
            if self.colors[v] != NONE {
                continue;
            }
            if used < self.k && self.allows(v, used) {
                fresh_capable += 1;
            }
            let choices = (0..=top).filter(|&c| self.allows(v, c)).count();
            if choices == 0 {
                return Outcome::Exhausted;
            }
            let key = (choices, self.p.rank[v], v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        if fresh_capable < unused {
            return Outcome::Exhausted;
        }
        let (_, _, v) = best.expect("an uncolored vertex exists");
        for c in 0..=top {
            if !self.allows(v, c) {
                continue;
            }
            let mark = self.trail.len();
            self.colors[v] = c;
            let consistent = self.propagate(v, c);
            let outcome = if consistent {
                self.run(used.max(c + 1), assigned + 1)
            } else {
                Outcome::Exhausted
            };
            match outcome {
                Outcome::Found => return Outcome::Found,
                Outcome::Aborted => {
                    self.colors[v] = NONE;
                    self.undo(mark);
                    return Outcome::Aborted;
                }
                Outcome::Exhausted => {
                    self.colors[v] = NONE;
                    self.undo(mark);
                }
            }
        }
        Outcome::Exhausted
    }
}

fn solve(problem: &Problem<'_>, k: usize, budget: Budget) -> KStatus {
    if k == 0 {
        return if problem.n == 0 {
            KStatus::Feasible(Coloring::new(Vec::new()))
        } else {
            KStatus::Infeasible
        };
    }
    if k > problem.n {
        return KStatus::Infeasible;
    }
    let mut search = Search::new(problem, k, budget);
    match search.run(0, 0) {
        Outcome::Found => KStatus::Feasible(Coloring::new(search.colors)),
        Outcome::Exhausted => KStatus::Infeasible,
        Outcome::Aborted => KStatus::Unknown,
    }
}

fn check_family(host: &Graph, family: &CopyFamily) -> Result<()> {
    verify(host, family, &Coloring::uniform(host.order())).map(|_| ())
}

/// Decides whether `host` has a WORM coloring with exactly `k` colors.
pub fn search_exactly_k(
    host: &Graph,
    family: &CopyFamily,
    k: usize,
    budget: Budget,
) -> Result<KStatus> {
    check_family(host, family)?;
    let problem = Problem::new(host.order(), Some(family), None);
    Ok(solve(&problem, k, budget))
}

/// Status of every `k` in `1..=|V|`, each decided by its own search with
/// its own budget. Searches for different `k` run in parallel on the
/// current rayon pool.
pub fn feasible_set(host: &Graph, family: &CopyFamily, budget: Budget) -> Result<FeasibleSet> {
    check_family(host, family)?;
    let problem = Problem::new(host.order(), Some(family), None);
    let statuses = (1..=host.order())
        .into_par_iter()
        .map(|k| solve(&problem, k, budget))
        .collect();
    Ok(FeasibleSet::from_statuses(statuses))
}

fn sweep(problem: &Problem<'_>, ks: impl Iterator<Item = usize>, budget: Budget) -> Extremum {
    for k in ks {
        match solve(problem, k, budget) {
            KStatus::Feasible(_) => return Extremum::Value(k),
            KStatus::Unknown => return Extremum::Unknown,
            KStatus::Infeasible => {}
        }
    }
    Extremum::NotColorable
}

/// Lower WORM chromatic number by ascending exactly-k searches.
pub fn w_minus(host: &Graph, family: &CopyFamily, budget: Budget) -> Result<Extremum> {
    check_family(host, family)?;
    let problem = Problem::new(host.order(), Some(family), None);
    Ok(sweep(&problem, 1..=host.order(), budget))
}

/// Upper WORM chromatic number by descending exactly-k searches.
pub fn w_plus(host: &Graph, family: &CopyFamily, budget: Budget) -> Result<Extremum> {
    check_family(host, family)?;
    let problem = Problem::new(host.order(), Some(family), None);
    Ok(sweep(&problem, (1..=host.order()).rev(), budget))
}

/// A proper coloring of `g` with exactly `k` colors, if one exists.
pub fn proper_coloring_exactly(g: &Graph, k: usize, budget: Budget) -> KStatus {
    let problem = Problem::new(g.order(), None, Some(g));
    solve(&problem, k, budget)
}

/// Exact chromatic number; `Value(0)` for the empty graph.
pub fn chromatic_number(g: &Graph, budget: Budget) -> Extremum {
    if g.order() == 0 {
        return Extremum::Value(0);
    }
    let problem = Problem::new(g.order(), None, Some(g));
    sweep(&problem, 1..=g.order(), budget)
}
