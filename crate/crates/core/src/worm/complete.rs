use serde::Serialize;

use super::Coloring;
use crate::error::{contract, Result};
use crate::graph::Graph;

/// Closed-form lower WORM chromatic number of `K_s` for any pattern of order `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CompleteWMinus {
    Value(usize),
    NotColorable,
}

/// `K_s` is colorable iff `s <= (n-1)^2`, and then needs `ceil(s / (n-1))` colors.
pub fn complete_graph_w_minus(s: usize, n: usize) -> Result<CompleteWMinus> {
    if s < 1 || n < 2 {
        return Err(contract(format!(
            "need s >= 1 and n >= 2, got s = {s}, n = {n}"
        )));
    }
    let m = n - 1;
    Ok(if s > m * m {
        CompleteWMinus::NotColorable
    } else {
        CompleteWMinus::Value(s.div_ceil(m))
    })
}

/// Turns a proper coloring of `g` with at most `(n-1)^2` classes into a
/// `K_n`-WORM coloring with colors `0..n-1`.
///
/// Classes are sorted by size (largest first, ties by color id) and dealt
/// round-robin into `n - 1` parts; part `i` becomes color `i`. Each part then
/// holds at most `n - 1` classes, so no `K_n` is monochromatic, and only
/// `n - 1` colors exist, so none is rainbow. With fewer than `n - 1`
/// classes the parts cannot all be non-empty; such a graph has no `K_n` at
/// all and the uniform coloring is returned.
pub fn worm_from_proper(g: &Graph, n: usize, proper: &Coloring) -> Result<Coloring> {
    if n < 3 {
        return Err(contract(format!(
            "pattern order must be at least 3, got {n}"
        )));
    }
    if !proper.is_proper(g) {
        return Err(contract(
            "input coloring is not a proper coloring of the graph",
        ));
    }
    let parts = n - 1;
    let mut classes: Vec<(usize, usize)> = {
        let mut counts = std::collections::BTreeMap::new();
        for &c in proper.colors() {
            *counts.entry(c).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    };
    if classes.len() > parts * parts {
        return Err(contract(format!(
            "{} color classes exceed the (n-1)^2 = {} limit",
            classes.len(),
            parts * parts
        )));
    }
    if classes.len() < parts {
        return Ok(Coloring::uniform(g.order()));
    }
    classes.sort_by_key(|&(color, size)| (std::cmp::Reverse(size), color));
    let part_of: std::collections::HashMap<usize, usize> = classes
        .iter()
        .enumerate()
        .map(|(pos, &(color, _))| (color, pos % parts))
        .collect();
    Ok(Coloring::new(
        proper.colors().iter().map(|c| part_of[c]).collect(),
    ))
}
