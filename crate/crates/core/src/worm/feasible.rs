use std::collections::BTreeMap;

use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use super::Coloring;

/// What is known about colorings with exactly `k` colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KStatus {
    Feasible(Coloring),
    Infeasible,
    /// The search budget ran out before a decision.
    Unknown,
}

impl KStatus {
    pub fn is_feasible(&self) -> bool {
        matches!(self, KStatus::Feasible(_))
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, KStatus::Infeasible)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, KStatus::Unknown)
    }

    pub fn witness(&self) -> Option<&Coloring> {
        match self {
            KStatus::Feasible(c) => Some(c),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            KStatus::Feasible(_) => "feasible",
            KStatus::Infeasible => "infeasible",
            KStatus::Unknown => "unknown",
        }
    }
}

/// A lower or upper WORM chromatic number, or why there is none.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extremum {
    Value(usize),
    /// No k admits a coloring.
    NotColorable,
    /// A budget-exhausted k blocks the answer.
    Unknown,
}

impl Extremum {
    pub fn value(self) -> Option<usize> {
        match self {
            Extremum::Value(k) => Some(k),
            _ => None,
        }
    }
}

impl Serialize for Extremum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extremum::Value(k) => s.serialize_u64(*k as u64),
            Extremum::NotColorable => s.serialize_str("not_colorable"),
            Extremum::Unknown => s.serialize_str("unknown"),
        }
    }
}

/// A maximal run of missing color counts strictly inside `(W⁻, W⁺)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Gap {
    pub start: usize,
    pub size: usize,
}

/// Per-k statuses for `k = 1..=|V|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibleSet {
    statuses: Vec<KStatus>,
}

impl FeasibleSet {
    /// `statuses[k - 1]` is the status for exactly `k` colors.
    pub fn from_statuses(statuses: Vec<KStatus>) -> Self {
        FeasibleSet { statuses }
    }

    /// Largest `k` covered.
    pub fn max_k(&self) -> usize {
        self.statuses.len()
    }

    pub fn status(&self, k: usize) -> Option<&KStatus> {
        k.checked_sub(1).and_then(|i| self.statuses.get(i))
    }

    pub fn statuses(
        &self,
    ) -> impl DoubleEndedIterator<Item = (usize, &KStatus)> + ExactSizeIterator {
        self.statuses.iter().enumerate().map(|(i, s)| (i + 1, s))
    }

    /// The `k` proven feasible.
    pub fn feasible(&self) -> Vec<usize> {
        self.statuses()
            .filter(|(_, s)| s.is_feasible())
            .map(|(k, _)| k)
            .collect()
    }

    pub fn has_unknown(&self) -> bool {
        self.statuses.iter().any(KStatus::is_unknown)
    }

    fn sweep<'a>(statuses: impl Iterator<Item = (usize, &'a KStatus)>) -> Extremum {
        for (k, s) in statuses {
            match s {
                KStatus::Feasible(_) => return Extremum::Value(k),
                KStatus::Unknown => return Extremum::Unknown,
                KStatus::Infeasible => {}
            }
        }
        Extremum::NotColorable
    }

    pub fn w_minus(&self) -> Extremum {
        Self::sweep(self.statuses())
    }

    pub fn w_plus(&self) -> Extremum {
        Self::sweep(self.statuses().rev())
    }

    /// Maximal runs of `Infeasible` strictly between W⁻ and W⁺. Empty when
    /// either bound is not a value. Runs touching an `Unknown` entry are
    /// reported as found, so their size is a lower bound.
    pub fn gaps(&self) -> Vec<Gap> {
        let (Some(lo), Some(hi)) = (self.w_minus().value(), self.w_plus().value()) else {
            return Vec::new();
        };
        let mut gaps = Vec::new();
        let mut run: Option<Gap> = None;
        for k in lo + 1..hi {
            if self.status(k).is_some_and(KStatus::is_infeasible) {
                run = Some(match run {
                    Some(g) => Gap {
                        size: g.size + 1,
                        ..g
                    },
                    None => Gap { start: k, size: 1 },
                });
            } else if let Some(g) = run.take() {
                gaps.push(g);
            }
        }
        gaps.extend(run);
        gaps
    }

    /// `{"feasible": {"1": "infeasible", ...}, "witnesses": {"k": [...]},
    /// "w_minus": .., "w_plus": .., "gaps": [{"start", "size"}]}`.
    pub fn to_json(&self) -> Value {
        let table: BTreeMap<usize, &str> = self.statuses().map(|(k, s)| (k, s.name())).collect();
        let witnesses: BTreeMap<usize, &[usize]> = self
            .statuses()
            .filter_map(|(k, s)| s.witness().map(|c| (k, c.colors())))
            .collect();
        json!({
            "feasible": table,
            "witnesses": witnesses,
            "w_minus": self.w_minus(),
            "w_plus": self.w_plus(),
            "gaps": self.gaps(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(pattern: &str) -> FeasibleSet {
        FeasibleSet::from_statuses(
            pattern
                .chars()
                .map(|c| match c {
                    'F' => KStatus::Feasible(Coloring::uniform(1)),
                    'I' => KStatus::Infeasible,
                    _ => KStatus::Unknown,
                })
                .collect(),
        )
    }

    #[test]
    fn extrema_and_gaps() {
        let s = set("IFIIFFII");
        assert_eq!(s.w_minus(), Extremum::Value(2));
        assert_eq!(s.w_plus(), Extremum::Value(6));
        assert_eq!(s.gaps(), vec![Gap { start: 3, size: 2 }]);
        assert_eq!(s.feasible(), vec![2, 5, 6]);
    }

    #[test]
    fn gap_free_and_uncolorable() {
        assert!(set("FFF").gaps().is_empty());
        assert_eq!(set("III").w_minus(), Extremum::NotColorable);
        assert_eq!(set("").w_plus(), Extremum::NotColorable);
    }

    #[test]
    fn unknown_blocks_extremum() {
        let s = set("IUFIF?");
        assert_eq!(s.w_minus(), Extremum::Unknown);
        assert_eq!(s.w_plus(), Extremum::Unknown);
        assert!(s.gaps().is_empty());
        assert!(s.has_unknown());
    }

    #[test]
    fn several_gaps() {
        let s = set("FIFIIUIF");
        assert_eq!(
            s.gaps(),
            vec![
                Gap { start: 2, size: 1 },
                Gap { start: 4, size: 2 },
                Gap { start: 7, size: 1 }
            ]
        );
    }

    #[test]
    fn json_shape() {
        let v = set("IF").to_json();
        assert_eq!(v["feasible"]["1"], "infeasible");
        assert_eq!(v["w_minus"], 2);
        assert_eq!(v["witnesses"]["2"], json!([0]));
    }
}
