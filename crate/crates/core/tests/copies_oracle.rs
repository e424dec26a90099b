mod common;

use fworm::copies::has_spanning_copy;
use fworm::graph::{complete, Graph};
use fworm::{enumerate_copies, NamedGraph};
use itertools::Itertools;
use proptest::prelude::*;

fn naive(host: &Graph, pattern: &Graph) -> Vec<Vec<usize>> {
    (0..host.order())
        .combinations(pattern.order())
        .filter(|s| has_spanning_copy(&host.induced_subgraph(s), pattern).unwrap())
        .collect()
}

fn patterns() -> Vec<(&'static str, Graph)> {
    let mut p = common::patterns();
    p.push(("diamond", NamedGraph::Diamond.build()));
    p
}

#[test]
fn matches_naive_filter_on_corpus() {
    let mut corpus = common::named_small();
    corpus.extend(common::random_small(3));
    for (name, host) in &corpus {
        for (pname, pattern) in patterns() {
            let fam = enumerate_copies(host, &pattern).unwrap();
            assert_eq!(
                fam.members(),
                naive(host, &pattern).as_slice(),
                "{name}/{pname}"
            );
        }
    }
}

#[test]
fn complete_hosts_give_all_subsets() {
    for s in 4..=9 {
        for (pname, pattern) in patterns() {
            let n = pattern.order();
            let fam = enumerate_copies(&complete(s), &pattern).unwrap();
            let binom = (0..n).fold(1, |acc, i| acc * (s - i) / (i + 1));
            assert_eq!(fam.len(), binom, "k{s}/{pname}");
        }
    }
}

proptest! {
    #[test]
    fn adding_an_edge_keeps_every_copy(seed in 0u64..5000, n in 5usize..9, u in 0usize..9, v in 0usize..9) {
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v);
        let host = common::gnp(n, 0.5, seed);
        let mut bigger = host.clone();
        bigger.add_edge(u, v);
        for (_, pattern) in patterns() {
            let before = enumerate_copies(&host, &pattern).unwrap();
            let after = enumerate_copies(&bigger, &pattern).unwrap();
            for m in before.members() {
                prop_assert!(after.contains(m));
            }
        }
    }
}
