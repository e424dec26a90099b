use std::fmt;
use std::str::FromStr;

use super::ops::{complete, cycle, empty, join, path};
use super::Graph;
use crate::error::Error;

/// Catalog of small graphs used as hosts, patterns and test corpus.
///
/// Parsed from short names: `k4`, `c5`, `p3`, `e2`, `star3`, `w5`,
/// `k2,3`, `petersen`, `groetzsch`, `diamond`, ...
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Empty(usize),
    /// `K_{1,n}`.
    Star(usize),
    /// Hub joined to a cycle on `n` vertices.
    Wheel(usize),
    CompleteBipartite(usize, usize),
    Petersen,
    Groetzsch,
    /// `K_4` minus an edge.
    Diamond,
    Paw,
    Bull,
    House,
    Cube,
    Octahedron,
    MoserSpindle,
    Prism,
    Chvatal,
}

impl NamedGraph {
    pub fn build(self) -> Graph {
        use NamedGraph::*;
        let edges = |n: usize, es: &[(usize, usize)]| {
            Graph::from_edges(n, es.iter().copied()).expect("catalog edges are valid")
        };
        match self {
            Complete(n) => complete(n),
            Cycle(n) => cycle(n),
            Path(n) => path(n),
            Empty(n) => empty(n),
            Star(n) => join(&complete(1), &empty(n)),
            Wheel(n) => join(&complete(1), &cycle(n)),
            CompleteBipartite(a, b) => join(&empty(a), &empty(b)),
            Petersen => {
                let mut g = Graph::new(10);
                for i in 0..5 {
                    g.add_edge(i, (i + 1) % 5);
                    g.add_edge(i, i + 5);
                    g.add_edge(i + 5, (i + 2) % 5 + 5);
                }
                g
            }
            Groetzsch => {
                let mut g = Graph::new(11);
                for i in 0..5 {
                    let next = (i + 1) % 5;
                    g.add_edge(i, next);
                    g.add_edge(i + 5, next);
                    g.add_edge(next + 5, i);
                    g.add_edge(i + 5, 10);
                }
                g
            }
            Diamond => edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
            Paw => edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]),
            Bull => edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
            House => edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)]),
            Cube => {
                let mut g = Graph::new(8);
                for v in 0..8usize {
                    for bit in 0..3 {
                        let w = v ^ (1 << bit);
                        if v < w {
                            g.add_edge(v, w);
                        }
                    }
                }
                g
            }
            Octahedron => join(&join(&empty(2), &empty(2)), &empty(2)),
            MoserSpindle => edges(
                7,
                &[
                    (0, 1),
                    (0, 2),
                    (1, 2),
                    (1, 3),
                    (2, 3),
                    (0, 4),
                    (0, 5),
                    (4, 5),
                    (4, 6),
                    (5, 6),
                    (3, 6),
                ],
            ),
            Prism => edges(
                6,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 0),
                    (3, 4),
                    (4, 5),
                    (5, 3),
                    (0, 3),
                    (1, 4),
                    (2, 5),
                ],
            ),
            Chvatal => edges(
                12,
                &[
                    (0, 1),
                    (0, 4),
                    (0, 6),
                    (0, 9),
                    (1, 2),
                    (1, 5),
                    (1, 7),
                    (2, 3),
                    (2, 6),
                    (2, 8),
                    (3, 4),
                    (3, 7),
                    (3, 9),
                    (4, 5),
                    (4, 8),
                    (5, 10),
                    (5, 11),
                    (6, 10),
                    (6, 11),
                    (7, 8),
                    (7, 11),
                    (8, 10),
                    (9, 10),
                    (9, 11),
                ],
            ),
        }
    }

    /// Fixed-size members of the catalog (parametric families excluded).
    pub fn fixed() -> &'static [NamedGraph] {
        use NamedGraph::*;
        &[
            Petersen,
            Groetzsch,
            Diamond,
            Paw,
            Bull,
            House,
            Cube,
            Octahedron,
            MoserSpindle,
            Prism,
            Chvatal,
        ]
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedGraph::*;
        match self {
            Complete(n) => write!(f, "k{n}"),
            Cycle(n) => write!(f, "c{n}"),
            Path(n) => write!(f, "p{n}"),
            Empty(n) => write!(f, "e{n}"),
            Star(n) => write!(f, "star{n}"),
            Wheel(n) => write!(f, "w{n}"),
            CompleteBipartite(a, b) => write!(f, "k{a},{b}"),
            Petersen => f.write_str("petersen"),
            Groetzsch => f.write_str("groetzsch"),
            Diamond => f.write_str("diamond"),
            Paw => f.write_str("paw"),
            Bull => f.write_str("bull"),
            House => f.write_str("house"),
            Cube => f.write_str("cube"),
            Octahedron => f.write_str("octahedron"),
            MoserSpindle => f.write_str("moser"),
            Prism => f.write_str("prism"),
            Chvatal => f.write_str("chvatal"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        use NamedGraph::*;
        let name = s.trim().to_ascii_lowercase();
        let unknown = || Error::UnknownGraph(s.to_string());
        let fixed = match name.as_str() {
            "petersen" => Some(Petersen),
            "groetzsch" | "grotzsch" | "grötzsch" => Some(Groetzsch),
            "diamond" => Some(Diamond),
            "paw" => Some(Paw),
            "bull" => Some(Bull),
            "house" => Some(House),
            "cube" | "q3" => Some(Cube),
            "octahedron" => Some(Octahedron),
            "moser" | "moser-spindle" => Some(MoserSpindle),
            "prism" => Some(Prism),
            "chvatal" => Some(Chvatal),
            _ => None,
        };
        if let Some(g) = fixed {
            return Ok(g);
        }
        let split = name
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(unknown)?;
        let (prefix, rest) = name.split_at(split);
        let num = |t: &str| t.parse::<usize>().map_err(|_| unknown());
        match prefix {
            "k" => match rest.split_once(',') {
                Some((a, b)) => Ok(CompleteBipartite(num(a)?, num(b)?)),
                None => Ok(Complete(num(rest)?)),
            },
            "c" => Ok(Cycle(num(rest)?)),
            "p" => Ok(Path(num(rest)?)),
            "e" => Ok(Empty(num(rest)?)),
            "star" | "s" => Ok(Star(num(rest)?)),
            "w" => Ok(Wheel(num(rest)?)),
            _ => Err(unknown()),
        }
    }
}
