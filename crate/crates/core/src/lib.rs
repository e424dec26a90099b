//! Exact toolkit for F-WORM colorings.
//!
//! Given a pattern graph `F` of order `n` and a host `G`, an F-WORM coloring
//! of `G` colors its vertices so that no copy of `F` is monochromatic or
//! rainbow. This crate enumerates the copies ([`copies`]), verifies
//! colorings and computes lower/upper WORM chromatic numbers and full
//! feasible sets exactly ([`worm`]), and builds the gadget, reduction and
//! gap-graph constructions together with their witness colorings
//! ([`constructions`]).

pub mod constructions;
pub mod copies;
pub mod error;
pub mod graph;
pub mod worm;

pub use copies::{enumerate_copies, has_spanning_copy, CopyFamily};
pub use error::{Error, Result};
pub use graph::{Graph, Label, NamedGraph};
pub use worm::{verify, Budget, Coloring, Extremum, FeasibleSet, KStatus, Verdict};
