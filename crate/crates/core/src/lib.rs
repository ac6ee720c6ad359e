//! Conflict-free connection colorings of graphs.

pub mod coloring;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod reduce;
pub mod selftest;
pub mod solve;
pub mod verify;

pub use coloring::{Coloring, EdgeColoring, PairSet, VertexColoring};
pub use error::{Error, Result};
pub use graph::Graph;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/conflict-free.md")]
    mod conflict_free {}
    #[doc = include_str!("../../../book/src/strong.md")]
    mod strong {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/solving.md")]
    mod solving {}
    #[doc = include_str!("../../../book/src/reductions.md")]
    mod reductions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
