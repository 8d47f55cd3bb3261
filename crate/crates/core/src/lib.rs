//! Exact computations around the l2-norm Turán problem for the tetrahedron.
//!
//! The crate is `no_std` (it only needs `alloc`) and contains every algorithm:
//!
//! * [`hypergraph`]: 3-graphs with codegrees, links, shadows, the l2-norm and
//!   the 2-norm degree `s(v)`.
//! * [`canon`]: canonical forms used for isomorph rejection.
//! * [`colored`]: vertex 3-colored graphs, cyclic triangles, the `Λ`
//!   construction and Zykov-style class symmetrization.
//! * [`constructions`]: the cyclic construction `C[V1,V2,V3]`, the bipartite
//!   construction `B[V1,V2]` and the closed form of `‖C‖₂`.
//! * [`classification`]: bad and missing edges relative to a partition.
//! * [`improve`]: the two toggle operators and the two-phase driver.
//! * [`census`]: exhaustive extremal searches at small orders.
//! * [`inequality`]: the simplex inequality (exact grid and interval
//!   certificate) and the 2-norm degree spread.
//!
//! File formats, reports, parallel runners and the command line live in the
//! `turanl2` crate.

#![no_std]

extern crate alloc;

pub mod bitset;
pub mod canon;
pub mod census;
pub mod classification;
pub mod colored;
pub mod constructions;
pub mod error;
pub mod gen;
pub mod hypergraph;
pub mod improve;
pub mod inequality;
pub mod interval;
pub mod partition;
pub mod rational;

pub use error::{Error, Result};
pub use hypergraph::{Graph, Pair, ThreeGraph, Triple};
pub use partition::Partition3;
pub use rational::Rational;
