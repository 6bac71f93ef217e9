//! Signed double Roman domination on cubic and subcubic graphs.
//!
//! A signed double Roman dominating function (SDRDF) labels every vertex with
//! one of `-1, 1, 2, 3` so that each -1 has a neighbor labeled 3 or two
//! neighbors labeled 2, each 1 has a neighbor labeled 2 or 3, and every
//! closed neighborhood sums to at least 1 (at least `k` for the SDkRDF
//! variant). The crate computes minimum weights exactly, emits explicit
//! labelings for graph families, certifies the cubic lower bound by
//! discharging, and tabulates the boundary-constellation atlas of 2 x 12 and
//! 2 x 8 blocks.

pub mod atlas;
pub mod bounds;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod labeling;
pub mod reproduce;
pub mod solver;

pub use atlas::{Atlas, BlockRecord, Constellation};
pub use bounds::{BoundReport, ChargeVector};
pub use error::{Error, Result};
pub use graph::{BlockVariant, Family, Graph, VertexName};
pub use labeling::{Label, Labeling, ValidationReport};
pub use solver::{SolveResult, SolveSpec, Topology};
