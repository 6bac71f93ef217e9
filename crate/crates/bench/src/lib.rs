//! Shared fixtures for the criterion benches.

use sdrd_core::graph::{build_flower_snark, build_grid, build_petersen};
use sdrd_core::Graph;

/// Instances small enough for one B&B solve per iteration.
pub fn bnb_instances() -> Vec<(&'static str, Graph)> {
    vec![
        ("P(8,3)", build_petersen(8, 3).expect("simple")),
        ("P(9,3)", build_petersen(9, 3).expect("simple")),
        ("J_5", build_flower_snark(5).expect("odd m")),
    ]
}

/// Two-row strips, grids and prisms, at sizes only the DP reaches. Witness
/// extraction runs one DP per vertex, so the cost grows quadratically.
pub fn strip_instances() -> Vec<(&'static str, Graph)> {
    vec![
        ("2x100 grid", build_grid(2, 100).expect("valid size")),
        ("2x300 grid", build_grid(2, 300).expect("valid size")),
        ("P(100,1)", build_petersen(100, 1).expect("simple")),
    ]
}
