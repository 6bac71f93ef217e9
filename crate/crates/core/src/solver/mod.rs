//! Exact minimum-weight SDkRDF search.
//!
//! Three independent engines share one contract ([`SolveSpec`] in,
//! [`SolveResult`] out):
//!
//! * [`brute_force`] enumerates all `4^n` labelings (reference semantics);
//! * [`solve_bnb`] is a depth-first branch-and-bound for arbitrary graphs;
//! * [`solve_strip_dp`] sweeps the columns of width-2 strips (two-row grids,
//!   prisms `P(m,1)` and the block graphs).
//!
//! Among all optimal labelings every engine reports the lexicographically
//! smallest one (vertex id order, labels ordered `-1 < 1 < 2 < 3`).

mod bnb;
mod brute;
mod strip;

pub use bnb::{size_limit_from_env, solve_bnb, solve_bnb_with_limit, DEFAULT_SIZE_LIMIT, SIZE_LIMIT_ENV};
pub use brute::{brute_force, BRUTE_FORCE_LIMIT};
pub use strip::{solve_strip_dp, StripDp, Topology};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{Label, Labeling};

/// One minimization problem: a graph, a threshold `k`, labels fixed in
/// advance, vertices whose own conditions are waived, and the vertex subset
/// whose weight is minimized.
#[derive(Clone, Debug)]
pub struct SolveSpec<'g> {
    pub graph: &'g Graph,
    pub k: i32,
    pub fixed: Vec<Option<Label>>,
    pub exempt: Vec<bool>,
    pub objective: Vec<bool>,
}

impl<'g> SolveSpec<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let n = graph.n();
        Self { graph, k: 1, fixed: vec![None; n], exempt: vec![false; n], objective: vec![true; n] }
    }

    pub fn with_k(mut self, k: i32) -> Result<Self> {
        if k < 1 {
            return Err(Error::Parameter(format!("threshold k = {k} must be at least 1")));
        }
        self.k = k;
        Ok(self)
    }

    pub fn with_fixed(mut self, fixed: &[(usize, Label)]) -> Result<Self> {
        for &(v, l) in fixed {
            self.check_vertex(v)?;
            self.fixed[v] = Some(l);
        }
        Ok(self)
    }

    pub fn with_exempt(mut self, exempt: &[usize]) -> Result<Self> {
        for &v in exempt {
            self.check_vertex(v)?;
            self.exempt[v] = true;
        }
        Ok(self)
    }

    pub fn with_objective(mut self, subset: &[usize]) -> Result<Self> {
        self.objective = vec![false; self.graph.n()];
        for &v in subset {
            self.check_vertex(v)?;
            self.objective[v] = true;
        }
        Ok(self)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.graph.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.graph.n() });
        }
        Ok(())
    }

    pub fn exempt_list(&self) -> Vec<usize> {
        (0..self.graph.n()).filter(|&v| self.exempt[v]).collect()
    }

    pub fn objective_list(&self) -> Vec<usize> {
        (0..self.graph.n()).filter(|&v| self.objective[v]).collect()
    }

    pub(crate) fn objective_weight(&self, labels: &[Label]) -> i32 {
        labels.iter().zip(&self.objective).filter(|(_, &o)| o).map(|(l, _)| l.value()).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveResult {
    Optimal { min_weight: i32, witness: Labeling },
    Infeasible,
}

impl SolveResult {
    pub fn min_weight(&self) -> Option<i32> {
        match self {
            SolveResult::Optimal { min_weight, .. } => Some(*min_weight),
            SolveResult::Infeasible => None,
        }
    }

    pub fn witness(&self) -> Option<&Labeling> {
        match self {
            SolveResult::Optimal { witness, .. } => Some(witness),
            SolveResult::Infeasible => None,
        }
    }

    pub fn is_optimal(&self) -> bool {
        matches!(self, SolveResult::Optimal { .. })
    }
}

#[cfg(test)]
mod tests;
