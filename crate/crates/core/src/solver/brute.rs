use super::{SolveResult, SolveSpec};
use crate::error::{Error, Result};
use crate::labeling::{is_valid, Label, Labeling};

pub const BRUTE_FORCE_LIMIT: usize = 14;

/// Enumerates every labeling extending the fixed labels, in lexicographic
/// order with vertex 0 most significant, keeping the first optimum.
pub fn brute_force(spec: &SolveSpec) -> Result<SolveResult> {
    let g = spec.graph;
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { n, limit: BRUTE_FORCE_LIMIT });
    }
    let free: Vec<usize> = (0..n).filter(|&v| spec.fixed[v].is_none()).collect();
    let mut labels: Vec<Label> = spec.fixed.iter().map(|f| f.unwrap_or(Label::MinusOne)).collect();
    let mut best: Option<(i32, Vec<Label>)> = None;
    let total = 4u64.pow(free.len() as u32);
    for code in 0..total {
        // last free vertex is the least significant digit
        let mut rest = code;
        for &v in free.iter().rev() {
            labels[v] = Label::ALL[(rest & 3) as usize];
            rest >>= 2;
        }
        if !is_valid(g, &labels, spec.k, &spec.exempt) {
            continue;
        }
        let w = spec.objective_weight(&labels);
        if best.as_ref().is_none_or(|(b, _)| w < *b) {
            best = Some((w, labels.clone()));
        }
    }
    Ok(match best {
        Some((min_weight, l)) => SolveResult::Optimal { min_weight, witness: Labeling::new(l) },
        None => SolveResult::Infeasible,
    })
}
