//! Depth-first branch-and-bound over vertex labels.
//!
//! Vertices are branched in a static order that completes closed
//! neighborhoods as early as possible (ties broken by id). After each
//! assignment every touched constraint is re-checked optimistically: an
//! unassigned neighbor may still become a 3. The objective bound packs
//! vertex-disjoint unfinished closed neighborhoods, each of which must still
//! contribute at least `k - (assigned part)`.

use super::{SolveResult, SolveSpec};
use crate::error::{Error, Result};
use crate::labeling::{Label, Labeling};

pub const DEFAULT_SIZE_LIMIT: usize = 26;
pub const SIZE_LIMIT_ENV: &str = "SDRD_SIZE_LIMIT";

/// Vertex cap for [`solve_bnb`], overridable through `SDRD_SIZE_LIMIT`.
pub fn size_limit_from_env() -> usize {
    std::env::var(SIZE_LIMIT_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SIZE_LIMIT)
}

pub fn solve_bnb(spec: &SolveSpec) -> Result<SolveResult> {
    solve_bnb_with_limit(spec, size_limit_from_env())
}

pub fn solve_bnb_with_limit(spec: &SolveSpec, limit: usize) -> Result<SolveResult> {
    let n = spec.graph.n();
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    let mut search = Search::new(spec);
    let Some(opt) = search.optimize(&spec.fixed) else {
        return Ok(SolveResult::Infeasible);
    };
    // lexicographically smallest optimum: fix vertices in id order
    let mut fixed = spec.fixed.clone();
    for v in 0..n {
        if fixed[v].is_some() {
            continue;
        }
        let label = Label::ALL
            .into_iter()
            .find(|&l| {
                fixed[v] = Some(l);
                search.reaches(&fixed, opt)
            })
            .expect("some label attains the optimum");
        fixed[v] = Some(label);
    }
    let witness = Labeling::new(fixed.into_iter().map(|l| l.expect("all fixed")).collect());
    Ok(SolveResult::Optimal { min_weight: opt, witness })
}

const UNSET: i8 = 0;

struct Search<'a> {
    spec: &'a SolveSpec<'a>,
    adj: Vec<Vec<usize>>,
    /// Closed neighborhood lies inside the objective and the vertex is checked.
    packable: Vec<bool>,
    label: Vec<i8>,
    closed_sum: Vec<i32>,
    closed_unset: Vec<i32>,
    open_unset: Vec<i32>,
    threes: Vec<i32>,
    twos: Vec<i32>,
    objective_sum: i32,
    objective_unset: i32,
    order: Vec<usize>,
    /// Search succeeds on any complete labeling with objective below this.
    bound: i32,
    found: Option<i32>,
    stop_at_first: bool,
    scratch_taken: Vec<bool>,
    scratch_candidates: Vec<(i32, usize)>,
}

impl<'a> Search<'a> {
    fn new(spec: &'a SolveSpec<'a>) -> Self {
        let g = spec.graph;
        let n = g.n();
        let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
        let packable =
            (0..n).map(|w| !spec.exempt[w] && spec.objective[w] && adj[w].iter().all(|&x| spec.objective[x])).collect();
        Self {
            spec,
            adj,
            packable,
            label: vec![UNSET; n],
            closed_sum: vec![0; n],
            closed_unset: vec![0; n],
            open_unset: vec![0; n],
            threes: vec![0; n],
            twos: vec![0; n],
            objective_sum: 0,
            objective_unset: 0,
            order: Vec::new(),
            bound: i32::MAX,
            found: None,
            stop_at_first: false,
            scratch_taken: vec![false; n],
            scratch_candidates: Vec::with_capacity(n),
        }
    }

    fn reset(&mut self, fixed: &[Option<Label>]) -> bool {
        let n = self.adj.len();
        self.label.fill(UNSET);
        for v in 0..n {
            self.closed_sum[v] = 0;
            self.closed_unset[v] = self.adj[v].len() as i32 + 1;
            self.open_unset[v] = self.adj[v].len() as i32;
            self.threes[v] = 0;
            self.twos[v] = 0;
        }
        self.objective_sum = 0;
        self.objective_unset = self.spec.objective.iter().filter(|&&o| o).count() as i32;
        for (v, f) in fixed.iter().enumerate() {
            if let Some(l) = f {
                self.assign(v, l.value() as i8);
            }
        }
        self.order = self.branch_order(fixed);
        (0..n).all(|w| self.consistent(w))
    }

    /// Greedy order: repeatedly take the free vertex whose closed
    /// neighborhood already holds the most ordered or fixed vertices; ties
    /// go to the vertex with more neighbors, then the smaller id.
    fn branch_order(&self, fixed: &[Option<Label>]) -> Vec<usize> {
        let n = self.adj.len();
        let mut placed: Vec<bool> = fixed.iter().map(Option::is_some).collect();
        let mut order = Vec::with_capacity(n);
        while placed.iter().any(|&p| !p) {
            let pick = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let tight = self.adj[v].iter().filter(|&&w| placed[w]).count()
                        + self.adj[v]
                            .iter()
                            .map(|&w| self.adj[w].iter().filter(|&&x| placed[x]).count())
                            .max()
                            .unwrap_or(0);
                    (tight, self.adj[v].len(), std::cmp::Reverse(v))
                })
                .expect("free vertex left");
            placed[pick] = true;
            order.push(pick);
        }
        order
    }

    fn assign(&mut self, v: usize, val: i8) {
        self.label[v] = val;
        let x = val as i32;
        self.closed_sum[v] += x;
        self.closed_unset[v] -= 1;
        if self.spec.objective[v] {
            self.objective_sum += x;
            self.objective_unset -= 1;
        }
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            self.closed_sum[w] += x;
            self.closed_unset[w] -= 1;
            self.open_unset[w] -= 1;
            match val {
                3 => self.threes[w] += 1,
                2 => self.twos[w] += 1,
                _ => {}
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let val = self.label[v];
        let x = val as i32;
        self.label[v] = UNSET;
        self.closed_sum[v] -= x;
        self.closed_unset[v] += 1;
        if self.spec.objective[v] {
            self.objective_sum -= x;
            self.objective_unset += 1;
        }
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            self.closed_sum[w] -= x;
            self.closed_unset[w] += 1;
            self.open_unset[w] += 1;
            match val {
                3 => self.threes[w] -= 1,
                2 => self.twos[w] -= 1,
                _ => {}
            }
        }
    }

    /// Can the conditions at `w` still be met by some completion?
    fn consistent(&self, w: usize) -> bool {
        if self.spec.exempt[w] {
            return true;
        }
        if self.closed_sum[w] + 3 * self.closed_unset[w] < self.spec.k {
            return false;
        }
        match self.label[w] {
            -1 => self.threes[w] + self.open_unset[w] >= 1 || self.twos[w] >= 2,
            1 => self.threes[w] + self.twos[w] + self.open_unset[w] >= 1,
            _ => true,
        }
    }

    fn lower_bound(&mut self) -> i32 {
        let mut extra = 0;
        self.scratch_candidates.clear();
        for w in 0..self.adj.len() {
            if !self.packable[w] || self.closed_unset[w] == 0 {
                continue;
            }
            // unassigned part of N[w] must sum to at least k - closed_sum
            let gain = self.spec.k - self.closed_sum[w] + self.closed_unset[w];
            if gain > 0 {
                self.scratch_candidates.push((gain, w));
            }
        }
        if !self.scratch_candidates.is_empty() {
            self.scratch_candidates.sort_unstable_by(|a, b| b.cmp(a));
            self.scratch_taken.fill(false);
            for i in 0..self.scratch_candidates.len() {
                let (gain, w) = self.scratch_candidates[i];
                let free = |x: usize| self.label[x] == UNSET;
                let clash =
                    (free(w) && self.scratch_taken[w]) || self.adj[w].iter().any(|&x| free(x) && self.scratch_taken[x]);
                if clash {
                    continue;
                }
                if free(w) {
                    self.scratch_taken[w] = true;
                }
                for &x in &self.adj[w] {
                    if free(x) {
                        self.scratch_taken[x] = true;
                    }
                }
                extra += gain;
            }
        }
        self.objective_sum - self.objective_unset + extra
    }

    fn dfs(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            self.found = Some(self.objective_sum);
            self.bound = self.objective_sum;
            return self.stop_at_first;
        }
        let v = self.order[depth];
        for val in [-1i8, 1, 2, 3] {
            self.assign(v, val);
            let ok = self.consistent(v) && self.adj[v].iter().all(|&w| self.consistent(w));
            if ok && self.lower_bound() < self.bound && self.dfs(depth + 1) {
                self.unassign(v);
                return true;
            }
            self.unassign(v);
        }
        false
    }

    fn optimize(&mut self, fixed: &[Option<Label>]) -> Option<i32> {
        self.found = None;
        self.bound = i32::MAX;
        self.stop_at_first = false;
        if !self.reset(fixed) || self.lower_bound() >= self.bound {
            return None;
        }
        self.dfs(0);
        self.found
    }

    /// Does some completion of `fixed` reach objective `target` or less?
    fn reaches(&mut self, fixed: &[Option<Label>], target: i32) -> bool {
        self.found = None;
        self.bound = target + 1;
        self.stop_at_first = true;
        if !self.reset(fixed) || self.lower_bound() >= self.bound {
            return false;
        }
        self.dfs(0)
    }
}
