//! Transfer-matrix dynamic program over width-2 strips.
//!
//! A column is the label pair of its two vertices (16 states). Every
//! condition of a vertex in column `j` involves only columns `j-1`, `j` and
//! `j+1`, so the sweep carries the labels of the last two columns (at most
//! 256 states) and verifies column `j` as soon as column `j+1` is chosen.
//! The cyclic variant enumerates the first two columns and closes the ring by
//! re-checking the two seam columns.

use super::{SolveResult, SolveSpec};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph, BLOCK_WIDTH_FULL, BLOCK_WIDTH_REDUCED};
use crate::labeling::{Label, Labeling};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Topology {
    Open,
    Cyclic,
}

const STATES: usize = 16;
/// Pseudo-state for the missing neighbor column at an open end.
const ABSENT: usize = 16;
const INF: i32 = i32::MAX;

fn label_of(state: usize, row: usize) -> Label {
    Label::ALL[(state >> (2 * row)) & 3]
}

fn table_index(prev: usize, cur: usize, next: usize) -> usize {
    (prev * STATES + cur) * (STATES + 1) + next
}

/// A strip solver prepared for one graph, threshold, exemption set and
/// objective; it answers any number of fixed-label queries.
#[derive(Clone, Debug)]
pub struct StripDp {
    n: usize,
    columns: Vec<[usize; 2]>,
    cyclic: bool,
    /// Per column, index into `tables`.
    kind: Vec<usize>,
    /// `tables[kind][table_index(prev, cur, next)]`: column conditions hold.
    tables: Vec<Vec<bool>>,
    /// Objective weight of each column state.
    column_weight: Vec<[i32; STATES]>,
}

impl StripDp {
    pub fn new(graph: &Graph, topology: Topology, k: i32, exempt: &[bool], objective: &[bool]) -> Result<Self> {
        let (width, cyclic) = match graph.family() {
            Family::Grid { rows: 2, cols } => (cols, false),
            Family::GeneralizedPetersen { m, k: 1 } => (m, true),
            Family::BlockG => (BLOCK_WIDTH_FULL, false),
            Family::BlockGPrime => (BLOCK_WIDTH_REDUCED, false),
            other => return Err(Error::UnsupportedTopology(format!("{other:?}"))),
        };
        let wanted = if cyclic { Topology::Cyclic } else { Topology::Open };
        if topology != wanted {
            return Err(Error::UnsupportedTopology(format!("{:?} requires {wanted:?} topology", graph.family())));
        }
        if k < 1 {
            return Err(Error::Parameter(format!("threshold k = {k} must be at least 1")));
        }
        let columns: Vec<[usize; 2]> = (0..width).map(|c| [c, width + c]).collect();
        check_ladder(graph, &columns, cyclic)?;

        let mut kinds: Vec<(bool, bool, bool, bool)> = Vec::new();
        let mut kind = Vec::with_capacity(width);
        for (j, col) in columns.iter().enumerate() {
            let key = (exempt[col[0]], exempt[col[1]], cyclic || j > 0, cyclic || j + 1 < width);
            let idx = kinds.iter().position(|&x| x == key).unwrap_or_else(|| {
                kinds.push(key);
                kinds.len() - 1
            });
            kind.push(idx);
        }
        let tables =
            kinds.iter().map(|&(e0, e1, has_prev, has_next)| build_table([e0, e1], has_prev, has_next, k)).collect();
        let column_weight = columns
            .iter()
            .map(|col| {
                let mut w = [0; STATES];
                for (s, slot) in w.iter_mut().enumerate() {
                    *slot = (0..2).filter(|&r| objective[col[r]]).map(|r| label_of(s, r).value()).sum();
                }
                w
            })
            .collect();
        Ok(Self { n: graph.n(), columns, cyclic, kind, tables, column_weight })
    }

    fn ok(&self, j: usize, prev: usize, cur: usize, next: usize) -> bool {
        self.tables[self.kind[j]][table_index(prev, cur, next)]
    }

    fn allowed(&self, fixed: &[Option<Label>]) -> Vec<Vec<usize>> {
        self.columns
            .iter()
            .map(|col| {
                (0..STATES).filter(|&s| (0..2).all(|r| fixed[col[r]].is_none_or(|l| l == label_of(s, r)))).collect()
            })
            .collect()
    }

    /// Minimum objective weight over labelings extending `fixed`, or `None`
    /// when no labeling satisfies the conditions.
    pub fn min_weight(&self, fixed: &[Option<Label>]) -> Option<i32> {
        assert_eq!(fixed.len(), self.n);
        let allowed = self.allowed(fixed);
        if allowed.iter().any(Vec::is_empty) {
            return None;
        }
        let best = if self.cyclic { self.sweep_cyclic(&allowed) } else { self.sweep_open(&allowed) };
        (best != INF).then_some(best)
    }

    fn sweep_open(&self, allowed: &[Vec<usize>]) -> i32 {
        let m = self.columns.len();
        // dp[prev * 16 + cur], prev may be ABSENT
        let mut dp = vec![INF; (STATES + 1) * STATES];
        for &c in &allowed[0] {
            dp[ABSENT * STATES + c] = self.column_weight[0][c];
        }
        let mut prevs: Vec<usize> = vec![ABSENT];
        for j in 0..m - 1 {
            let mut next = vec![INF; (STATES + 1) * STATES];
            for &p in &prevs {
                for &c in &allowed[j] {
                    let base = dp[p * STATES + c];
                    if base == INF {
                        continue;
                    }
                    for &nx in &allowed[j + 1] {
                        if self.ok(j, p, c, nx) {
                            let slot = &mut next[c * STATES + nx];
                            *slot = (*slot).min(base + self.column_weight[j + 1][nx]);
                        }
                    }
                }
            }
            dp = next;
            prevs = allowed[j].clone();
        }
        let mut best = INF;
        for &p in &prevs {
            for &c in &allowed[m - 1] {
                let v = dp[p * STATES + c];
                if v != INF && self.ok(m - 1, p, c, ABSENT) {
                    best = best.min(v);
                }
            }
        }
        best
    }

    fn sweep_cyclic(&self, allowed: &[Vec<usize>]) -> i32 {
        let m = self.columns.len();
        let mut best = INF;
        let mut dp = vec![INF; STATES * STATES];
        for &c0 in &allowed[0] {
            for &c1 in &allowed[1] {
                dp.fill(INF);
                dp[c0 * STATES + c1] = self.column_weight[0][c0] + self.column_weight[1][c1];
                let mut prevs: &[usize] = std::slice::from_ref(&c0);
                let mut curs: &[usize] = std::slice::from_ref(&c1);
                for j in 1..m - 1 {
                    let mut next = vec![INF; STATES * STATES];
                    for &p in prevs {
                        for &c in curs {
                            let base = dp[p * STATES + c];
                            if base == INF {
                                continue;
                            }
                            for &nx in &allowed[j + 1] {
                                if self.ok(j, p, c, nx) {
                                    let slot = &mut next[c * STATES + nx];
                                    *slot = (*slot).min(base + self.column_weight[j + 1][nx]);
                                }
                            }
                        }
                    }
                    dp = next;
                    prevs = curs;
                    curs = &allowed[j + 1];
                }
                for &p in prevs {
                    for &c in curs {
                        let v = dp[p * STATES + c];
                        if v != INF && v < best && self.ok(m - 1, p, c, c0) && self.ok(0, c, c0, c1) {
                            best = v;
                        }
                    }
                }
            }
        }
        best
    }

    /// Optimum plus the lexicographically smallest optimal witness, obtained
    /// by fixing vertices in id order to the smallest label that keeps the
    /// optimum reachable.
    pub fn solve(&self, fixed: &[Option<Label>]) -> SolveResult {
        let Some(opt) = self.min_weight(fixed) else {
            return SolveResult::Infeasible;
        };
        let mut fixed = fixed.to_vec();
        for v in 0..self.n {
            if fixed[v].is_some() {
                continue;
            }
            let label = Label::ALL
                .into_iter()
                .find(|&l| {
                    fixed[v] = Some(l);
                    self.min_weight(&fixed) == Some(opt)
                })
                .expect("some label attains the optimum");
            fixed[v] = Some(label);
        }
        let witness = Labeling::new(fixed.into_iter().map(|l| l.expect("all fixed")).collect());
        SolveResult::Optimal { min_weight: opt, witness }
    }
}

/// The graph must be exactly the ladder on `columns` (plus the wrap-around
/// rungs when cyclic).
fn check_ladder(graph: &Graph, columns: &[[usize; 2]], cyclic: bool) -> Result<()> {
    let m = columns.len();
    if cyclic && m < 3 {
        return Err(Error::UnsupportedTopology(format!("cyclic strip of width {m}")));
    }
    for (j, col) in columns.iter().enumerate() {
        for r in 0..2 {
            let mut expected = vec![col[1 - r]];
            if j > 0 {
                expected.push(columns[j - 1][r]);
            } else if cyclic {
                expected.push(columns[m - 1][r]);
            }
            if j + 1 < m {
                expected.push(columns[j + 1][r]);
            } else if cyclic {
                expected.push(columns[0][r]);
            }
            expected.sort_unstable();
            if graph.neighbors(col[r]) != expected.as_slice() {
                return Err(Error::UnsupportedTopology(format!("vertex {} is not a ladder vertex", col[r])));
            }
        }
    }
    Ok(())
}

fn build_table(exempt: [bool; 2], has_prev: bool, has_next: bool, k: i32) -> Vec<bool> {
    let mut table = vec![false; (STATES + 1) * STATES * (STATES + 1)];
    let prevs: Vec<usize> = if has_prev { (0..STATES).collect() } else { vec![ABSENT] };
    let nexts: Vec<usize> = if has_next { (0..STATES).collect() } else { vec![ABSENT] };
    for &p in &prevs {
        for c in 0..STATES {
            for &nx in &nexts {
                let ok = (0..2).all(|r| {
                    if exempt[r] {
                        return true;
                    }
                    let mut neigh = vec![label_of(c, 1 - r)];
                    if p != ABSENT {
                        neigh.push(label_of(p, r));
                    }
                    if nx != ABSENT {
                        neigh.push(label_of(nx, r));
                    }
                    vertex_ok(label_of(c, r), &neigh, k)
                });
                table[table_index(p, c, nx)] = ok;
            }
        }
    }
    table
}

fn vertex_ok(own: Label, neighbors: &[Label], k: i32) -> bool {
    let threes = neighbors.iter().filter(|&&l| l == Label::Three).count();
    let twos = neighbors.iter().filter(|&&l| l == Label::Two).count();
    let sum: i32 = own.value() + neighbors.iter().map(|l| l.value()).sum::<i32>();
    let defended = match own {
        Label::MinusOne => threes >= 1 || twos >= 2,
        Label::One => threes + twos >= 1,
        _ => true,
    };
    defended && sum >= k
}

/// Solves a two-row grid (open), a prism `P(m,1)` (cyclic) or a block graph
/// (open) exactly.
pub fn solve_strip_dp(spec: &SolveSpec, topology: Topology) -> Result<SolveResult> {
    let dp = StripDp::new(spec.graph, topology, spec.k, &spec.exempt, &spec.objective)?;
    Ok(dp.solve(&spec.fixed))
}
