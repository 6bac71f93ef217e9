//! Exhaustive table of block optima over all boundary constellations.
//!
//! A constellation fixes the eight boundary vertices of the block graphs `G`
//! (2 x 12) and `G'` (2 x 8) in the order
//! `<l_t, l_ti, l_b, l_bi, r_ti, r_t, r_bi, r_b>`. For each one the atlas
//! stores the minimum weight of the 16-vertex center `C` of `G`, the minimum
//! weight of the 8-vertex center `C'` of `G'`, and their difference. The four
//! corners are exempt from their own conditions.
//!
//! The block graphs are symmetric under the vertical flip (swap rows), the
//! horizontal flip (mirror columns) and their composition, so only the
//! lexicographically smallest member of each orbit is stored.

use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{block_boundary_ids, block_center_ids, block_corner_ids, build_block_graph, BlockVariant};
use crate::labeling::Label;
use crate::solver::{SolveResult, SolveSpec, StripDp, Topology};

/// Boundary labels in the order `<l_t, l_ti, l_b, l_bi, r_ti, r_t, r_bi, r_b>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Constellation(pub [Label; 8]);

/// Position maps of the non-trivial symmetries: image slot `i` takes the
/// label of slot `perm[i]`.
pub const VERTICAL_FLIP: [usize; 8] = [2, 3, 0, 1, 6, 7, 4, 5];
pub const HORIZONTAL_FLIP: [usize; 8] = [5, 4, 7, 6, 1, 0, 3, 2];
pub const POINT_REFLECTION: [usize; 8] = [7, 6, 5, 4, 3, 2, 1, 0];

/// Number of constellations before symmetry reduction.
pub const RAW_CONSTELLATIONS: usize = 65536;

impl Constellation {
    pub fn from_values(values: [i32; 8]) -> Result<Self> {
        let mut d = [Label::MinusOne; 8];
        for (slot, v) in d.iter_mut().zip(values) {
            *slot = Label::from_value(v).ok_or_else(|| Error::Parameter(format!("label {v} not in {{-1,1,2,3}}")))?;
        }
        Ok(Self(d))
    }

    /// The `index`-th constellation in lexicographic order, `index < 4^8`.
    pub fn from_index(index: usize) -> Self {
        let mut d = [Label::MinusOne; 8];
        for (i, slot) in d.iter_mut().enumerate() {
            *slot = Label::ALL[(index >> (2 * (7 - i))) & 3];
        }
        Self(d)
    }

    /// Boundary written as two rows: top `(l_t, l_ti, r_ti, r_t)` and bottom
    /// `(l_b, l_bi, r_bi, r_b)`.
    pub fn from_rows(top: [i32; 4], bottom: [i32; 4]) -> Result<Self> {
        Self::from_values([top[0], top[1], bottom[0], bottom[1], top[2], top[3], bottom[2], bottom[3]])
    }

    pub fn values(&self) -> [i32; 8] {
        self.0.map(Label::value)
    }

    pub fn permuted(&self, perm: &[usize; 8]) -> Self {
        Self(std::array::from_fn(|i| self.0[perm[i]]))
    }

    /// The orbit under identity, vertical flip, horizontal flip and point
    /// reflection.
    pub fn orbit(&self) -> [Self; 4] {
        [*self, self.permuted(&VERTICAL_FLIP), self.permuted(&HORIZONTAL_FLIP), self.permuted(&POINT_REFLECTION)]
    }

    pub fn canonical(&self) -> Self {
        self.orbit().into_iter().min().expect("orbit is non-empty")
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }

    /// At most two -1 labels on each side.
    pub fn passes_side_filter(&self) -> bool {
        let minus = |side: &[Label]| side.iter().filter(|&&l| l == Label::MinusOne).count();
        minus(&self.0[..4]) <= 2 && minus(&self.0[4..]) <= 2
    }

    fn fixed_for(&self, variant: BlockVariant) -> Vec<Option<Label>> {
        let w = variant.width();
        let mut fixed = vec![None; 2 * w];
        for (&v, &l) in block_boundary_ids(variant).iter().zip(&self.0) {
            fixed[v] = Some(l);
        }
        fixed
    }
}

impl fmt::Display for Constellation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

impl FromStr for Constellation {
    type Err = Error;

    /// Accepts eight comma-separated labels, optionally inside `<...>`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('<').trim_end_matches('>');
        let labels: Vec<Label> = inner.split(',').map(str::parse).collect::<Result<_>>()?;
        let d: [Label; 8] = labels
            .try_into()
            .map_err(|v: Vec<Label>| Error::Parameter(format!("a constellation has 8 labels, got {}", v.len())))?;
        Ok(Self(d))
    }
}

/// Canonical representatives of all orbits, before the side filter, sorted.
pub fn canonical_constellations() -> Vec<Constellation> {
    (0..RAW_CONSTELLATIONS).map(Constellation::from_index).filter(Constellation::is_canonical).collect()
}

/// Canonical representatives that pass the side filter, sorted.
pub fn enumerate_constellations() -> Vec<Constellation> {
    canonical_constellations().into_iter().filter(Constellation::passes_side_filter).collect()
}

/// Strip solvers for both block graphs, prepared once and shared across
/// constellations.
#[derive(Clone, Debug)]
pub struct BlockSolver {
    full: StripDp,
    reduced: StripDp,
}

impl BlockSolver {
    pub fn new() -> Self {
        let prepare = |variant: BlockVariant| {
            let g = build_block_graph(variant);
            let n = g.n();
            let mut exempt = vec![false; n];
            for v in block_corner_ids(variant) {
                exempt[v] = true;
            }
            let mut objective = vec![false; n];
            for v in block_center_ids(variant) {
                objective[v] = true;
            }
            StripDp::new(&g, Topology::Open, 1, &exempt, &objective).expect("block graphs are open ladders")
        };
        Self { full: prepare(BlockVariant::Full), reduced: prepare(BlockVariant::Reduced) }
    }

    fn dp(&self, variant: BlockVariant) -> &StripDp {
        match variant {
            BlockVariant::Full => &self.full,
            BlockVariant::Reduced => &self.reduced,
        }
    }

    /// Minimum center weight with the boundary fixed to `c`, or `None` when
    /// no labeling of the center works.
    pub fn solve(&self, c: &Constellation, variant: BlockVariant) -> Option<i32> {
        self.dp(variant).min_weight(&c.fixed_for(variant))
    }

    /// Like [`BlockSolver::solve`] but also returns the lexicographically
    /// smallest optimal labeling of the whole block graph.
    pub fn solve_with_witness(&self, c: &Constellation, variant: BlockVariant) -> SolveResult {
        self.dp(variant).solve(&c.fixed_for(variant))
    }

    pub fn record(&self, c: Constellation) -> BlockRecord {
        BlockRecord {
            d: c,
            minweight_c: self.solve(&c, BlockVariant::Full),
            minweight_cprime: self.solve(&c, BlockVariant::Reduced),
        }
    }
}

impl Default for BlockSolver {
    fn default() -> Self {
        Self::new()
    }
}

/// The block problem as a general [`SolveSpec`], for cross-checking the
/// strip solver against other engines.
pub fn block_spec<'g>(graph: &'g crate::graph::Graph, c: &Constellation, variant: BlockVariant) -> SolveSpec<'g> {
    let fixed: Vec<(usize, Label)> = block_boundary_ids(variant).into_iter().zip(c.0).collect();
    SolveSpec::new(graph)
        .with_fixed(&fixed)
        .and_then(|s| s.with_exempt(&block_corner_ids(variant)))
        .and_then(|s| s.with_objective(&block_center_ids(variant)))
        .expect("block ids are in range")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRecord {
    pub d: Constellation,
    pub minweight_c: Option<i32>,
    pub minweight_cprime: Option<i32>,
}

impl BlockRecord {
    pub fn delta(&self) -> Option<i32> {
        Some(self.minweight_c? - self.minweight_cprime?)
    }

    /// Both blocks are feasible and shrinking `G` to `G'` saves at least 4.
    pub fn is_quality_transferring(&self) -> bool {
        self.delta().is_some_and(|d| d >= 4)
    }
}

impl Serialize for Constellation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.values().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Constellation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let values = <[i32; 8]>::deserialize(d)?;
        Constellation::from_values(values).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atlas {
    records: Vec<BlockRecord>,
}

impl Atlas {
    /// Solves every enumerated constellation on the current rayon pool.
    pub fn build() -> Self {
        let solver = BlockSolver::new();
        let records = enumerate_constellations().into_par_iter().map(|c| solver.record(c)).collect();
        Self { records }
    }

    /// Like [`Atlas::build`] with at most `jobs` worker threads.
    pub fn build_with_jobs(jobs: usize) -> Result<Self> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Parameter(format!("cannot start {jobs} workers: {e}")))?;
        Ok(pool.install(Self::build))
    }

    /// Records must be sorted by constellation and canonical.
    pub fn from_records(records: Vec<BlockRecord>) -> Result<Self> {
        if let Some(bad) = records.iter().find(|r| !r.d.is_canonical()) {
            return Err(Error::Parameter(format!("constellation {} is not canonical", bad.d)));
        }
        if records.windows(2).any(|w| w[0].d >= w[1].d) {
            return Err(Error::Parameter("atlas rows must be strictly sorted by constellation".into()));
        }
        Ok(Self { records })
    }

    pub fn records(&self) -> &[BlockRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// The record of the orbit of `c`, if that orbit survived the filter.
    pub fn lookup(&self, c: &Constellation) -> Option<&BlockRecord> {
        let key = c.canonical();
        self.records.binary_search_by(|r| r.d.cmp(&key)).ok().map(|i| &self.records[i])
    }

    pub fn quality_transferring(&self, c: &Constellation) -> Result<bool> {
        self.lookup(c)
            .map(BlockRecord::is_quality_transferring)
            .ok_or_else(|| Error::Parameter(format!("constellation {c} is not in the atlas")))
    }

    pub fn query<'a>(&'a self, pred: impl Fn(&BlockRecord) -> bool + 'a) -> impl Iterator<Item = &'a BlockRecord> + 'a {
        self.records.iter().filter(move |r| pred(r))
    }

    /// Smallest feasible center weight of `G`.
    pub fn min_weight_c(&self) -> Option<i32> {
        self.records.iter().filter_map(|r| r.minweight_c).min()
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(["d0", "d1", "d2", "d3", "d4", "d5", "d6", "d7", "minweight_C", "minweight_Cprime", "delta"])?;
        for r in &self.records {
            let mut row: Vec<String> = r.d.values().iter().map(i32::to_string).collect();
            row.push(weight_cell(r.minweight_c));
            row.push(weight_cell(r.minweight_cprime));
            row.push(r.delta().map_or_else(|| "na".to_string(), |d| d.to_string()));
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::Reader::from_reader(reader);
        let mut records = Vec::new();
        for (i, row) in rdr.records().enumerate() {
            let row = row?;
            let line = i + 2;
            let bad = |msg: String| Error::Parse { line, msg };
            if row.len() != 11 {
                return Err(bad(format!("expected 11 columns, got {}", row.len())));
            }
            let mut values = [0i32; 8];
            for (slot, cell) in values.iter_mut().zip(row.iter()) {
                *slot = cell.trim().parse().map_err(|_| bad(format!("bad label {cell:?}")))?;
            }
            let d = Constellation::from_values(values).map_err(|e| bad(e.to_string()))?;
            let minweight_c = parse_weight(&row[8]).map_err(bad)?;
            let minweight_cprime = parse_weight(&row[9]).map_err(bad)?;
            let record = BlockRecord { d, minweight_c, minweight_cprime };
            let delta = match row[10].trim() {
                "na" => None,
                s => Some(s.parse::<i32>().map_err(|_| bad(format!("bad delta {s:?}")))?),
            };
            if delta != record.delta() {
                return Err(bad(format!("delta {:?} disagrees with the weights", &row[10])));
            }
            records.push(record);
        }
        Self::from_records(records)
    }
}

fn weight_cell(w: Option<i32>) -> String {
    w.map_or_else(|| "inf".to_string(), |w| w.to_string())
}

fn parse_weight(cell: &str) -> std::result::Result<Option<i32>, String> {
    match cell.trim() {
        "inf" => Ok(None),
        s => s.parse().map(Some).map_err(|_| format!("bad weight {s:?}")),
    }
}

/// A constellation with some slots left open (`None`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pattern(pub [Option<Label>; 8]);

impl Pattern {
    pub fn matches(&self, c: &Constellation) -> bool {
        self.0.iter().zip(&c.0).all(|(p, l)| p.is_none_or(|p| p == *l))
    }

    /// Does any member of the orbit of `c` match?
    pub fn matches_orbit(&self, c: &Constellation) -> bool {
        c.orbit().iter().any(|m| self.matches(m))
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Eight comma-separated labels or `*`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('<').trim_end_matches('>');
        let slots: Vec<Option<Label>> = inner
            .split(',')
            .map(|t| if t.trim() == "*" { Ok(None) } else { t.parse().map(Some) })
            .collect::<Result<_>>()?;
        let p: [Option<Label>; 8] = slots
            .try_into()
            .map_err(|v: Vec<Option<Label>>| Error::Parameter(format!("a pattern has 8 slots, got {}", v.len())))?;
        Ok(Self(p))
    }
}

/// Right boundary `r_ti = r_bi = 3`, `r_t = r_b = -1`, left side free.
pub fn right_three_cap() -> Pattern {
    let mut p = [None; 8];
    p[4] = Some(Label::Three);
    p[5] = Some(Label::MinusOne);
    p[6] = Some(Label::Three);
    p[7] = Some(Label::MinusOne);
    Pattern(p)
}

/// Boundary matrices `[top; bottom]` (top = `l_t, l_ti, r_ti, r_t`) with the
/// lower bound each one forces on the weight of `C`.
pub const CENTER_BOUND_CASES: [([i32; 4], [i32; 4], i32); 6] = [
    ([-1, -1, -1, 1], [1, 3, -1, 2], 10),
    ([-1, -1, -1, 1], [2, 3, -1, 2], 10),
    ([-1, -1, -1, 1], [3, 3, -1, 2], 10),
    ([-1, 1, -1, 1], [2, -1, -1, 2], 13),
    ([-1, 1, -1, 2], [2, -1, -1, 1], 13),
    ([1, -1, -1, 1], [1, 3, -1, 2], 10),
];

/// Boundary families with both left corners at -1, the inner left cells and
/// the right corners free, and the inner right pair `(r_ti, r_bi)` drawn from
/// a list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedFamily {
    pub name: &'static str,
    pub right_inner: Vec<(Label, Label)>,
}

impl ShiftedFamily {
    /// Inner right pair is `{1, 3}` in either order.
    pub fn one_three() -> Self {
        Self {
            name: "inner right pair {1,3}",
            right_inner: vec![(Label::One, Label::Three), (Label::Three, Label::One)],
        }
    }

    /// Inner right pair sums to at least 3.
    pub fn sum_at_least_three() -> Self {
        let mut right_inner = Vec::new();
        for a in Label::ALL {
            for b in Label::ALL {
                if a.value() + b.value() >= 3 {
                    right_inner.push((a, b));
                }
            }
        }
        Self { name: "inner right pair sums to >= 3", right_inner }
    }

    pub fn completions(&self) -> Vec<Constellation> {
        let mut out = Vec::new();
        for &(rti, rbi) in &self.right_inner {
            for free in 0..256usize {
                let pick = |i: usize| Label::ALL[(free >> (2 * i)) & 3];
                out.push(Constellation([
                    Label::MinusOne,
                    pick(0),
                    Label::MinusOne,
                    pick(1),
                    rti,
                    pick(2),
                    rbi,
                    pick(3),
                ]));
            }
        }
        out
    }

    /// Checks every completion against the atlas.
    pub fn survey(&self, atlas: &Atlas) -> FamilySurvey {
        let mut s =
            FamilySurvey { completions: 0, filtered_out: 0, infeasible: 0, realizable: 0, transferring: 0, orbits: 0 };
        let mut seen = std::collections::BTreeSet::new();
        for c in self.completions() {
            s.completions += 1;
            let Some(r) = atlas.lookup(&c) else {
                s.filtered_out += 1;
                continue;
            };
            if r.minweight_c.is_none() || r.minweight_cprime.is_none() {
                s.infeasible += 1;
                continue;
            }
            s.realizable += 1;
            seen.insert(r.d);
            if r.is_quality_transferring() {
                s.transferring += 1;
            }
        }
        s.orbits = seen.len();
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySurvey {
    pub completions: usize,
    /// More than two -1 labels on a side.
    pub filtered_out: usize,
    /// One of the two blocks admits no labeling.
    pub infeasible: usize,
    pub realizable: usize,
    pub transferring: usize,
    /// Distinct atlas records among the realizable completions.
    pub orbits: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::is_valid;
    use crate::solver::{solve_bnb, solve_strip_dp};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn group_elements() {
        let c = Constellation::from_values([-1, 1, 2, 3, 3, 2, 1, -1]).unwrap();
        assert_eq!(c.permuted(&VERTICAL_FLIP).permuted(&VERTICAL_FLIP), c);
        assert_eq!(c.permuted(&HORIZONTAL_FLIP).permuted(&HORIZONTAL_FLIP), c);
        assert_eq!(c.permuted(&VERTICAL_FLIP).permuted(&HORIZONTAL_FLIP), c.permuted(&POINT_REFLECTION));
        let all_two = Constellation([Label::Two; 8]);
        assert_eq!(all_two.canonical(), all_two);
    }

    #[test]
    fn flips_match_graph_automorphisms() {
        // relabel vertex ids by the geometric flip and compare boundary slots
        let w = BLOCK_WIDTH;
        let ids = block_boundary_ids(BlockVariant::Full);
        let vflip = |v: usize| if v < w { v + w } else { v - w };
        let hflip = |v: usize| (v / w) * w + (w - 1 - v % w);
        for (perm, map) in [(VERTICAL_FLIP, &vflip as &dyn Fn(usize) -> usize), (HORIZONTAL_FLIP, &hflip)] {
            for i in 0..8 {
                assert_eq!(ids[perm[i]], map(ids[i]));
            }
        }
    }

    const BLOCK_WIDTH: usize = crate::graph::BLOCK_WIDTH_FULL;

    #[test]
    fn canonical_is_idempotent_and_orbit_constant() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let c = Constellation::from_index(rng.gen_range(0..RAW_CONSTELLATIONS));
            let k = c.canonical();
            assert_eq!(k.canonical(), k);
            for m in c.orbit() {
                assert_eq!(m.canonical(), k);
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(canonical_constellations().len(), 16576);
        let list = enumerate_constellations();
        assert_eq!(list.len(), 14940);
        assert!(list.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn parse_and_display() {
        let c: Constellation = "<-1,1,2,3,3,2,1,-1>".parse().unwrap();
        assert_eq!(c.to_string(), "<-1,1,2,3,3,2,1,-1>");
        assert!("1,2,3".parse::<Constellation>().is_err());
        let p: Pattern = "*,*,*,*,3,-1,3,-1".parse().unwrap();
        assert_eq!(p, right_three_cap());
    }

    #[test]
    fn block_solver_agrees_with_bnb_and_center_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let solver = BlockSolver::new();
        let full = build_block_graph(BlockVariant::Full);
        let reduced = build_block_graph(BlockVariant::Reduced);
        let list = enumerate_constellations();
        for _ in 0..50 {
            let c = list[rng.gen_range(0..list.len())];
            let spec = block_spec(&reduced, &c, BlockVariant::Reduced);
            assert_eq!(solver.solve(&c, BlockVariant::Reduced), enumerate_center(&spec), "{c}");
            let spec = block_spec(&full, &c, BlockVariant::Full);
            assert_eq!(solver.solve(&c, BlockVariant::Full), solve_bnb(&spec).unwrap().min_weight(), "{c}");
        }
    }

    /// Plain enumeration of all labelings of the free vertices.
    fn enumerate_center(spec: &SolveSpec) -> Option<i32> {
        let free: Vec<usize> = (0..spec.graph.n()).filter(|&v| spec.fixed[v].is_none()).collect();
        let mut labels: Vec<Label> = spec.fixed.iter().map(|f| f.unwrap_or(Label::MinusOne)).collect();
        let mut best = None;
        for code in 0..1usize << (2 * free.len()) {
            for (i, &v) in free.iter().enumerate() {
                labels[v] = Label::ALL[(code >> (2 * i)) & 3];
            }
            if is_valid(spec.graph, &labels, spec.k, &spec.exempt) {
                let w: i32 = spec.objective_list().iter().map(|&v| labels[v].value()).sum();
                best = Some(best.map_or(w, |b: i32| b.min(w)));
            }
        }
        best
    }

    #[test]
    fn solve_is_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let solver = BlockSolver::new();
        let mut tested = 0;
        while tested < 100 {
            let c = Constellation::from_index(rng.gen_range(0..RAW_CONSTELLATIONS));
            if c.is_canonical() {
                continue;
            }
            tested += 1;
            let k = c.canonical();
            for v in [BlockVariant::Full, BlockVariant::Reduced] {
                assert_eq!(solver.solve(&c, v), solver.solve(&k, v), "{c}");
            }
        }
    }

    #[test]
    fn all_two_boundary() {
        let solver = BlockSolver::new();
        let c = Constellation([Label::Two; 8]);
        let g = build_block_graph(BlockVariant::Reduced);
        let spec = block_spec(&g, &c, BlockVariant::Reduced);
        assert_eq!(solver.solve(&c, BlockVariant::Reduced), enumerate_center(&spec));
        let g = build_block_graph(BlockVariant::Full);
        let spec = block_spec(&g, &c, BlockVariant::Full);
        let dp = solve_strip_dp(&spec, Topology::Open).unwrap();
        assert_eq!(solver.solve(&c, BlockVariant::Full), dp.min_weight());
        assert_eq!(solver.solve_with_witness(&c, BlockVariant::Full), dp);
    }

    #[test]
    fn families() {
        assert_eq!(ShiftedFamily::one_three().completions().len(), 512);
        assert_eq!(ShiftedFamily::sum_at_least_three().right_inner.len(), 8);
        assert!(ShiftedFamily::one_three().completions().iter().all(|c| c.0[0] == Label::MinusOne));
    }

    #[test]
    fn csv_round_trip_and_errors() {
        let solver = BlockSolver::new();
        let list = enumerate_constellations();
        let records: Vec<BlockRecord> = list.iter().take(300).map(|&c| solver.record(c)).collect();
        let atlas = Atlas::from_records(records).unwrap();
        let mut buf = Vec::new();
        atlas.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("d0,d1,d2,d3,d4,d5,d6,d7,minweight_C,minweight_Cprime,delta\n"));
        assert_eq!(text.lines().count(), 301);
        assert_eq!(Atlas::read_csv(buf.as_slice()).unwrap(), atlas);
        let bad_delta =
            "d0,d1,d2,d3,d4,d5,d6,d7,minweight_C,minweight_Cprime,delta\n-1,-1,-1,-1,-1,-1,-1,-1,inf,inf,3\n";
        assert!(Atlas::read_csv(bad_delta.as_bytes()).is_err());
        let bad_label =
            "d0,d1,d2,d3,d4,d5,d6,d7,minweight_C,minweight_Cprime,delta\n0,-1,-1,-1,-1,-1,-1,-1,inf,inf,na\n";
        assert!(matches!(Atlas::read_csv(bad_label.as_bytes()), Err(Error::Parse { line: 2, .. })));
    }
}
