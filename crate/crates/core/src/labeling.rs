//! Labelings `f: V -> {-1, 1, 2, 3}` and the SDRDF / SDkRDF conditions.
//!
//! A labeling is an SDkRDF when every non-exempt vertex `u` satisfies
//!
//! * **(1a)** if `f(u) = -1`: some neighbor is labeled 3, or two distinct
//!   neighbors are labeled 2;
//! * **(1b)** if `f(u) = 1`: some neighbor is labeled 2 or 3;
//! * **(1c)** the closed-neighborhood sum `f(N[u])` is at least `k`.
//!
//! Exempt vertices only lose their own checks. They still contribute to the
//! closed sums of their neighbors and can defend them.

use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    MinusOne,
    One,
    Two,
    Three,
}

impl Label {
    /// All labels in ascending order `-1 < 1 < 2 < 3`.
    pub const ALL: [Label; 4] = [Label::MinusOne, Label::One, Label::Two, Label::Three];

    pub fn value(self) -> i32 {
        match self {
            Label::MinusOne => -1,
            Label::One => 1,
            Label::Two => 2,
            Label::Three => 3,
        }
    }

    pub fn from_value(v: i32) -> Option<Label> {
        match v {
            -1 => Some(Label::MinusOne),
            1 => Some(Label::One),
            2 => Some(Label::Two),
            3 => Some(Label::Three),
            _ => None,
        }
    }

    /// Position in [`Label::ALL`].
    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: i32 = s.trim().parse().map_err(|_| Error::Parameter(format!("not a label: {s:?}")))?;
        Label::from_value(v).ok_or_else(|| Error::Parameter(format!("label {v} not in {{-1,1,2,3}}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Labeling(Vec<Label>);

impl Labeling {
    pub fn new(labels: Vec<Label>) -> Self {
        Self(labels)
    }

    pub fn uniform(n: usize, label: Label) -> Self {
        Self(vec![label; n])
    }

    pub fn from_values(values: &[i32]) -> Result<Self> {
        values
            .iter()
            .map(|&v| Label::from_value(v).ok_or_else(|| Error::Parameter(format!("label {v} not in {{-1,1,2,3}}"))))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> Label {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, label: Label) {
        self.0[v] = label;
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn values(&self) -> Vec<i32> {
        self.0.iter().map(|l| l.value()).collect()
    }

    pub fn total_weight(&self) -> i32 {
        self.0.iter().map(|l| l.value()).sum()
    }

    /// Sum of labels over `subset`.
    pub fn weight(&self, subset: &[usize]) -> Result<i32> {
        subset
            .iter()
            .map(|&v| self.0.get(v).map(|l| l.value()).ok_or(Error::VertexOutOfRange { vertex: v, n: self.len() }))
            .sum()
    }

    /// Preimages `(V_-1, V_1, V_2, V_3)`.
    pub fn preimage_sets(&self) -> [Vec<usize>; 4] {
        let mut sets: [Vec<usize>; 4] = Default::default();
        for (v, l) in self.0.iter().enumerate() {
            sets[l.index()].push(v);
        }
        sets
    }

    /// CSV with header `vertex,label`, one row per vertex in id order.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(["vertex", "label"])?;
        for (v, l) in self.0.iter().enumerate() {
            w.write_record([v.to_string(), l.value().to_string()])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_csv<R: Read>(reader: R) -> Result<Self> {
        let mut r = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let headers = r.headers()?.clone();
        if headers.iter().collect::<Vec<_>>() != ["vertex", "label"] {
            return Err(Error::Parse { line: 1, msg: "expected header vertex,label".into() });
        }
        let mut labels = Vec::new();
        for (i, rec) in r.records().enumerate() {
            let rec = rec?;
            let line = i + 2;
            let bad = |msg: String| Error::Parse { line, msg };
            if rec.len() != 2 {
                return Err(bad("expected two columns".into()));
            }
            let v: usize = rec[0].parse().map_err(|_| bad(format!("bad vertex {:?}", &rec[0])))?;
            if v != labels.len() {
                return Err(bad(format!("vertex {v} out of order, expected {}", labels.len())));
            }
            labels.push(rec[1].parse::<Label>().map_err(|e| bad(e.to_string()))?);
        }
        Ok(Self(labels))
    }
}

impl From<Vec<Label>> for Labeling {
    fn from(v: Vec<Label>) -> Self {
        Self(v)
    }
}

/// Outcome of the three conditions at one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VertexCheck {
    /// (1a); vacuously true unless the vertex is labeled -1.
    pub minus_one_defended: bool,
    /// (1b); vacuously true unless the vertex is labeled 1.
    pub one_defended: bool,
    pub closed_sum: i32,
    /// (1c) with threshold `k`, or (1c') for the cubic check.
    pub closed_ok: bool,
}

impl VertexCheck {
    pub fn passes(&self) -> bool {
        self.minus_one_defended && self.one_defended && self.closed_ok
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Condition {
    MinusOneDefense,
    OneDefense,
    ClosedSum,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::MinusOneDefense => "(1a)",
            Condition::OneDefense => "(1b)",
            Condition::ClosedSum => "(1c)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<VertexCheck>,
    pub exempt: Vec<bool>,
    pub k: i32,
    pub valid: bool,
    pub weight: i32,
}

impl ValidationReport {
    /// Every failed condition at a non-exempt vertex, in vertex order.
    pub fn violations(&self) -> Vec<(usize, Condition)> {
        let mut out = Vec::new();
        for (v, c) in self.checks.iter().enumerate() {
            if self.exempt[v] {
                continue;
            }
            if !c.minus_one_defended {
                out.push((v, Condition::MinusOneDefense));
            }
            if !c.one_defended {
                out.push((v, Condition::OneDefense));
            }
            if !c.closed_ok {
                out.push((v, Condition::ClosedSum));
            }
        }
        out
    }
}

/// Neighbor census of one vertex under a labeling.
struct Census {
    threes: usize,
    twos: usize,
    non_negative: usize,
    closed_sum: i32,
}

fn census(g: &Graph, lab: &[Label], u: usize) -> Census {
    let mut c = Census { threes: 0, twos: 0, non_negative: 0, closed_sum: lab[u].value() };
    for &w in g.neighbors(u) {
        match lab[w] {
            Label::Three => c.threes += 1,
            Label::Two => c.twos += 1,
            _ => {}
        }
        if lab[w] != Label::MinusOne {
            c.non_negative += 1;
        }
        c.closed_sum += lab[w].value();
    }
    c
}

fn defenses(label: Label, c: &Census) -> (bool, bool) {
    let minus_one = label != Label::MinusOne || c.threes >= 1 || c.twos >= 2;
    let one = label != Label::One || c.threes + c.twos >= 1;
    (minus_one, one)
}

pub fn check_vertex(g: &Graph, lab: &[Label], u: usize, k: i32) -> VertexCheck {
    let c = census(g, lab, u);
    let (minus_one_defended, one_defended) = defenses(lab[u], &c);
    VertexCheck { minus_one_defended, one_defended, closed_sum: c.closed_sum, closed_ok: c.closed_sum >= k }
}

fn exempt_mask(n: usize, exempt: &[usize]) -> Result<Vec<bool>> {
    let mut mask = vec![false; n];
    for &v in exempt {
        *mask.get_mut(v).ok_or(Error::VertexOutOfRange { vertex: v, n })? = true;
    }
    Ok(mask)
}

fn check_length(g: &Graph, lab: &Labeling) -> Result<()> {
    if lab.len() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), got: lab.len() });
    }
    Ok(())
}

/// Checks (1a), (1b) and `f(N[u]) >= k` at every vertex outside `exempt`.
pub fn validate(g: &Graph, lab: &Labeling, k: i32, exempt: &[usize]) -> Result<ValidationReport> {
    check_length(g, lab)?;
    if k < 1 {
        return Err(Error::Parameter(format!("threshold k = {k} must be at least 1")));
    }
    let exempt = exempt_mask(g.n(), exempt)?;
    let checks: Vec<_> = (0..g.n()).map(|u| check_vertex(g, lab.labels(), u, k)).collect();
    let valid = checks.iter().zip(&exempt).all(|(c, &e)| e || c.passes());
    Ok(ValidationReport { checks, exempt, k, valid, weight: lab.total_weight() })
}

/// Fast boolean form of [`validate`] for enumeration loops.
pub fn is_valid(g: &Graph, lab: &[Label], k: i32, exempt: &[bool]) -> bool {
    (0..g.n()).all(|u| exempt[u] || check_vertex(g, lab, u, k).passes())
}

/// Arithmetic-free form for cubic graphs: (1c) is replaced by (1c'),
/// "at least two members of `N[v]` are not labeled -1".
pub fn validate_cubic_equiv(g: &Graph, lab: &Labeling) -> Result<ValidationReport> {
    check_length(g, lab)?;
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    let labels = lab.labels();
    let checks: Vec<_> = (0..g.n())
        .map(|u| {
            let c = census(g, labels, u);
            let (minus_one_defended, one_defended) = defenses(labels[u], &c);
            let closed_non_negative = c.non_negative + usize::from(labels[u] != Label::MinusOne);
            VertexCheck {
                minus_one_defended,
                one_defended,
                closed_sum: c.closed_sum,
                closed_ok: closed_non_negative >= 2,
            }
        })
        .collect();
    let valid = checks.iter().all(VertexCheck::passes);
    Ok(ValidationReport { checks, exempt: vec![false; g.n()], k: 1, valid, weight: lab.total_weight() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_grid, build_petersen, complete_graph};
    use proptest::prelude::*;

    #[test]
    fn weights() {
        let lab = Labeling::uniform(8, Label::Two);
        assert_eq!(lab.weight(&(0..8).collect::<Vec<_>>()).unwrap(), 16);
        assert_eq!(lab.weight(&[]).unwrap(), 0);
        assert!(lab.weight(&[8]).is_err());
    }

    #[test]
    fn all_two_is_valid() {
        for g in [build_grid(2, 5).unwrap(), build_petersen(7, 2).unwrap(), complete_graph(4)] {
            let lab = Labeling::uniform(g.n(), Label::Two);
            assert!(validate(&g, &lab, 1, &[]).unwrap().valid);
        }
        let g = build_petersen(5, 2).unwrap();
        assert!(validate_cubic_equiv(&g, &Labeling::uniform(10, Label::Two)).unwrap().valid);
    }

    #[test]
    fn all_minus_one_on_k4() {
        let g = complete_graph(4);
        let r = validate(&g, &Labeling::uniform(4, Label::MinusOne), 1, &[]).unwrap();
        assert!(!r.valid);
        let v = r.violations();
        assert_eq!(v.len(), 8);
        for u in 0..4 {
            assert!(v.contains(&(u, Condition::MinusOneDefense)));
            assert!(v.contains(&(u, Condition::ClosedSum)));
        }
    }

    #[test]
    fn three_minus_ones_in_closed_neighborhood() {
        // K4 labels: -1,-1,-1,3 -> vertex 3 sees three -1 in N[3]
        let g = complete_graph(4);
        let lab = Labeling::from_values(&[-1, -1, -1, 3]).unwrap();
        assert!(!validate_cubic_equiv(&g, &lab).unwrap().valid);
        assert!(!validate(&g, &lab, 1, &[]).unwrap().valid);
    }

    #[test]
    fn exemption_skips_own_checks_only() {
        // path 0-1-2 with labels -1, 2, 2: vertex 0 is defended by one 2 only
        let g = crate::graph::parse_edge_list("3 2\n0 1\n1 2").unwrap();
        let lab = Labeling::from_values(&[-1, 2, 2]).unwrap();
        assert!(!validate(&g, &lab, 1, &[]).unwrap().valid);
        assert!(validate(&g, &lab, 1, &[0]).unwrap().valid);
        // the exempt -1 still drags vertex 1's closed sum down
        let lab = Labeling::from_values(&[-1, 1, -1]).unwrap();
        let r = validate(&g, &lab, 1, &[0, 2]).unwrap();
        assert!(!r.valid);
        assert_eq!(r.checks[1].closed_sum, -1);
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = complete_graph(4);
        assert!(matches!(validate(&g, &Labeling::uniform(3, Label::Two), 1, &[]), Err(Error::LengthMismatch { .. })));
        assert!(validate(&g, &Labeling::uniform(4, Label::Two), 0, &[]).is_err());
        assert!(validate_cubic_equiv(&build_grid(2, 3).unwrap(), &Labeling::uniform(6, Label::Two)).is_err());
        assert!(Labeling::from_values(&[0]).is_err());
        assert!("0".parse::<Label>().is_err());
    }

    #[test]
    fn preimages() {
        let lab = Labeling::uniform(5, Label::Three);
        let sets = lab.preimage_sets();
        assert_eq!(sets[3], vec![0, 1, 2, 3, 4]);
        assert!(sets[..3].iter().all(Vec::is_empty));
    }

    #[test]
    fn csv_round_trip_and_errors() {
        let lab = Labeling::from_values(&[-1, 1, 2, 3, 2]).unwrap();
        let mut buf = Vec::new();
        lab.write_csv(&mut buf).unwrap();
        assert!(String::from_utf8(buf.clone()).unwrap().starts_with("vertex,label\n0,-1\n"));
        assert_eq!(Labeling::read_csv(&buf[..]).unwrap(), lab);
        assert!(Labeling::read_csv("vertex,label\n0,0\n".as_bytes()).is_err());
        assert!(Labeling::read_csv("vertex,label\n1,2\n".as_bytes()).is_err());
        assert!(Labeling::read_csv("v,l\n0,2\n".as_bytes()).is_err());
    }

    fn arb_cubic() -> impl Strategy<Value = Graph> {
        prop_oneof![
            Just(complete_graph(4)),
            (3usize..=7)
                .prop_flat_map(|m| (Just(m), 1..m))
                .prop_filter("simple", |(m, k)| 2 * k != *m)
                .prop_map(|(m, k)| build_petersen(m, k).unwrap()),
        ]
    }

    fn arb_labeling(n: usize) -> impl Strategy<Value = Labeling> {
        prop::collection::vec(prop::sample::select(Label::ALL.to_vec()), n).prop_map(Labeling::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn cubic_equivalence(
            (g, lab) in arb_cubic().prop_flat_map(|g| { let n = g.n(); (Just(g), arb_labeling(n)) })
        ) {
            let a = validate(&g, &lab, 1, &[]).unwrap().valid;
            let b = validate_cubic_equiv(&g, &lab).unwrap().valid;
            prop_assert_eq!(a, b);
        }

        #[test]
        fn exemption_is_monotone(
            lab in arb_labeling(10),
            ex1 in prop::collection::vec(0usize..10, 0..4),
            ex2 in prop::collection::vec(0usize..10, 0..4),
        ) {
            let g = build_grid(2, 5).unwrap();
            let small = validate(&g, &lab, 1, &ex1).unwrap().valid;
            let mut bigger = ex1.clone();
            bigger.extend(ex2);
            if small {
                prop_assert!(validate(&g, &lab, 1, &bigger).unwrap().valid);
            }
        }

        #[test]
        fn weight_from_preimages(lab in arb_labeling(12)) {
            let s = lab.preimage_sets();
            let by_sets = 3 * s[3].len() as i32 + 2 * s[2].len() as i32 + s[1].len() as i32 - s[0].len() as i32;
            prop_assert_eq!(lab.total_weight(), by_sets);
            prop_assert_eq!(s.iter().map(Vec::len).sum::<usize>(), 12);
        }
    }
}
