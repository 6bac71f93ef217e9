//! Closed-form bounds, the quarter-unit discharging certificate, and the
//! upper-bound construction from 2/3-total dominating sets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{validate, Label, Labeling};

/// Lower bound on the signed double Roman domination number of any cubic
/// graph of order `n`: `n/2`, raised by one when `n = 2 mod 4`.
pub fn lower_bound_cubic(n: usize) -> Result<i64> {
    if n % 2 == 1 || n < 4 {
        return Err(Error::Parameter(format!("cubic graphs have even order >= 4, got {n}")));
    }
    let half = (n / 2) as i64;
    Ok(if n.is_multiple_of(4) { half } else { half + 1 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: i32,
    /// `n/2` or `n/2 + 1` by `n mod 4`. It bounds every `k` since the
    /// optimum is non-decreasing in `k`.
    pub parity_lower: Option<i64>,
    /// `ceil(k n / 4)`.
    pub degree_lower: i64,
    /// `floor(13 n / 8)`.
    pub general_upper: i64,
    /// Largest integer strictly below `5n/4`; only for `k <= 2`.
    pub alpha_upper: Option<i64>,
}

pub fn bound_report(g: &Graph, k: i32) -> Result<BoundReport> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    if k < 1 {
        return Err(Error::Parameter(format!("threshold k = {k} must be at least 1")));
    }
    let n = g.n() as i64;
    Ok(BoundReport {
        n: g.n(),
        k,
        parity_lower: lower_bound_cubic(g.n()).ok(),
        degree_lower: (k as i64 * n + 3).div_euclid(4),
        general_upper: (13 * n).div_euclid(8),
        alpha_upper: (k <= 2).then(|| (5 * n + 3).div_euclid(4) - 1),
    })
}

/// Final charges of the discharging argument, in quarter units.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChargeVector {
    pub quarter_charges: Vec<i64>,
    /// Total charge after the initial assignment and after each of the three
    /// sending rules.
    pub totals_after_rule: [i64; 4],
}

impl ChargeVector {
    pub fn total(&self) -> i64 {
        self.quarter_charges.iter().sum()
    }

    pub fn min(&self) -> i64 {
        self.quarter_charges.iter().copied().min().unwrap_or(0)
    }
}

/// Every vertex starts with `4 f(v)`; then, rule by rule, each vertex labeled
/// 1, 2, 3 sends 1, 3, 5 quarters to each of its (-1)-neighbors.
pub fn discharge(g: &Graph, lab: &Labeling) -> Result<ChargeVector> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    if !validate(g, lab, 1, &[])?.valid {
        return Err(Error::InvalidLabeling);
    }
    let mut charge: Vec<i64> = lab.labels().iter().map(|l| 4 * l.value() as i64).collect();
    let mut totals = [0; 4];
    totals[0] = charge.iter().sum();
    for (rule, (sender, amount)) in [(Label::One, 1), (Label::Two, 3), (Label::Three, 5)].into_iter().enumerate() {
        for v in 0..g.n() {
            if lab.get(v) != sender {
                continue;
            }
            for &w in g.neighbors(v) {
                if lab.get(w) == Label::MinusOne {
                    charge[v] -= amount;
                    charge[w] += amount;
                }
            }
        }
        totals[rule + 1] = charge.iter().sum();
        assert_eq!(totals[rule + 1], totals[0], "charge must be conserved");
    }
    Ok(ChargeVector { quarter_charges: charge, totals_after_rule: totals })
}

/// Every final charge is at least 1/2 and the total equals the weight.
pub fn verify_discharge_certificate(g: &Graph, lab: &Labeling) -> Result<bool> {
    let cv = discharge(g, lab)?;
    Ok(cv.min() >= 2 && cv.total() == 4 * lab.total_weight() as i64)
}

/// Largest graph [`alpha_total_dom_min`] accepts.
pub const ALPHA_SET_LIMIT: usize = 26;

fn neighbor_masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect()
}

fn alpha_ok(masks: &[u64], set: u64, alpha_num: u32, alpha_den: u32) -> bool {
    masks.iter().enumerate().all(|(v, &nb)| {
        let inside = (set & nb).count_ones();
        if set >> v & 1 == 1 {
            inside >= 1
        } else {
            inside * alpha_den >= alpha_num * nb.count_ones()
        }
    })
}

/// Is `set` total dominating with every outside vertex having at least an
/// `alpha_num / alpha_den` fraction of its neighbors inside?
pub fn is_alpha_total_dominating(g: &Graph, set: &[usize], alpha_num: u32, alpha_den: u32) -> Result<bool> {
    if g.n() > 64 {
        return Err(Error::TooLarge { n: g.n(), limit: 64 });
    }
    let mut mask = 0u64;
    for &v in set {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        mask |= 1 << v;
    }
    Ok(alpha_ok(&neighbor_masks(g), mask, alpha_num, alpha_den))
}

/// A minimum-cardinality alpha-total dominating set; ties go to the
/// first subset in colexicographic order.
pub fn alpha_total_dom_min(g: &Graph, alpha_num: u32, alpha_den: u32) -> Result<Vec<usize>> {
    let n = g.n();
    if n > ALPHA_SET_LIMIT {
        return Err(Error::TooLarge { n, limit: ALPHA_SET_LIMIT });
    }
    if alpha_den == 0 || alpha_num > alpha_den {
        return Err(Error::Parameter(format!("alpha = {alpha_num}/{alpha_den} must lie in [0, 1]")));
    }
    let masks = neighbor_masks(g);
    for size in 1..=n {
        // Gosper's hack: all n-bit words with `size` ones, in increasing order
        let mut set: u64 = (1 << size) - 1;
        while set < 1 << n {
            if alpha_ok(&masks, set, alpha_num, alpha_den) {
                return Ok((0..n).filter(|&v| set >> v & 1 == 1).collect());
            }
            let low = set & set.wrapping_neg();
            let ripple = set + low;
            set = (((ripple ^ set) >> 2) / low) | ripple;
        }
    }
    Err(Error::NotAlphaTotalDominating)
}

/// Labels `set` with 2 and everything else with -1.
pub fn sd2rdf_from_set(g: &Graph, set: &[usize]) -> Result<Labeling> {
    if !is_alpha_total_dominating(g, set, 2, 3)? {
        return Err(Error::NotAlphaTotalDominating);
    }
    let mut lab = Labeling::uniform(g.n(), Label::MinusOne);
    for &v in set {
        lab.set(v, Label::Two);
    }
    Ok(lab)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::petersen_even_odd;
    use crate::graph::{build_grid, build_petersen, complete_graph};

    #[test]
    fn cubic_lower_bound() {
        assert_eq!(lower_bound_cubic(8).unwrap(), 4);
        assert_eq!(lower_bound_cubic(10).unwrap(), 6);
        assert_eq!(lower_bound_cubic(16).unwrap(), 8);
        assert!(lower_bound_cubic(9).is_err());
    }

    #[test]
    fn reports() {
        let r = bound_report(&build_petersen(8, 3).unwrap(), 1).unwrap();
        assert_eq!(r.parity_lower, Some(8));
        assert_eq!(r.general_upper, 26);
        assert_eq!(r.alpha_upper, Some(19));
        let r = bound_report(&build_petersen(5, 1).unwrap(), 2).unwrap();
        assert_eq!(r.parity_lower, Some(6));
        assert_eq!(r.degree_lower, 5);
        let r = bound_report(&complete_graph(4), 4).unwrap();
        assert_eq!(r.degree_lower, 4);
        assert_eq!(r.alpha_upper, None);
        assert!(matches!(bound_report(&build_grid(2, 4).unwrap(), 1), Err(Error::NotCubic)));
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<BoundReport>(&json).unwrap(), r);
    }

    #[test]
    fn charges() {
        let k4 = complete_graph(4);
        let all_two = Labeling::uniform(4, Label::Two);
        let cv = discharge(&k4, &all_two).unwrap();
        assert_eq!(cv.quarter_charges, vec![8; 4]);

        let g = build_petersen(6, 1).unwrap();
        let lab = petersen_even_odd(6, 1).unwrap();
        let cv = discharge(&g, &lab).unwrap();
        assert!(cv.min() >= 2);
        assert_eq!(cv.total(), 24);
        assert!(verify_discharge_certificate(&g, &lab).unwrap());
        assert!(
            verify_discharge_certificate(&build_petersen(10, 3).unwrap(), &petersen_even_odd(10, 3).unwrap()).unwrap()
        );
    }

    #[test]
    fn one_between_two_minus_ones_ends_at_half() {
        // P(4,1) with u_0 = 1 next to u_1 = u_3 = -1 and a 3 on each -1
        let g = build_petersen(4, 1).unwrap();
        let lab = Labeling::from_values(&[1, -1, 3, -1, 3, 3, 1, 3]).unwrap();
        let r = validate(&g, &lab, 1, &[]).unwrap();
        assert!(r.valid, "{:?}", r.violations());
        assert_eq!(discharge(&g, &lab).unwrap().quarter_charges[0], 2);
    }

    #[test]
    fn discharge_rejects_bad_input() {
        let k4 = complete_graph(4);
        assert!(matches!(discharge(&k4, &Labeling::uniform(4, Label::MinusOne)), Err(Error::InvalidLabeling)));
        let grid = build_grid(2, 2).unwrap();
        assert!(matches!(discharge(&grid, &Labeling::uniform(4, Label::Two)), Err(Error::NotCubic)));
    }

    fn brute_alpha_min(g: &Graph) -> usize {
        let masks = neighbor_masks(g);
        (0u64..1 << g.n()).filter(|&s| alpha_ok(&masks, s, 2, 3)).map(|s| s.count_ones() as usize).min().unwrap()
    }

    #[test]
    fn alpha_sets() {
        let k4 = complete_graph(4);
        let s = alpha_total_dom_min(&k4, 2, 3).unwrap();
        assert_eq!(s.len(), brute_alpha_min(&k4));
        assert_eq!(s, vec![0, 1]);
        for (m, lo, hi) in [(5usize, 5, 8), (4, 4, 6)] {
            let g = build_petersen(m, 1).unwrap();
            let s = alpha_total_dom_min(&g, 2, 3).unwrap();
            assert!(s.len() >= lo && s.len() < hi);
            assert_eq!(s.len(), brute_alpha_min(&g));
        }
    }

    #[test]
    fn labeling_from_set() {
        let k4 = complete_graph(4);
        let lab = sd2rdf_from_set(&k4, &alpha_total_dom_min(&k4, 2, 3).unwrap()).unwrap();
        assert!(validate(&k4, &lab, 2, &[]).unwrap().valid);
        assert!(lab.total_weight() < 5);

        let g = build_petersen(6, 1).unwrap();
        let all: Vec<usize> = (0..12).collect();
        assert_eq!(sd2rdf_from_set(&g, &all).unwrap().total_weight(), 24);
        let lab = sd2rdf_from_set(&g, &alpha_total_dom_min(&g, 2, 3).unwrap()).unwrap();
        assert!(lab.total_weight() < 15);
        assert!(matches!(sd2rdf_from_set(&g, &[0]), Err(Error::NotAlphaTotalDominating)));
    }
}
