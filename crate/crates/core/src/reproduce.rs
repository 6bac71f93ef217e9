//! End-to-end reproduction checks, one per headline result, each with a
//! pinned runtime budget. Shared by the acceptance test target and the CLI.

use std::fmt;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::atlas::{
    enumerate_constellations, right_three_cap, Atlas, Constellation, ShiftedFamily, CENTER_BOUND_CASES,
};
use crate::bounds::{alpha_total_dom_min, lower_bound_cubic, sd2rdf_from_set, verify_discharge_certificate};
use crate::constructions::{flower_snark, petersen_even_odd, petersen_m1, petersen_m3, Scheme};
use crate::corpus::{cubic_corpus, random_cubic};
use crate::error::Result;
use crate::graph::{build_flower_snark, build_grid, build_petersen, Family, Graph};
use crate::labeling::{validate, Label, Labeling};
use crate::solver::{brute_force, solve_bnb_with_limit, solve_strip_dp, SolveResult, SolveSpec, Topology};

/// Vertex cap used for B&B inside the reproduction runs.
const BNB_LIMIT: usize = 26;

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_secs: f64,
    pub budget_secs: Option<f64>,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let budget = self.budget_secs.map(|b| format!(" / budget {b:.0} s")).unwrap_or_default();
        write!(
            f,
            "{} [{:>2}] {} ({:.2} s{}): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_secs,
            budget,
            self.detail
        )
    }
}

type Check = fn(&Reproduction) -> Result<(bool, String)>;

/// `(id, name, runtime budget in seconds, check)`.
pub const CRITERIA: [(u32, &str, Option<u64>, Check); 14] = [
    (1, "2 x m grid optima, m = 1..13", Some(1), grid_sequence),
    (2, "2 x m grid construction weights", Some(30), grid_closed_form),
    (3, "prism P(m,1) optima and constructions", Some(60), prism_values),
    (4, "P(m,3) optima and constructions", Some(600), petersen_three),
    (5, "discharging certificate on valid labelings", Some(10), discharging),
    (6, "parity lower bound on exact optima", None, parity_bound),
    (7, "block atlas counts and center minima", Some(300), atlas_counts),
    (8, "right 3/-1 cap records", None, right_cap),
    (9, "forced center lower bounds", None, center_bounds),
    (10, "shifted boundary families transfer", Some(1), shifted_families),
    (11, "2/3-total dominating set upper bound", None, alpha_pipeline),
    (12, "k n / 4 <= optimum <= 13 n / 8 for k = 1..5", None, sandwich),
    (13, "flower snark constructions and J_5", Some(900), snark),
    (14, "brute force = B&B = strip DP", None, engines_agree),
];

/// Holds the atlas once built so that the atlas checks share it.
pub struct Reproduction {
    jobs: usize,
    atlas: OnceLock<Result<(Atlas, Option<Duration>)>>,
}

/// Criteria that only read the atlas.
pub const ATLAS_CRITERIA: [u32; 4] = [7, 8, 9, 10];

impl Reproduction {
    /// `jobs` caps the worker threads of the atlas build.
    pub fn new(jobs: usize) -> Self {
        Self { jobs: jobs.max(1), atlas: OnceLock::new() }
    }

    /// Runs the atlas checks against an atlas loaded from elsewhere.
    pub fn with_atlas(atlas: Atlas) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(Ok((atlas, None)));
        Self { jobs: 1, atlas: cell }
    }

    fn atlas(&self) -> Result<&(Atlas, Option<Duration>)> {
        let cell = self.atlas.get_or_init(|| {
            let t = Instant::now();
            Atlas::build_with_jobs(self.jobs).map(|a| (a, Some(t.elapsed())))
        });
        cell.as_ref().map_err(|e| crate::Error::Parameter(e.to_string()))
    }

    pub fn run(&self, id: u32) -> Option<Outcome> {
        let &(id, name, budget, check) = CRITERIA.iter().find(|c| c.0 == id)?;
        let t = Instant::now();
        let result = check(self);
        let elapsed = t.elapsed().as_secs_f64();
        let budget_secs = budget.map(|b| b as f64);
        let (ok, detail) = result.unwrap_or_else(|e| (false, format!("error: {e}")));
        let in_time = budget_secs.is_none_or(|b| elapsed <= b);
        let detail = if in_time { detail } else { format!("{detail}; over the time budget") };
        Some(Outcome { id, name, passed: ok && in_time, detail, elapsed_secs: elapsed, budget_secs })
    }

    pub fn run_all(&self) -> Vec<Outcome> {
        CRITERIA.iter().filter_map(|c| self.run(c.0)).collect()
    }
}

fn optimum(spec: &SolveSpec) -> Result<SolveResult> {
    solve_bnb_with_limit(spec, BNB_LIMIT)
}

fn grid_sequence(_: &Reproduction) -> Result<(bool, String)> {
    const EXPECTED: [i32; 13] = [2, 4, 2, 5, 6, 6, 7, 8, 10, 10, 11, 12, 14];
    let mut got = Vec::new();
    for m in 1..=13 {
        let g = build_grid(2, m)?;
        got.push(solve_strip_dp(&SolveSpec::new(&g), Topology::Open)?.min_weight().unwrap_or(i32::MAX));
    }
    Ok((got == EXPECTED, format!("{got:?}")))
}

fn check_scheme(scheme: Scheme, m: usize) -> Result<Option<String>> {
    let g = scheme.graph(m)?;
    let lab = scheme.labeling(m)?;
    let report = validate(&g, &lab, 1, &[])?;
    let want = scheme.claimed_weight(m);
    Ok((!report.valid || report.weight != want)
        .then(|| format!("{scheme:?} m={m}: weight {} vs {want}", report.weight)))
}

fn grid_closed_form(_: &Reproduction) -> Result<(bool, String)> {
    let mut problems = Vec::new();
    for m in 5..=40 {
        problems.extend(check_scheme(Scheme::Grid2xm, m)?);
    }
    for m in 5..=20 {
        let g = build_grid(2, m)?;
        let opt = solve_strip_dp(&SolveSpec::new(&g), Topology::Open)?.min_weight();
        if opt != Some(Scheme::Grid2xm.claimed_weight(m)) {
            problems.push(format!("m={m}: optimum {opt:?}"));
        }
    }
    Ok(summary(problems, "36 constructions valid at the closed form; optimal for m <= 20"))
}

fn prism_values(_: &Reproduction) -> Result<(bool, String)> {
    let mut problems = Vec::new();
    let mut optima = Vec::new();
    for m in 3..=13 {
        let g = build_petersen(m, 1)?;
        let opt = solve_strip_dp(&SolveSpec::new(&g), Topology::Cyclic)?.min_weight();
        optima.push(opt.unwrap_or(i32::MAX));
        if opt != Some(Scheme::PetersenM1.claimed_weight(m)) {
            problems.push(format!("m={m}: optimum {opt:?}"));
        }
    }
    for m in 3..=200 {
        problems.extend(check_scheme(Scheme::PetersenM1, m)?);
    }
    Ok(summary(problems, &format!("optima m=3..13 {optima:?}; constructions valid m <= 200")))
}

fn petersen_three(_: &Reproduction) -> Result<(bool, String)> {
    let mut problems = Vec::new();
    let mut solved = Vec::new();
    for (m, want) in [(8, 8), (9, 10)] {
        let g = build_petersen(m, 3)?;
        let opt = optimum(&SolveSpec::new(&g))?.min_weight();
        solved.push(format!("P({m},3) = {opt:?}"));
        if opt != Some(want) {
            problems.push(format!("P({m},3): {opt:?} vs {want}"));
        }
    }
    for m in 8..=200 {
        problems.extend(check_scheme(Scheme::PetersenM3, m)?);
        let lab = petersen_m3(m)?;
        if lab.total_weight() as i64 != lower_bound_cubic(2 * m)? {
            problems.push(format!("m={m}: construction above the cubic lower bound"));
        }
    }
    Ok(summary(problems, &format!("{}; constructions meet the lower bound for m = 8..200", solved.join(", "))))
}

/// Valid SDRDFs on cubic graphs: constructions, exact optima and optima
/// under random partial fixings.
pub fn labeling_corpus() -> Result<Vec<(Graph, Labeling)>> {
    let mut out = Vec::new();
    for m in 3..=40 {
        out.push((build_petersen(m, 1)?, petersen_m1(m)?));
    }
    for m in 8..=40 {
        out.push((build_petersen(m, 3)?, petersen_m3(m)?));
    }
    for m in 5..=30 {
        out.push((build_flower_snark(m)?, flower_snark(m)?));
    }
    for m in (4..=30).step_by(2) {
        for k in (1..m).step_by(2).filter(|&k| 2 * k != m) {
            out.push((build_petersen(m, k)?, petersen_even_odd(m, k)?));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (_, g) in cubic_corpus(12) {
        let spec = SolveSpec::new(&g);
        if let Some(w) = optimum(&spec)?.witness() {
            out.push((g.clone(), w.clone()));
        }
        for _ in 0..25 {
            let mut fixed = Vec::new();
            for v in 0..g.n() {
                if rng.gen_bool(0.3) {
                    fixed.push((v, Label::ALL[rng.gen_range(0..4)]));
                }
            }
            let spec = SolveSpec::new(&g).with_fixed(&fixed)?;
            if let Some(w) = optimum(&spec)?.witness() {
                out.push((g.clone(), w.clone()));
            }
        }
    }
    Ok(out)
}

fn discharging(_: &Reproduction) -> Result<(bool, String)> {
    let corpus = labeling_corpus()?;
    let mut problems = Vec::new();
    for (g, lab) in &corpus {
        if !verify_discharge_certificate(g, lab)? {
            problems.push(format!("{:?}", g.family()));
        }
    }
    let enough = corpus.len() >= 500;
    if !enough {
        problems.push(format!("only {} labelings", corpus.len()));
    }
    Ok(summary(problems, &format!("{} labelings, every final charge >= 1/2, totals conserved", corpus.len())))
}

/// Cubic graphs with `n = 2 mod 4` small enough for B&B.
fn parity_instances() -> Result<Vec<(String, Graph)>> {
    let mut out: Vec<(String, Graph)> = cubic_corpus(14).into_iter().filter(|(_, g)| g.n() % 4 == 2).collect();
    for k in 1..=4 {
        out.push((format!("P(9,{k})"), build_petersen(9, k)?));
    }
    for seed in 0..3 {
        out.push((format!("random n=18 seed={seed}"), random_cubic(18, 18_000 + seed, true)?));
    }
    Ok(out)
}

fn parity_bound(_: &Reproduction) -> Result<(bool, String)> {
    let instances = parity_instances()?;
    let mut problems = Vec::new();
    for (name, g) in &instances {
        let opt = optimum(&SolveSpec::new(g))?.min_weight().unwrap_or(i32::MIN);
        if (opt as usize) < g.n() / 2 + 1 {
            problems.push(format!("{name}: {opt}"));
        }
    }
    Ok(summary(problems, &format!("{} graphs with n = 2 mod 4, all optima >= n/2 + 1", instances.len())))
}

fn atlas_counts(r: &Reproduction) -> Result<(bool, String)> {
    let listed = enumerate_constellations().len();
    let (atlas, took) = r.atlas()?;
    let min_c = atlas.min_weight_c();
    let lemma_breaks = atlas.query(|rec| matches!(rec.minweight_c, Some(6 | 7 | 9)) && rec.delta() != Some(4)).count();
    let ok = listed == 14940 && atlas.len() == 14940 && min_c == Some(6) && lemma_breaks == 0;
    let source = match took {
        Some(t) => format!("built in {:.2} s on {} workers", t.as_secs_f64(), r.jobs),
        None => "loaded".to_string(),
    };
    Ok((
        ok,
        format!(
            "{listed} constellations, {} records {source}, min weight of C {min_c:?}, {lemma_breaks} records with weight 6/7/9 and delta != 4",
            atlas.len()
        ),
    ))
}

fn right_cap(r: &Reproduction) -> Result<(bool, String)> {
    let (atlas, _) = r.atlas()?;
    let cap = right_three_cap();
    let hits: Vec<_> = atlas.query(move |rec| cap.matches_orbit(&rec.d)).collect();
    let all_four = hits.iter().all(|rec| rec.delta() == Some(4));
    Ok((hits.len() == 129 && all_four, format!("{} records, all delta 4: {all_four}", hits.len())))
}

fn center_bounds(r: &Reproduction) -> Result<(bool, String)> {
    let (atlas, _) = r.atlas()?;
    let mut found = Vec::new();
    let mut ok = true;
    for (top, bottom, lb) in CENTER_BOUND_CASES {
        let c = Constellation::from_rows(top, bottom)?;
        let w = atlas.lookup(&c).and_then(|rec| rec.minweight_c);
        // an infeasible boundary satisfies every lower bound
        ok &= w.is_none_or(|w| w >= lb);
        found.push(format!("{}>={lb}", w.map_or("inf".to_string(), |w| w.to_string())));
    }
    Ok((ok, found.join(", ")))
}

fn shifted_families(r: &Reproduction) -> Result<(bool, String)> {
    let (atlas, _) = r.atlas()?;
    let mut ok = true;
    let mut parts = Vec::new();
    for family in [ShiftedFamily::one_three(), ShiftedFamily::sum_at_least_three()] {
        let s = family.survey(atlas);
        ok &= s.realizable > 0 && s.transferring == s.realizable;
        parts.push(format!(
            "{}: {}/{} realizable completions transfer ({} orbits, {} filtered out)",
            family.name, s.transferring, s.realizable, s.orbits, s.filtered_out
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn alpha_pipeline(_: &Reproduction) -> Result<(bool, String)> {
    let corpus = cubic_corpus(12);
    let mut problems = Vec::new();
    for (name, g) in &corpus {
        let n = g.n() as i32;
        let set = alpha_total_dom_min(g, 2, 3)?;
        let s = set.len() as i32;
        let lab = sd2rdf_from_set(g, &set)?;
        let valid2 = validate(g, &lab, 2, &[])?.valid;
        let valid1 = validate(g, &lab, 1, &[])?.valid;
        let w = lab.total_weight();
        if !(valid2 && valid1 && 4 * w < 5 * n && 2 * s >= n && 4 * s < 3 * n) {
            problems.push(format!("{name}: |S|={s} weight {w}"));
        }
    }
    Ok(summary(
        problems,
        &format!("{} graphs: valid for k = 2 and k = 1, weight < 5n/4, n/2 <= |S| < 3n/4", corpus.len()),
    ))
}

fn sandwich(_: &Reproduction) -> Result<(bool, String)> {
    let corpus = cubic_corpus(12);
    let mut problems = Vec::new();
    for (name, g) in &corpus {
        let n = g.n() as i32;
        for k in 1..=5 {
            let opt = optimum(&SolveSpec::new(g).with_k(k)?)?.min_weight().unwrap_or(i32::MAX);
            if 4 * opt < k * n || 8 * opt > 13 * n {
                problems.push(format!("{name} k={k}: {opt}"));
            }
        }
    }
    Ok(summary(problems, &format!("{} graphs x 5 thresholds inside the bounds", corpus.len())))
}

fn snark(_: &Reproduction) -> Result<(bool, String)> {
    let mut problems = Vec::new();
    for m in 5..=30 {
        problems.extend(check_scheme(Scheme::FlowerSnark, m)?);
    }
    let g = build_flower_snark(5)?;
    let opt = optimum(&SolveSpec::new(&g))?.min_weight();
    if !matches!(opt, Some(10 | 11)) {
        problems.push(format!("J_5 optimum {opt:?}"));
    }
    Ok(summary(problems, &format!("constructions m = 5..30 at 2m+1; J_5 optimum {opt:?}")))
}

/// Every instance on at most 12 vertices the engines share.
pub fn small_instances() -> Result<Vec<(String, Graph)>> {
    let mut out = cubic_corpus(12);
    for m in 1..=6 {
        out.push((format!("G(2,{m})"), build_grid(2, m)?));
    }
    out.push(("G(3,3)".into(), build_grid(3, 3)?));
    out.push(("G(3,4)".into(), build_grid(3, 4)?));
    Ok(out)
}

fn engines_agree(_: &Reproduction) -> Result<(bool, String)> {
    let instances = small_instances()?;
    let mut problems = Vec::new();
    let mut with_dp = 0;
    for (name, g) in &instances {
        let spec = SolveSpec::new(g);
        let brute = brute_force(&spec)?;
        if optimum(&spec)? != brute {
            problems.push(format!("{name}: B&B differs"));
        }
        let topology = match g.family() {
            Family::GeneralizedPetersen { k: 1, .. } => Some(Topology::Cyclic),
            Family::Grid { rows: 2, .. } => Some(Topology::Open),
            _ => None,
        };
        if let Some(t) = topology {
            with_dp += 1;
            if solve_strip_dp(&spec, t)? != brute {
                problems.push(format!("{name}: strip DP differs"));
            }
        }
    }
    Ok(summary(
        problems,
        &format!("{} instances agree (value and witness), {with_dp} also through the strip DP", instances.len()),
    ))
}

fn summary(problems: Vec<String>, ok_text: &str) -> (bool, String) {
    if problems.is_empty() {
        (true, ok_text.to_string())
    } else {
        (false, problems.join("; "))
    }
}
