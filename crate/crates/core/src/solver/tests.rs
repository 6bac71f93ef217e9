use super::*;
use crate::graph::{
    block_boundary_ids, block_corner_ids, build_block_graph, build_flower_snark, build_grid, build_petersen,
    complete_graph, BlockVariant, Family,
};
use crate::labeling::{is_valid, validate};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn bnb(spec: &SolveSpec) -> SolveResult {
    solve_bnb_with_limit(spec, 64).unwrap()
}

fn assert_sound(spec: &SolveSpec, res: &SolveResult) {
    if let SolveResult::Optimal { min_weight, witness } = res {
        assert!(is_valid(spec.graph, witness.labels(), spec.k, &spec.exempt));
        assert_eq!(spec.objective_weight(witness.labels()), *min_weight);
        for (v, f) in spec.fixed.iter().enumerate() {
            if let Some(l) = f {
                assert_eq!(witness.get(v), *l);
            }
        }
    }
}

#[test]
fn k4_by_brute_force() {
    let g = complete_graph(4);
    let res = brute_force(&SolveSpec::new(&g)).unwrap();
    // two 2s and two -1s: every closed neighborhood sums to 2
    assert_eq!(res.min_weight(), Some(2));
    assert_eq!(bnb(&SolveSpec::new(&g)), res);
}

#[test]
fn small_family_values() {
    let cases: [(Graph, i32); 5] = [
        (build_petersen(5, 1).unwrap(), 7),
        (build_petersen(9, 1).unwrap(), 11),
        (build_grid(2, 3).unwrap(), 2),
        (build_grid(2, 5).unwrap(), 6),
        (build_grid(2, 1).unwrap(), 2),
    ];
    for (g, want) in cases {
        let spec = SolveSpec::new(&g);
        let topo = if g.n() % 2 == 0 && matches!(g.family(), Family::GeneralizedPetersen { .. }) {
            Topology::Cyclic
        } else {
            Topology::Open
        };
        let dp = solve_strip_dp(&spec, topo).unwrap();
        assert_eq!(dp.min_weight(), Some(want), "{:?}", g.family());
        assert_sound(&spec, &dp);
        if g.n() <= 20 {
            assert_eq!(bnb(&spec), dp, "{:?}", g.family());
        }
    }
}

#[test]
fn longer_grids_by_dp() {
    for (cols, want) in [(9, 10), (11, 11)] {
        let g = build_grid(2, cols).unwrap();
        let res = solve_strip_dp(&SolveSpec::new(&g), Topology::Open).unwrap();
        assert_eq!(res.min_weight(), Some(want));
    }
}

#[test]
fn engines_agree_on_small_graphs() {
    let mut graphs = vec![complete_graph(4)];
    for m in 3..=6 {
        graphs.push(build_petersen(m, 1).unwrap());
    }
    for c in 1..=6 {
        graphs.push(build_grid(2, c).unwrap());
    }
    graphs.push(build_petersen(5, 2).unwrap());
    graphs.push(build_grid(3, 3).unwrap());
    graphs.push(build_grid(3, 4).unwrap());
    for g in &graphs {
        for k in 1..=3 {
            let spec = SolveSpec::new(g).with_k(k).unwrap();
            let brute = brute_force(&spec).unwrap();
            assert_eq!(bnb(&spec), brute, "{:?} k={k}", g.family());
            let topo = match g.family() {
                Family::GeneralizedPetersen { k: 1, .. } => Some(Topology::Cyclic),
                Family::Grid { rows: 2, .. } => Some(Topology::Open),
                _ => None,
            };
            if let Some(t) = topo {
                assert_eq!(solve_strip_dp(&spec, t).unwrap(), brute, "{:?} k={k}", g.family());
            }
        }
    }
}

#[test]
fn engines_agree_with_fixed_exempt_and_objective() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let g = build_grid(2, 6).unwrap();
    for _ in 0..40 {
        let mut fixed = Vec::new();
        for v in 0..g.n() {
            if rng.gen_bool(0.2) {
                fixed.push((v, Label::ALL[rng.gen_range(0..4)]));
            }
        }
        let exempt: Vec<usize> = (0..g.n()).filter(|_| rng.gen_bool(0.15)).collect();
        let objective: Vec<usize> = (0..g.n()).filter(|_| rng.gen_bool(0.8)).collect();
        let spec = SolveSpec::new(&g)
            .with_fixed(&fixed)
            .unwrap()
            .with_exempt(&exempt)
            .unwrap()
            .with_objective(&objective)
            .unwrap();
        let brute = brute_force(&spec).unwrap();
        assert_sound(&spec, &brute);
        assert_eq!(bnb(&spec), brute);
        assert_eq!(solve_strip_dp(&spec, Topology::Open).unwrap(), brute);
    }
}

#[test]
fn block_dp_matches_bnb_with_fixed_boundary() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for variant in [BlockVariant::Reduced, BlockVariant::Full] {
        let g = build_block_graph(variant);
        let boundary = block_boundary_ids(variant);
        let corners = block_corner_ids(variant);
        let cases = if variant == BlockVariant::Full { 6 } else { 25 };
        for _ in 0..cases {
            let fixed: Vec<(usize, Label)> = boundary.iter().map(|&v| (v, Label::ALL[rng.gen_range(0..4)])).collect();
            let spec = SolveSpec::new(&g).with_fixed(&fixed).unwrap().with_exempt(&corners).unwrap();
            let dp = solve_strip_dp(&spec, Topology::Open).unwrap();
            assert_sound(&spec, &dp);
            assert_eq!(bnb(&spec), dp);
        }
    }
}

#[test]
fn infeasible_fixing_is_reported() {
    let g = build_grid(2, 2).unwrap();
    let all_minus: Vec<(usize, Label)> = (0..4).map(|v| (v, Label::MinusOne)).collect();
    let spec = SolveSpec::new(&g).with_fixed(&all_minus).unwrap();
    assert_eq!(brute_force(&spec).unwrap(), SolveResult::Infeasible);
    assert_eq!(bnb(&spec), SolveResult::Infeasible);
    assert_eq!(solve_strip_dp(&spec, Topology::Open).unwrap(), SolveResult::Infeasible);
}

#[test]
fn optimum_is_monotone_in_k() {
    for g in [build_petersen(4, 1).unwrap(), build_petersen(5, 2).unwrap(), complete_graph(4)] {
        let mut last = i32::MIN;
        for k in 1..=5 {
            let w = bnb(&SolveSpec::new(&g).with_k(k).unwrap()).min_weight().unwrap();
            assert!(w >= last);
            last = w;
        }
    }
}

#[test]
fn size_limit_is_enforced() {
    let g = build_flower_snark(7).unwrap();
    let err = solve_bnb_with_limit(&SolveSpec::new(&g), 20).unwrap_err();
    assert!(matches!(err, Error::TooLarge { n: 28, limit: 20 }));
    assert!(brute_force(&SolveSpec::new(&g)).is_err());
}

#[test]
fn strip_rejects_other_families() {
    let g = build_petersen(7, 2).unwrap();
    assert!(solve_strip_dp(&SolveSpec::new(&g), Topology::Cyclic).is_err());
    let g = build_petersen(7, 1).unwrap();
    assert!(solve_strip_dp(&SolveSpec::new(&g), Topology::Open).is_err());
}

#[test]
fn witnesses_validate() {
    let g = build_petersen(6, 1).unwrap();
    let spec = SolveSpec::new(&g);
    let res = bnb(&spec);
    let report = validate(&g, res.witness().unwrap(), 1, &[]).unwrap();
    assert!(report.valid);
    assert_eq!(report.weight, res.min_weight().unwrap());
}
