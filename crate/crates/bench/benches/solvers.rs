use criterion::{criterion_group, criterion_main, Criterion};

use sdrd_bench::{bnb_instances, strip_instances};
use sdrd_core::solver::{solve_bnb, solve_strip_dp};
use sdrd_core::{Atlas, Family, SolveSpec, Topology};

fn bnb(c: &mut Criterion) {
    let mut group = c.benchmark_group("bnb");
    group.sample_size(10);
    for (name, g) in bnb_instances() {
        let spec = SolveSpec::new(&g);
        group.bench_function(name, |b| b.iter(|| solve_bnb(&spec).unwrap()));
    }
    group.finish();
}

fn strip(c: &mut Criterion) {
    let mut group = c.benchmark_group("strip_dp");
    for (name, g) in strip_instances() {
        let topology = match g.family() {
            Family::GeneralizedPetersen { .. } => Topology::Cyclic,
            _ => Topology::Open,
        };
        let spec = SolveSpec::new(&g);
        group.bench_function(name, |b| b.iter(|| solve_strip_dp(&spec, topology).unwrap()));
    }
    group.finish();
}

fn atlas(c: &mut Criterion) {
    let mut group = c.benchmark_group("atlas");
    group.sample_size(10);
    group.bench_function("build", |b| b.iter(Atlas::build));
    group.finish();
}

criterion_group!(benches, bnb, strip, atlas);
criterion_main!(benches);
