//! Sequential versus rayon execution of catalogue sweeps.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use harmonic_identities::engine::{verify_all_with, verify_record, Execution, ParamGrid};
use harmonic_identities::catalogue::catalogue;

fn modes() -> Vec<(&'static str, Execution)> {
    let mut m = vec![("sequential", Execution::Sequential)];
    if cfg!(feature = "parallel") {
        m.push(("parallel", Execution::Parallel));
    }
    m
}

fn full_catalogue(c: &mut Criterion) {
    let grid = ParamGrid::new(12, 4, 4);
    let mut group = c.benchmark_group("verify_all n<=12 p,q<=4");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| black_box(verify_all_with(&grid, exec)))
        });
    }
    group.finish();
}

fn single_theorem(c: &mut Criterion) {
    let grid = ParamGrid::default();
    let mut group = c.benchmark_group("thm-c default grid");
    group.sample_size(10);
    let record = catalogue().get("thm-c").expect("registered");
    for (name, exec) in modes() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| black_box(verify_record(record, &grid, exec)))
        });
    }
    group.finish();
}

criterion_group!(benches, full_catalogue, single_theorem);
criterion_main!(benches);
