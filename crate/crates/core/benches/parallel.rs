use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use stieltjes_core::identities::{run_suite_with, suite_spec};
use stieltjes_core::stieltjes::{stieltjes_grid, stieltjes_grid_seq};
use stieltjes_core::QuadratureSpec;

fn grid(c: &mut Criterion) {
    let spec = QuadratureSpec::default();
    let mut g = c.benchmark_group("stieltjes-grid k<=3 q<=6");
    g.sample_size(10);
    g.bench_function("sequential", |b| b.iter(|| stieltjes_grid_seq(black_box(3), black_box(6), &spec).unwrap()));
    g.bench_function("parallel", |b| b.iter(|| stieltjes_grid(black_box(3), black_box(6), &spec).unwrap()));
    g.finish();
}

fn suite(c: &mut Criterion) {
    let spec = suite_spec();
    let threads = std::thread::available_parallelism().map_or(2, |n| n.get().max(2));
    let mut g = c.benchmark_group("verify integrals");
    g.sample_size(10);
    g.bench_function("1 thread", |b| b.iter(|| run_suite_with("integrals", 1, &spec).unwrap()));
    g.bench_function(format!("{threads} threads"), |b| {
        b.iter(|| run_suite_with("integrals", threads, &spec).unwrap())
    });
    g.finish();
}

criterion_group!(benches, grid, suite);
criterion_main!(benches);
