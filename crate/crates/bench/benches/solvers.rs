use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use stabilitylab_bench::fixtures;
use stabilitylab_core::enumeration::count_canonical;
use stabilitylab_core::{alpha, canonical_form, is_alpha_critical, is_stable};

fn solvers(c: &mut Criterion) {
    let graphs = fixtures();
    let mut group = c.benchmark_group("alpha");
    for (name, g) in &graphs {
        group.bench_with_input(BenchmarkId::from_parameter(name), g, |b, g| b.iter(|| alpha(black_box(g))));
    }
    group.finish();

    let mut group = c.benchmark_group("is_stable_k2");
    for (name, g) in &graphs {
        group.bench_with_input(BenchmarkId::from_parameter(name), g, |b, g| {
            b.iter(|| is_stable(black_box(g), 2, 0).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("is_alpha_critical");
    for (name, g) in &graphs {
        group.bench_with_input(BenchmarkId::from_parameter(name), g, |b, g| b.iter(|| is_alpha_critical(black_box(g))));
    }
    group.finish();

    let mut group = c.benchmark_group("canonical_form");
    for (name, g) in &graphs {
        group.bench_with_input(BenchmarkId::from_parameter(name), g, |b, g| b.iter(|| canonical_form(black_box(g))));
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_canonical");
    group.sample_size(10);
    for n in [6usize, 7, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| count_canonical(n, 1).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, solvers, enumeration);
criterion_main!(benches);
