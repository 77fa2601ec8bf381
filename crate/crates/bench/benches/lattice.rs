use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use sapprox::monotone::InflectionSet;
use sapprox::regions::lower_quality_function;
use sapprox::verify::oracle::naive_mobius;
use sapprox::{mobius, zeta};
use sapprox_bench::{inclusion_space, set_function, threshold_space};

fn mobius_transforms(c: &mut Criterion) {
    let mut group = c.benchmark_group("mobius");
    for n in [4, 8, 12] {
        let f = set_function(n, 7);
        group.bench_with_input(BenchmarkId::new("lattice", n), &f, |b, f| {
            b.iter(|| mobius(black_box(f)).unwrap())
        });
        if n <= 8 {
            group.bench_with_input(BenchmarkId::new("double_sum", n), &f, |b, f| {
                b.iter(|| naive_mobius(black_box(f)).unwrap())
            });
        }
    }
    let f = set_function(12, 3);
    group.bench_function("zeta/12", |b| b.iter(|| zeta(black_box(&f)).unwrap()));
    group.finish();
}

fn inflection_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("inflection");
    for n in [8, 12, 16] {
        let g = threshold_space(32, n);
        group.bench_with_input(BenchmarkId::new("threshold", n), &g, |b, g| {
            b.iter(|| InflectionSet::compute(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn quality_map(c: &mut Criterion) {
    let mut group = c.benchmark_group("quality_map");
    for n in [8, 12] {
        let g = inclusion_space(64, n);
        group.bench_with_input(BenchmarkId::new("inclusion", n), &g, |b, g| {
            b.iter(|| lower_quality_function(black_box(g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, mobius_transforms, inflection_sweep, quality_map);
criterion_main!(benches);
