use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pdm_dirac::eigen::eigenvalues;
use pdm_dirac::EigenConfig;
use pdm_dirac_bench::{dense_sample, periodic_dirac, scarf_schrodinger};

fn tridiagonal(c: &mut Criterion) {
    let cfg = EigenConfig::default();
    let mut group = c.benchmark_group("schrodinger");
    group.sample_size(10);
    for n in [500, 1000, 3000] {
        let op = scarf_schrodinger(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &op, |b, op| b.iter(|| eigenvalues(op, &cfg).unwrap()));
    }
    group.finish();
}

fn dirac(c: &mut Criterion) {
    let cfg = EigenConfig::default();
    let mut group = c.benchmark_group("dirac");
    group.sample_size(10);
    for n in [251, 501, 1999] {
        let op = periodic_dirac(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &op, |b, op| b.iter(|| eigenvalues(op, &cfg).unwrap()));
    }
    group.finish();
}

fn dense(c: &mut Criterion) {
    let cfg = EigenConfig::default();
    let mut group = c.benchmark_group("dense");
    group.sample_size(10);
    for n in [64, 200] {
        let m = dense_sample(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| eigenvalues(m, &cfg).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, tridiagonal, dirac, dense);
criterion_main!(benches);
