use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use schur_bench::{random_code, random_rs, rs_pair};
use schur_core::classify::{classify_pmds, random_dual_pair};
use schur_core::rs::recover_rs;
use schur_core::{random, Limits, Matrix};

fn rref(c: &mut Criterion) {
    let mut group = c.benchmark_group("rref");
    for (q, n) in [(2u64, 64usize), (13, 32), (256, 32)] {
        let f = schur_bench::field(q);
        let data = random::vector(&f, n * n, &mut random::rng(1, 0));
        let m = Matrix::new(&f, n, n, data).unwrap();
        group.bench_with_input(BenchmarkId::new(format!("gf{q}"), n), &m, |b, m| b.iter(|| black_box(m.rref())));
    }
    group.finish();
}

fn min_distance(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("min_distance");
    for (q, n, k) in [(2u64, 24usize, 12usize), (5, 12, 6), (16, 10, 4)] {
        let code = random_code(q, n, k, 2);
        group.bench_function(format!("gf{q}_{n}_{k}"), |b| b.iter(|| black_box(code.min_distance(&limits).unwrap())));
    }
    group.finish();
}

fn schur_product(c: &mut Criterion) {
    let mut group = c.benchmark_group("schur_product");
    for (q, n, k) in [(2u64, 40usize, 8usize), (13, 30, 10), (256, 40, 12)] {
        let a = random_code(q, n, k, 3);
        let d = random_code(q, n, k, 4);
        group.bench_function(format!("gf{q}_{n}_{k}"), |b| b.iter(|| black_box(a.schur_product(&d).unwrap())));
    }
    group.finish();
}

fn recognition(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("recover_rs");
    for (q, n, k) in [(17u64, 18usize, 4usize), (17, 18, 9), (17, 18, 14), (32, 20, 6)] {
        let code = random_rs(q, n, k, 5);
        group.bench_function(format!("gf{q}_{n}_{k}"), |b| b.iter(|| black_box(recover_rs(&code, &limits).unwrap())));
    }
    group.finish();
}

fn classify(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("classify_pmds");
    let (a, d) = rs_pair(13, 10, 3, 3, 6);
    group.bench_function("rs_gf13_10", |b| b.iter(|| black_box(classify_pmds(&a, &d, &limits).unwrap())));
    let f = schur_bench::field(7);
    let (a, d) = random_dual_pair(&f, 8, 3, &mut random::rng(7, 0));
    group.bench_function("dual_gf7_8", |b| b.iter(|| black_box(classify_pmds(&a, &d, &limits).unwrap())));
    group.finish();
}

criterion_group!(benches, rref, min_distance, schur_product, recognition, classify);
criterion_main!(benches);
