//! Geometric product: the vector-peeling recursion against the
//! precomputed Cayley table, plus the table construction cost itself.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gacalc_bench::workload;
use gacalc_core::CayleyTable;
use std::hint::black_box;

fn bench_recursive(c: &mut Criterion) {
    let mut group = c.benchmark_group("geometric/recursive");
    group.sample_size(30);
    for dim in [3, 4, 6] {
        let (algebra, pairs) = workload(dim, 8);
        group.bench_with_input(BenchmarkId::from_parameter(dim), &pairs, |b, pairs| {
            b.iter(|| {
                for (x, y) in pairs {
                    black_box(algebra.geometric_product(x, y).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn bench_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("geometric/table");
    group.sample_size(30);
    for dim in [3, 4, 6] {
        let (algebra, pairs) = workload(dim, 8);
        let table = CayleyTable::new(&algebra).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(dim), &pairs, |b, pairs| {
            b.iter(|| {
                for (x, y) in pairs {
                    black_box(table.product(x, y).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn bench_table_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("geometric/table-build");
    group.sample_size(20);
    for dim in [3, 4, 6] {
        let (algebra, _) = workload(dim, 1);
        group.bench_with_input(BenchmarkId::from_parameter(dim), &algebra, |b, algebra| {
            b.iter(|| black_box(CayleyTable::new(algebra).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_recursive, bench_table, bench_table_build);
criterion_main!(benches);
