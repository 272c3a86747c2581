//! Exterior product on random sparse multivectors.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gacalc_bench::workload;
use std::hint::black_box;

fn bench_wedge(c: &mut Criterion) {
    let mut group = c.benchmark_group("wedge");
    group.sample_size(30);
    for dim in [3, 5, 8] {
        let (_, pairs) = workload(dim, 16);
        group.bench_with_input(BenchmarkId::from_parameter(dim), &pairs, |b, pairs| {
            b.iter(|| {
                for (x, y) in pairs {
                    black_box(x.wedge(y).unwrap());
                }
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_wedge);
criterion_main!(benches);
