use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use wig_bench::{explicit, fixture, specialized};
use wig_core::{wiener_index, GraphClass};

fn specialized_wiener(c: &mut Criterion) {
    for class in GraphClass::ALL {
        let mut group = c.benchmark_group(format!("wiener/{class}"));
        group.sample_size(10);
        for n in [128, 512, 2048] {
            let g = specialized(&fixture(class, n));
            group.throughput(Throughput::Elements((n * n) as u64));
            group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
                b.iter(|| wiener_index(black_box(g.as_ref()), false).unwrap())
            });
        }
        group.finish();
    }
}

fn against_explicit(c: &mut Criterion) {
    let mut group = c.benchmark_group("interval-vs-explicit");
    group.sample_size(10);
    for n in [64, 256] {
        let doc = fixture(GraphClass::Interval, n);
        let fast = specialized(&doc);
        let slow = explicit(&doc);
        group.bench_function(BenchmarkId::new("specialized", n), |b| {
            b.iter(|| wiener_index(black_box(fast.as_ref()), false).unwrap())
        });
        group.bench_function(BenchmarkId::new("explicit", n), |b| {
            b.iter(|| wiener_index(black_box(slow.as_ref()), false).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, specialized_wiener, against_explicit);
criterion_main!(benches);
