//! Rayon pool against a single worker on the heavier searches.
//!
//! `cargo bench -p sact` compares the default pool with a one-thread pool.
//! Building with `--no-default-features` drops rayon from the library, so
//! both rows then measure the sequential fallback.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPool;

use sact::radical::enumerate_radicals;
use sact::torsion::enumerate_torsion_pairs;
use sact::{build_universe, Bounds, Monoid, RadicalFilter, Universe};

fn pools() -> Vec<(&'static str, ThreadPool)> {
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let all = rayon::ThreadPoolBuilder::new().build().unwrap();
    vec![("sequential", one), ("parallel", all)]
}

fn universe(m: Monoid, n: usize) -> Universe {
    build_universe(Arc::new(m), n, &Bounds::default()).unwrap()
}

fn bench_universe(c: &mut Criterion) {
    let mut g = c.benchmark_group("universe S2/4");
    for (name, pool) in pools() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| universe(Monoid::idempotent(), 4)))
        });
    }
    g.finish();
}

fn bench_radicals(c: &mut Criterion) {
    let mut g = c.benchmark_group("ka radicals Z2/4");
    g.sample_size(20);
    for (name, pool) in pools() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                pool.install(|| {
                    let u = universe(Monoid::cyclic_group(2), 4);
                    enumerate_radicals(&u, RadicalFilter::Ka, &Bounds::default()).unwrap()
                })
            })
        });
    }
    g.finish();
}

fn bench_torsion(c: &mut Criterion) {
    let mut g = c.benchmark_group("torsion pairs S2/3");
    g.sample_size(20);
    for (name, pool) in pools() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                pool.install(|| {
                    let u = universe(Monoid::idempotent(), 3);
                    enumerate_torsion_pairs(&u, &Bounds::default()).unwrap()
                })
            })
        });
    }
    g.finish();
}

criterion_group!(benches, bench_universe, bench_radicals, bench_torsion);
criterion_main!(benches);
