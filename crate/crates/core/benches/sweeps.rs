//! Sweep throughput on one worker against the default pool.
//!
//! With `--no-default-features` both variants run the sequential fallback.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use legendre_core::char2::all_counts;
use legendre_core::classify::{all_curve_counts, legendre_counts};
use legendre_core::par::{is_parallel, with_jobs};
use legendre_core::stats::auxiliary_counts;
use legendre_core::Field;

fn modes() -> Vec<(&'static str, Option<usize>)> {
    if is_parallel() {
        vec![("jobs=1", Some(1)), ("pool", None)]
    } else {
        vec![("sequential", None)]
    }
}

fn sweeps(c: &mut Criterion) {
    let f2003 = Field::prime(2003).unwrap();
    let f101 = Field::prime(101).unwrap();
    let f343 = Field::new(7, 3).unwrap();
    let f256 = Field::new(2, 8).unwrap();

    let mut g = c.benchmark_group("sweeps");
    g.sample_size(10);
    for (name, jobs) in modes() {
        g.bench_with_input(
            BenchmarkId::new("legendre_counts_q2003", name),
            &jobs,
            |b, &j| b.iter(|| with_jobs(j, || black_box(legendre_counts(&f2003).unwrap()))),
        );
        g.bench_with_input(
            BenchmarkId::new("all_curve_counts_q101", name),
            &jobs,
            |b, &j| b.iter(|| with_jobs(j, || black_box(all_curve_counts(&f101).unwrap()))),
        );
        g.bench_with_input(
            BenchmarkId::new("auxiliary_counts_q343", name),
            &jobs,
            |b, &j| b.iter(|| with_jobs(j, || black_box(auxiliary_counts(&f343).unwrap()))),
        );
        g.bench_with_input(
            BenchmarkId::new("char2_all_counts_n8", name),
            &jobs,
            |b, &j| b.iter(|| with_jobs(j, || black_box(all_counts(&f256).unwrap()))),
        );
    }
    g.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
