//! Benchmarks for the three cost centres: closed-form evaluation, tensor
//! expansion, and the brute-force search.

use criterion::{criterion_group, criterion_main, Criterion};
use cuplen::closed_forms::zcl_closed;
use cuplen::ring::RingContext;
use cuplen::search::{search_zcl, DEFAULT_BUDGET};
use cuplen::tensor::{
    zd_power, zd_product, EvalOptions, EvalStats, ExponentAssignment, PowerCache, TensorContext,
};
use std::hint::black_box;

fn closed_forms(c: &mut Criterion) {
    c.bench_function("zcl_closed, n = 51 over g <= 40 and k <= 8", |b| {
        b.iter(|| {
            let mut acc = 0u64;
            for g in 1..=40 {
                for k in 2..=8 {
                    acc ^= zcl_closed(black_box(51), g, k).unwrap().0;
                }
            }
            acc
        })
    });
}

fn tensor_expansion(c: &mut Criterion) {
    let ring = RingContext::new(4, 3).unwrap();
    let tctx = TensorContext::new(ring, 3).unwrap();
    c.bench_function("zd_power to the per-factor cap, n = 4, g = 3, k = 3", |b| {
        b.iter(|| {
            let stats = EvalStats::new();
            zd_power(2, 1, black_box(15), &tctx, &stats, None).unwrap()
        })
    });

    let ring = RingContext::new(3, 3).unwrap();
    let tctx = TensorContext::new(ring, 3).unwrap();
    let mut assign = ExponentAssignment::zeros(3, 3).unwrap();
    assign.set(2, 1, 7);
    assign.set(3, 1, 7);
    for i in 2..=3 {
        assign.set(2, i, 1);
        assign.set(3, i, 1);
    }
    for opts in [EvalOptions { prune: false }, EvalOptions { prune: true }] {
        let name = format!(
            "zd_product on a surviving degree-{} witness, n = 3, g = 3, k = 3 (prune: {})",
            assign.total_degree(),
            opts.prune
        );
        c.bench_function(&name, |b| {
            b.iter(|| {
                let stats = EvalStats::new();
                let cache = PowerCache::new();
                zd_product(&assign, &tctx, &opts, &stats, Some(&cache)).unwrap()
            })
        });
    }
}

fn search(c: &mut Criterion) {
    c.bench_function("search_zcl, n = 2, g = 2, k = 3, restricted", |b| {
        b.iter(|| search_zcl(2, 2, 3, true, DEFAULT_BUDGET).unwrap().value)
    });
    c.bench_function("search_zcl, n = 5, g = 4, k = 2, restricted", |b| {
        b.iter(|| search_zcl(5, 4, 2, true, DEFAULT_BUDGET).unwrap().value)
    });
}

criterion_group!(benches, closed_forms, tensor_expansion, search);
criterion_main!(benches);
