//! Microbenchmarks for the per-round hot paths: ranked sampling,
//! rank-breaking, and one step of each algorithm.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use mnl_bandits::{
    environment, rank_break, MaxMinUcb, Objective, RankingFeedback, RecMaxMinUcb, SpTs,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn bench_sample_top_m(c: &mut Criterion) {
    let inst = environment("g1").unwrap();
    let s: Vec<usize> = (0..inst.n()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    c.bench_function("sample_top_5_of_16", |b| {
        b.iter(|| inst.sample_top_m(black_box(&s), 5, &mut rng).unwrap());
    });
}

fn bench_rank_break(c: &mut Criterion) {
    let set: Vec<usize> = (0..11).collect();
    let order: Vec<usize> = (0..5).collect();
    let fb = RankingFeedback::new(set, order, 16).unwrap();
    c.bench_function("rank_break_k11_m5", |b| {
        b.iter(|| rank_break(black_box(&fb)));
    });
}

fn bench_maxmin_step(c: &mut Criterion) {
    let inst = environment("g1").unwrap();
    c.bench_function("maxmin_step_g1_k10_m5", |b| {
        let mut alg = MaxMinUcb::new(inst.n(), 10, 5, 0.51).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        b.iter(|| black_box(alg.step(&inst, &mut rng)));
    });
}

fn bench_rec_maxmin_step(c: &mut Criterion) {
    let inst = environment("g4").unwrap();
    c.bench_function("rec_maxmin_step_g4_k5", |b| {
        let mut alg = RecMaxMinUcb::new(inst.n(), 5, 0.51).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        b.iter(|| black_box(alg.step(&inst, &mut rng)));
    });
}

fn bench_sp_ts_step(c: &mut Criterion) {
    let inst = environment("g1").unwrap();
    c.bench_function("sp_ts_step_g1_k10_m5", |b| {
        let mut alg = SpTs::new(inst.n(), 10, 5, Objective::Winner).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        b.iter(|| black_box(alg.step(&inst, &mut rng)));
    });
}

criterion_group!(
    hot_paths,
    bench_sample_top_m,
    bench_rank_break,
    bench_maxmin_step,
    bench_rec_maxmin_step,
    bench_sp_ts_step
);
criterion_main!(hot_paths);
