use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use maxsurf_bench::{decaying_series, spiral_points};
use maxsurf_core::bjorling::solve;
use maxsurf_core::fourier::fourier_analyze;
use maxsurf_core::height::w_from_h;
use maxsurf_core::interpolation::{family_curve, scalar_residual, search_r0};
use maxsurf_core::singular::singular_set;
use maxsurf_core::{corpus, Complex64, SearchOptions};

fn evaluation(c: &mut Criterion) {
    let h = corpus::exp_plus_conj_h(64);
    let points = spiral_points(256);
    c.bench_function("eval_n64_256pts", |b| {
        b.iter(|| points.iter().map(|&z| h.eval(black_box(z)).unwrap()).sum::<Complex64>())
    });
    c.bench_function("gradient_n64_256pts", |b| {
        b.iter(|| points.iter().map(|&z| h.gradient(black_box(z)).unwrap().0).sum::<Complex64>())
    });
}

fn spectral(c: &mut Criterion) {
    let series = decaying_series(60);
    let samples = series.synthesize(256).unwrap();
    c.bench_function("fourier_analyze_256", |b| b.iter(|| fourier_analyze(black_box(&samples))));
    c.bench_function("synthesize_256", |b| b.iter(|| black_box(&series).synthesize(256).unwrap()));
}

fn solvers(c: &mut Criterion) {
    let data = corpus::null_bjorling(2, 0.3, &[Complex64::new(0.3, 0.1), Complex64::new(0.2, -0.1)], &[Complex64::new(1.0, 0.0)]);
    c.bench_function("bjorling_solve", |b| b.iter(|| solve(black_box(&data)).unwrap()));

    let curve = family_curve(2.0).unwrap();
    c.bench_function("scalar_residual_family", |b| {
        b.iter(|| scalar_residual(black_box(&curve), 1.7, None).unwrap())
    });
    c.bench_function("search_r0_family", |b| {
        b.iter(|| search_r0(black_box(&curve), (0.01, 100.0), &SearchOptions::default()).unwrap())
    });
}

fn geometry(c: &mut Criterion) {
    let h = corpus::exp_plus_conj_h(40);
    let targets = spiral_points(16);
    c.bench_function("w_from_h_exp_16pts", |b| {
        b.iter(|| w_from_h(&h, Complex64::new(1.0, 0.0), 0.0, black_box(&targets)).unwrap())
    });
    let surface = corpus::catenoid();
    let angles: Vec<f64> = (0..16).map(|j| std::f64::consts::TAU * j as f64 / 16.0).collect();
    c.bench_function("singular_set_catenoid_16rays", |b| {
        b.iter(|| singular_set(&surface, black_box(&angles), (0.25, 4.0), &Default::default()).unwrap())
    });
}

criterion_group!(benches, evaluation, spectral, solvers, geometry);
criterion_main!(benches);
