use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use stagewise::boosters::{run, AlgorithmConfig, TraceMode, Variant};
use stagewise::oracles::{delta_max, solve_lasso};
use stagewise::spectral::analyze;
use stagewise_bench::instance;

fn bench_engines(c: &mut Criterion) {
    let mut group = c.benchmark_group("boost_200_iters");
    for &(n, p) in &[(50usize, 100usize), (50, 500)] {
        let problem = instance(n, p, 0.5);
        let dmax = delta_max(&problem).unwrap();
        let configs = [
            (
                "lsboost",
                AlgorithmConfig::new(Variant::LsBoost { epsilon: 0.5 }, 200),
            ),
            (
                "fse",
                AlgorithmConfig::new(Variant::Fse { epsilon: 0.01 }, 200),
            ),
            (
                "rfs",
                AlgorithmConfig::new(
                    Variant::Rfs {
                        epsilon: 0.01 * dmax,
                        delta: 0.5 * dmax,
                    },
                    200,
                ),
            ),
        ];
        for (name, config) in configs {
            let config = config.with_trace_mode(TraceMode::StatsOnly);
            group.bench_with_input(
                BenchmarkId::new(name, format!("{n}x{p}")),
                &config,
                |b, config| b.iter(|| run(black_box(&problem), config).unwrap()),
            );
        }
    }
    group.finish();
}

fn bench_spectral(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectral_analyze");
    for &(n, p) in &[(50usize, 100usize), (50, 500), (200, 50)] {
        let problem = instance(n, p, 0.3);
        group.bench_function(format!("{n}x{p}"), |b| {
            b.iter(|| analyze(black_box(&problem)).unwrap())
        });
    }
    group.finish();
}

fn bench_lasso(c: &mut Criterion) {
    let mut group = c.benchmark_group("lasso_solve");
    group.sample_size(20);
    for &(n, p) in &[(50usize, 20usize), (50, 100)] {
        let problem = instance(n, p, 0.5);
        let delta = 0.5 * delta_max(&problem).unwrap();
        group.bench_function(format!("{n}x{p}"), |b| {
            b.iter(|| solve_lasso(black_box(&problem), delta, 1e-8).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_engines, bench_spectral, bench_lasso);
criterion_main!(benches);
