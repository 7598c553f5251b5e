//! Parallel vs sequential grid evaluation.
//!
//! With the default `parallel` feature, `evaluate_grid` and `wigner_grid`
//! fan grid points out over rayon; the `*_seq` paths run the same
//! per-point code on one thread. Run with `cargo bench -p ncbell`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ncbell::{
    evaluate_grid, evaluate_grid_seq, run_checks, wigner_grid, wigner_grid_seq, Axis, NCParams,
    SqueezeSpec, SweepConfig,
};

fn sweep_config(r_steps: usize) -> SweepConfig {
    SweepConfig {
        r_min: 0.05,
        r_max: 2.0,
        r_steps,
        theta_eta_pairs: vec![
            (0.0, 0.0),
            (0.1, 0.1),
            (0.2, 0.1),
            (0.5, 0.5),
            (0.9, 0.9),
            (1e-3, 1e-6),
        ],
        ode_steps: 1000,
        tolerance: None,
        output_path: "bench-unused.csv".into(),
    }
}

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep_grid");
    for r_steps in [100, 400, 1600] {
        let config = sweep_config(r_steps);
        let rows = r_steps * config.theta_eta_pairs.len();
        group.throughput(criterion::Throughput::Elements(rows as u64));
        group.bench_with_input(BenchmarkId::new("parallel", rows), &config, |b, config| {
            b.iter(|| evaluate_grid(config).unwrap())
        });
        group.bench_with_input(
            BenchmarkId::new("sequential", rows),
            &config,
            |b, config| b.iter(|| evaluate_grid_seq(config).unwrap()),
        );
    }
    group.finish();
}

fn bench_wigner(c: &mut Criterion) {
    let spec = SqueezeSpec::new(0.5).unwrap();
    let p = NCParams::new(0.2, 0.1).unwrap();
    let mut group = c.benchmark_group("wigner_grid");
    for samples in [64usize, 256] {
        group.throughput(criterion::Throughput::Elements((samples * samples) as u64));
        group.bench_with_input(
            BenchmarkId::new("parallel", samples),
            &samples,
            |b, &samples| b.iter(|| wigner_grid(&spec, &p, (Axis::X, Axis::Y), 3.0, samples)),
        );
        group.bench_with_input(
            BenchmarkId::new("sequential", samples),
            &samples,
            |b, &samples| b.iter(|| wigner_grid_seq(&spec, &p, (Axis::X, Axis::Y), 3.0, samples)),
        );
    }
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let config = SweepConfig {
        r_steps: 8,
        ode_steps: 2000,
        ..sweep_config(8)
    };
    c.bench_function("verify_suite_small", |b| {
        b.iter(|| run_checks(&config).unwrap())
    });
}

criterion_group!(benches, bench_sweep, bench_wigner, bench_verify);
criterion_main!(benches);
