//! Sequential versus rayon execution of the conditions and the joint pipeline.
//!
//! Without the `parallel` feature both variants run sequentially.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use preorder_core::bounds::BoundMethod;
use preorder_core::conditions::{
    bound_conditions, edge_cut_condition, edge_join_condition, run_joint, subset_condition,
    PipelineConfig, SubsetStrategy,
};
use preorder_core::instance::{generate_synthetic, GeneratorConfig, Instance};
use preorder_core::preorder::ClosedPartial;

fn synthetic(n: usize, alpha: f64) -> Instance {
    let cfg = GeneratorConfig {
        n,
        p_e: 0.5,
        alpha,
        seed: 42,
    };
    generate_synthetic(&cfg).expect("valid config").0
}

fn modes() -> [(&'static str, bool); 2] {
    [("sequential", false), ("parallel", true)]
}

fn conditions(c: &mut Criterion) {
    let mut group = c.benchmark_group("conditions");
    group.sample_size(10);
    for n in [20, 40] {
        let inst = synthetic(n, 0.5);
        let xh = ClosedPartial::empty(n);
        for (mode, parallel) in modes() {
            group.bench_with_input(
                BenchmarkId::new(format!("edge-cut/{mode}"), n),
                &inst,
                |b, inst| b.iter(|| edge_cut_condition(black_box(inst), &xh, true, parallel)),
            );
            group.bench_with_input(
                BenchmarkId::new(format!("edge-join/{mode}"), n),
                &inst,
                |b, inst| b.iter(|| edge_join_condition(black_box(inst), &xh, 20, parallel)),
            );
            group.bench_with_input(
                BenchmarkId::new(format!("bound-strong/{mode}"), n),
                &inst,
                |b, inst| b.iter(|| bound_conditions(black_box(inst), &xh, true, parallel)),
            );
            group.bench_with_input(
                BenchmarkId::new(format!("subset/{mode}"), n),
                &inst,
                |b, inst| {
                    b.iter(|| {
                        subset_condition(
                            black_box(inst),
                            &xh,
                            SubsetStrategy::default(),
                            BoundMethod::Heuristic,
                            parallel,
                        )
                    })
                },
            );
        }
    }
    group.finish();
}

fn pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_joint");
    group.sample_size(10);
    for alpha in [0.3, 0.7] {
        let inst = synthetic(20, alpha);
        for (mode, parallel) in modes() {
            let cfg = PipelineConfig {
                parallel,
                ..Default::default()
            };
            group.bench_with_input(
                BenchmarkId::new(mode, format!("n20-alpha{alpha}")),
                &inst,
                |b, inst| b.iter(|| run_joint(black_box(inst), &cfg).expect("sound run")),
            );
        }
    }
    group.finish();
}

criterion_group!(benches, conditions, pipeline);
criterion_main!(benches);
