//! Sequential vs rayon for the exhaustive sweeps.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use treechar_core::algebra::{Fp, Fp2, Place, Prime, QuadExt};
use treechar_core::hausdorff::injectivity_suite;
use treechar_core::par::Exec;
use treechar_core::pipeline::{residual_stage, sample_reps, trace_stage};
use treechar_core::surface::enumerate_points;
use treechar_core::tree::{ball_min_displacement, iota_pair_product};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn sweeps(c: &mut Criterion) {
    let p5 = Prime::new(5).unwrap();
    let p7 = Prime::new(7).unwrap();
    let mut g = c.benchmark_group("sweeps");
    g.sample_size(10);
    let reps = sample_reps(p5, 8, &mut ChaCha8Rng::seed_from_u64(1));
    let xy = iota_pair_product(p5);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new("enumerate_points_F49", name), &exec, |b, &e| {
            b.iter(|| enumerate_points::<QuadExt<Fp>>(&Fp2::context(p7), e).unwrap().len())
        });
        g.bench_with_input(BenchmarkId::new("injectivity_len12", name), &exec, |b, &e| {
            b.iter(|| injectivity_suite(12, p5, e).checked)
        });
        g.bench_with_input(BenchmarkId::new("trace_len7", name), &exec, |b, &e| b.iter(|| trace_stage(p5, 7, &reps, e).passed));
        g.bench_with_input(BenchmarkId::new("residual_len6", name), &exec, |b, &e| {
            b.iter(|| residual_stage(p5, 6, 8, e).certificates.len())
        });
        g.bench_with_input(BenchmarkId::new("ball_displacement_r4", name), &exec, |b, &e| {
            b.iter(|| ball_min_displacement(&xy, &Place::origin(p5), 4, e))
        });
    }
    g.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
