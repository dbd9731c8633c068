use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use g2def::deform::solve_deformations;
use g2def::g2::{identity_suite, standard_g2};
use g2def::homogeneous::builtin;
use g2def::par::Exec;
use g2def::rep::{adjoint_module, intertwiner_space};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn bench_intertwiners(c: &mut Criterion) {
    let space = builtin("n11").expect("built-in");
    let data = space.nearly_parallel_data().expect("nearly parallel");
    let module = adjoint_module(&space, 0).expect("su(3) summand");
    let mut group = c.benchmark_group("intertwiner_space_n11_su3");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| intertwiner_space(&module, &space, &data, exec).expect("solves"))
        });
    }
    group.finish();
}

fn bench_deformations(c: &mut Criterion) {
    let space = builtin("n11").expect("built-in");
    let mut group = c.benchmark_group("solve_deformations_n11");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| solve_deformations(&space, exec).expect("solves"))
        });
    }
    group.finish();
}

fn bench_identity_suite(c: &mut Criterion) {
    let frame = standard_g2();
    let mut group = c.benchmark_group("identity_suite");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| identity_suite(&frame, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_intertwiners, bench_deformations, bench_identity_suite);
criterion_main!(benches);
