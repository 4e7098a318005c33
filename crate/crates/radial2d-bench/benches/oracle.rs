//! Hot paths of the verification oracle: operator assembly, Sturm-bisection
//! eigenvalues at production grid sizes, adaptive quadrature, and the
//! closed-form spectrum itself as a baseline.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use radial2d::ansatz::{energy, wavefunction};
use radial2d::oracle::{build_operator, lowest_eigenvalue, quadrature_norm, QuadratureControls};
use radial2d::{AngularMomentum, MolecularParams, PhysicalContext, PotentialSpec, RadialGrid};

fn kratzer_de2_re1() -> PotentialSpec {
    let mp = MolecularParams::new(2.0, 1.0).expect("valid molecular parameters");
    PotentialSpec::kratzer_from_molecular(&mp)
}

fn bench_build_operator(c: &mut Criterion) {
    let ctx = PhysicalContext::natural();
    let spec = kratzer_de2_re1();
    let grid = RadialGrid::new(1e-3, 12.0, 20_001).expect("valid grid");
    c.bench_function("build_operator/n=20001", |b| {
        b.iter(|| build_operator(black_box(&spec), &ctx, AngularMomentum(0), &grid))
    });
}

fn bench_lowest_eigenvalue(c: &mut Criterion) {
    let ctx = PhysicalContext::natural();
    let spec = kratzer_de2_re1();
    let m = AngularMomentum(0);
    let closed = energy(&spec, &ctx, m).expect("closed-form energy");
    let tol = 1e-12 * closed.abs().max(1.0);

    let mut group = c.benchmark_group("lowest_eigenvalue");
    for n in [2_001usize, 20_001] {
        let grid = RadialGrid::new(1e-3, 12.0, n).expect("valid grid");
        let operator = build_operator(&spec, &ctx, m, &grid);
        group.bench_with_input(BenchmarkId::from_parameter(n), &operator, |b, op| {
            b.iter(|| lowest_eigenvalue(black_box(op), tol).expect("bisection converges"))
        });
    }
    group.finish();
}

fn bench_quadrature_norm(c: &mut Criterion) {
    let ctx = PhysicalContext::natural();
    let spec = kratzer_de2_re1();
    let evaluator = wavefunction(&spec, &ctx, AngularMomentum(3)).expect("bound state");
    let controls = QuadratureControls::default();
    c.bench_function("quadrature_norm/m=3", |b| {
        b.iter(|| quadrature_norm(black_box(&evaluator), &controls).expect("certified norm"))
    });
}

fn bench_closed_form_spectrum(c: &mut Criterion) {
    let ctx = PhysicalContext::natural();
    let spec = kratzer_de2_re1();
    c.bench_function("closed_form_spectrum/m=0..=5", |b| {
        b.iter(|| {
            let mut total = 0.0;
            for m in 0..=5 {
                total += energy(black_box(&spec), &ctx, AngularMomentum(m))
                    .expect("closed-form energy");
            }
            total
        })
    });
}

criterion_group!(
    benches,
    bench_build_operator,
    bench_lowest_eigenvalue,
    bench_quadrature_norm,
    bench_closed_form_spectrum
);
criterion_main!(benches);
