use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use graph_hopf_bench::fixtures;
use graph_hopf_core::bialgebra::{antipode_forest, contraction_coproduct, isoclass};
use graph_hopf_core::characters::{lambda_chr, LambdaEngine};
use graph_hopf_core::chromatic::{chromatic, ChromaticEngine};
use graph_hopf_core::lattice::AdmissibleLattice;
use graph_hopf_core::wsym::{pchr_nc, phi0_nc};
use graph_hopf_core::canonical_key;

fn chromatic_engines(c: &mut Criterion) {
    let mut group = c.benchmark_group("chromatic");
    for (name, g) in fixtures() {
        for engine in [ChromaticEngine::Partition, ChromaticEngine::Character] {
            group.bench_with_input(BenchmarkId::new(format!("{engine:?}"), name), &g, |b, g| {
                b.iter(|| chromatic(g, engine))
            });
        }
    }
    group.finish();
}

fn lambda_engines(c: &mut Criterion) {
    let mut group = c.benchmark_group("lambda_chr");
    for (name, g) in fixtures().into_iter().filter(|(_, g)| g.n() <= 6) {
        for engine in [LambdaEngine::Derivative, LambdaEngine::Forest] {
            group.bench_with_input(BenchmarkId::new(format!("{engine:?}"), name), &g, |b, g| {
                b.iter(|| lambda_chr(g, engine))
            });
        }
    }
    group.finish();
}

fn structures(c: &mut Criterion) {
    let mut group = c.benchmark_group("structures");
    for (name, g) in fixtures().into_iter().filter(|(_, g)| g.n() <= 6) {
        group.bench_with_input(BenchmarkId::new("canonical_key", name), &g, |b, g| {
            b.iter(|| canonical_key(g))
        });
        group.bench_with_input(BenchmarkId::new("contraction_coproduct", name), &g, |b, g| {
            b.iter(|| contraction_coproduct(&isoclass(g)))
        });
        group.bench_with_input(BenchmarkId::new("lattice", name), &g, |b, g| {
            b.iter(|| AdmissibleLattice::build(g).mobius_bottom_top())
        });
        group.bench_with_input(BenchmarkId::new("antipode_forest", name), &g, |b, g| {
            b.iter(|| antipode_forest(g))
        });
        group.bench_with_input(BenchmarkId::new("pchr_nc", name), &g, |b, g| b.iter(|| pchr_nc(g)));
        group.bench_with_input(BenchmarkId::new("phi0_nc", name), &g, |b, g| b.iter(|| phi0_nc(g)));
    }
    group.finish();
}

criterion_group!(benches, chromatic_engines, lambda_engines, structures);
criterion_main!(benches);
