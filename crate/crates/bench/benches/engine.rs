use criterion::{black_box, criterion_group, criterion_main, Criterion};
use toric_core::classify::CoeffBox;
use toric_core::clique::Graph;
use toric_core::{
    cohomology, enumerate_biacyclic, is_biacyclic, verify_counterexample, CompatibilityGraph,
    Divisor, NamedSurface, PicClass, VerifyOptions,
};

fn scan(c: &mut Criterion) {
    let x = NamedSurface::KingCounterexample.build();
    let small = Divisor::new(&x, vec![4, 7, 11, 4, 2, 0, 0]).unwrap();
    let large = Divisor::new(&x, vec![40, -70, 110, 40, 20, -30, 9]).unwrap();
    c.bench_function("cohomology/small", |b| {
        b.iter(|| cohomology(black_box(&small)))
    });
    c.bench_function("cohomology/large", |b| {
        b.iter(|| cohomology(black_box(&large)))
    });
    c.bench_function("is_biacyclic/c10", |b| {
        let d = Divisor::from_free(&x, &[3, 6, 9, 3, 2]).unwrap();
        b.iter(|| is_biacyclic(black_box(&d)))
    });
}

fn enumeration(c: &mut Criterion) {
    let x = NamedSurface::KingCounterexample.build();
    let bx = CoeffBox::king(6, 2);
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("king box 6", |b| {
        b.iter(|| enumerate_biacyclic(&x, black_box(&bx), None).unwrap())
    });
    group.finish();
}

fn cliques(c: &mut Criterion) {
    let x = NamedSurface::KingCounterexample.build();
    let vertices: Vec<PicClass<'_>> = enumerate_biacyclic(&x, &CoeffBox::king(4, 2), None)
        .unwrap()
        .into_iter()
        .filter(|p| p.free_coeffs().iter().any(|&v| v != 0))
        .collect();
    let graph = CompatibilityGraph::build(vertices).unwrap();
    let mut group = c.benchmark_group("clique");
    group.sample_size(10);
    group.bench_function("compatibility graph max clique", |b| {
        b.iter(|| graph.graph().max_clique())
    });
    let dense = Graph::from_fn(60, |i, j| (i * 7 + j * 13) % 5 != 0);
    group.bench_function("dense 60 vertices 6-cliques", |b| {
        b.iter(|| dense.has_clique_of_size(black_box(6)))
    });
    group.finish();
}

fn certificate(c: &mut Criterion) {
    let mut group = c.benchmark_group("certificate");
    group.sample_size(10);
    group.bench_function("verify default", |b| {
        b.iter(|| verify_counterexample(&VerifyOptions::default()).unwrap())
    });
    group.finish();
}

criterion_group!(benches, scan, enumeration, cliques, certificate);
criterion_main!(benches);
