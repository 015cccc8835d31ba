use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use fueter_bench::{axial_factor, dense_multivector, lifted_polynomial, spatial_inputs};
use fueter_core::axial::HolomorphicSeed;
use fueter_core::fueter::{fueter_axial, fueter_spatial};
use fueter_core::spherical::fischer_decompose;

fn bench_geometric_product(c: &mut Criterion) {
    let a = dense_multivector(5, 1);
    let b = dense_multivector(5, 7);
    c.bench_function("geometric_product m=5 dense", |bench| {
        bench.iter(|| black_box(&a).geometric_product(black_box(&b)).unwrap())
    });
}

fn bench_laplacian_power(c: &mut Criterion) {
    let poly = lifted_polynomial(3);
    c.bench_function("laplacian_power n=3 m=3", |bench| {
        bench.iter(|| black_box(&poly).laplacian_power(3))
    });
}

fn bench_fueter_spatial(c: &mut Criterion) {
    let (seed, factor) = spatial_inputs(3, 1, 3);
    c.bench_function("fueter_spatial m=3 k=1 z^3", |bench| {
        bench.iter(|| fueter_spatial(black_box(&seed), black_box(&factor), 3).unwrap())
    });
}

fn bench_fischer_decompose(c: &mut Criterion) {
    let p = fueter_core::spherical::random_homogeneous(3, 5, 2024);
    let mut group = c.benchmark_group("fischer");
    group.sample_size(20);
    group.bench_function("fischer_decompose m=5 k=3", |bench| {
        bench.iter(|| fischer_decompose(black_box(&p), 3).unwrap())
    });
    group.finish();
}

fn bench_fueter_axial(c: &mut Criterion) {
    let factor = axial_factor(3, 2);
    let seed = HolomorphicSeed::z_power(3);
    let mut group = c.benchmark_group("axial");
    group.sample_size(10);
    group.bench_function("fueter_axial m=3 k=2 z^3", |bench| {
        bench.iter(|| fueter_axial(black_box(&seed), black_box(&factor), 3).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_geometric_product,
    bench_laplacian_power,
    bench_fueter_spatial,
    bench_fischer_decompose,
    bench_fueter_axial
);
criterion_main!(benches);
