use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hvdc_core::construct::horizontal_composite;
use hvdc_core::corpus;
use hvdc_core::kan::pointwise_lan;
use hvdc_core::monoidal::{day_convolution, yoneda_monoidal_structure, DEFAULT_ARITY};
use hvdc_core::random::{random_functor, random_presheaf, random_profunctor, seeded};
use hvdc_core::Profunctor;

const CATEGORIES: [&str; 3] = ["walking_arrow", "chain3", "square"];

fn composite(c: &mut Criterion) {
    let mut g = c.benchmark_group("horizontal_composite");
    for name in CATEGORIES {
        let a = corpus::category(name).unwrap();
        let mut rng = seeded(1);
        let path = vec![random_profunctor(&mut rng, &a, &a, 2), random_profunctor(&mut rng, &a, &a, 2)];
        g.bench_with_input(BenchmarkId::from_parameter(name), &path, |b, p| b.iter(|| horizontal_composite(p).unwrap()));
    }
    g.finish();
}

fn lan(c: &mut Criterion) {
    let mut g = c.benchmark_group("pointwise_lan");
    for name in CATEGORIES {
        let a = corpus::category(name).unwrap();
        let d = random_functor(&mut seeded(2), &a, &a).unwrap();
        let j = Profunctor::hom(&a);
        g.bench_with_input(BenchmarkId::from_parameter(name), &(d, j), |b, (d, j)| b.iter(|| pointwise_lan(d, j).unwrap()));
    }
    g.finish();
}

fn day(c: &mut Criterion) {
    let mut g = c.benchmark_group("day_convolution");
    for name in ["z2", "arrow_max", "z3"] {
        let Some(m) = corpus::monoidal_structure(name, DEFAULT_ARITY) else { continue };
        let mut rng = seeded(3);
        let ps = vec![random_presheaf(&mut rng, m.base(), 2), random_presheaf(&mut rng, m.base(), 2)];
        g.bench_with_input(BenchmarkId::from_parameter(name), &ps, |b, ps| b.iter(|| day_convolution(&m, ps).unwrap()));
    }
    g.finish();
}

fn yoneda_structure(c: &mut Criterion) {
    let mut g = c.benchmark_group("yoneda_monoidal_structure");
    g.sample_size(10);
    for name in ["z2", "arrow_max"] {
        let m = corpus::monoidal_structure(name, DEFAULT_ARITY).unwrap();
        g.bench_function(name, |b| b.iter(|| yoneda_monoidal_structure(&m).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, composite, lan, day, yoneda_structure);
criterion_main!(benches);
