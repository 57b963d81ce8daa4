use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use maxinv_core::theorem::Instance;
use maxinv_core::{
    all_subgroups, build_action, catalog, classify, generate_group, hypothesis_holds,
};

fn closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("generate_group");
    for (name, g) in [
        ("S4", catalog::symmetric(4)),
        ("PSL(2,7)", catalog::psl27()),
        (
            "C5xSL(2,3)",
            catalog::direct_product(&[&catalog::cyclic(5), &catalog::sl23()]),
        ),
    ] {
        let gens = g.generators().to_vec();
        group.bench_function(name, |b| {
            b.iter(|| generate_group(black_box(&gens)).unwrap())
        });
    }
    group.finish();
}

fn lattice(c: &mut Criterion) {
    let mut group = c.benchmark_group("all_subgroups");
    group.sample_size(20);
    for (name, g) in [
        ("S4", catalog::symmetric(4)),
        ("SL(2,3)", catalog::sl23()),
        ("S5", catalog::symmetric(5)),
        ("PSL(2,7)", catalog::psl27()),
    ] {
        let g = Arc::new(g);
        group.bench_function(name, |b| b.iter(|| all_subgroups(black_box(&g)).unwrap()));
    }
    group.finish();
}

fn decide(c: &mut Criterion) {
    let mut group = c.benchmark_group("decide");
    group.sample_size(20);
    let g = Arc::new(catalog::direct_product(&[
        &catalog::cyclic(5),
        &catalog::sl23(),
    ]));
    let inst = Instance::new(build_action(&g, Vec::new()).unwrap()).unwrap();
    group.bench_function("hypothesis C5xSL(2,3) p=5", |b| {
        b.iter(|| hypothesis_holds(black_box(&inst), 5).unwrap())
    });
    group.bench_function("classify C5xSL(2,3) p=5", |b| {
        b.iter(|| classify(black_box(&inst), 5).unwrap())
    });
    let s5 = Arc::new(catalog::symmetric(5));
    let inst = Instance::new(build_action(&s5, Vec::new()).unwrap()).unwrap();
    group.bench_function("classify S5 p=2", |b| {
        b.iter(|| classify(black_box(&inst), 2).unwrap())
    });
    group.finish();
}

criterion_group!(benches, closure, lattice, decide);
criterion_main!(benches);
