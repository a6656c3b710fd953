use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use mixlat_core::{
    audit_sup_claims, check_law, env_up, gen_abs, random_ray_fixtures, Element, SpaceHandle,
};

fn envelopes(c: &mut Criterion) {
    let ray = random_ray_fixtures(3).unwrap().remove(3);
    let (u, v) = (
        Element::new(vec![1.0, -2.0, 0.5, 3.0, -1.0]),
        Element::new(vec![-1.0, 2.0, 1.5, 0.0, 4.0]),
    );
    c.bench_function("env_up ray n=5 k=8", |b| {
        b.iter(|| env_up(&ray, black_box(&u), black_box(&v)).unwrap())
    });

    let grid = SpaceHandle::grid(200).unwrap();
    let f = Element::new((0..=200).map(|i| (i as f64 * 0.37).sin()).collect());
    let g = Element::new((0..=200).map(|i| (i as f64 * 0.11).cos()).collect());
    c.bench_function("env_up grid m=200", |b| {
        b.iter(|| env_up(&grid, black_box(&f), black_box(&g)).unwrap())
    });
    c.bench_function("gen_abs grid m=200", |b| {
        b.iter(|| gen_abs(&grid, black_box(&f)).unwrap())
    });
}

fn checks(c: &mut Criterion) {
    let mut group = c.benchmark_group("checks");
    group.sample_size(10);
    let e2 = SpaceHandle::e2();
    group.bench_function("check_law L-T24c e2 1e4", |b| {
        b.iter(|| check_law(&e2, "L-T24c", 10_000, 0, 1e-9).unwrap())
    });
    let g3 = SpaceHandle::grid(2).unwrap();
    group.bench_function("audit bound 4", |b| {
        b.iter(|| audit_sup_claims(&g3, 4).unwrap())
    });
    group.finish();
}

criterion_group!(benches, envelopes, checks);
criterion_main!(benches);
