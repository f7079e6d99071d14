use criterion::{black_box, criterion_group, criterion_main, Criterion};
use diskmod::{
    check_min_theorem, find_min_on_circle, find_min_on_disk, PowerSeries, DEFAULT_TOL,
};
use diskmod_bench::{example_family, exp_function, exponent};

fn series_ops(c: &mut Criterion) {
    let e = PowerSeries::exp(&exponent(2), 32).unwrap();
    c.bench_function("invert_series_32", |b| {
        b.iter(|| black_box(&e).invert(32).unwrap())
    });
    c.bench_function("exp_series_32", |b| {
        b.iter(|| PowerSeries::exp(black_box(&exponent(1)), 32).unwrap())
    });
}

fn search(c: &mut Criterion) {
    let fam = example_family();
    c.bench_function("min_on_circle_example", |b| {
        b.iter(|| find_min_on_circle(black_box(&fam), 0.7).unwrap())
    });
    let f = exp_function(3);
    c.bench_function("min_on_disk_exp_deg16", |b| {
        b.iter(|| find_min_on_disk(black_box(&f), 0.8).unwrap())
    });
    let z0 = find_min_on_disk(&f, 0.8).unwrap().z0;
    c.bench_function("check_min_theorem", |b| {
        b.iter(|| check_min_theorem(black_box(&f), 3, z0, DEFAULT_TOL).unwrap())
    });
}

criterion_group!(benches, series_ops, search);
criterion_main!(benches);
