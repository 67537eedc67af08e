use criterion::{criterion_group, criterion_main, Criterion};
use dpcodes::cremona::auto5;
use dpcodes::picard::SurfaceType;
use dpcodes::surfaces::{build_dp5, build_dp6, dp5_code, dp6_code, flynn_build, dp4_code};
use std::hint::black_box;

fn build(c: &mut Criterion) {
    c.bench_function("dp5 build q=7", |b| b.iter(|| build_dp5(black_box(7), 0).unwrap()));
    c.bench_function("dp6 build q=7", |b| b.iter(|| build_dp6(black_box(7), 0).unwrap()));
    c.bench_function("dp4 flynn build q=7", |b| b.iter(|| flynn_build(black_box(7), SurfaceType::Four2, 0).unwrap()));
}

fn distance(c: &mut Criterion) {
    let c5 = dp5_code(&build_dp5(7, 0).unwrap()).unwrap();
    let c6 = dp6_code(&build_dp6(5, 0).unwrap()).unwrap();
    let c4 = dp4_code(&flynn_build(7, SurfaceType::Four3, 0).unwrap()).unwrap();
    c.bench_function("min distance dp5 q=7", |b| b.iter(|| c5.min_distance().unwrap()));
    c.bench_function("min distance dp6 q=5", |b| b.iter(|| c6.min_distance().unwrap()));
    c.bench_function("weight distribution dp4 q=7", |b| b.iter(|| c4.weight_distribution().unwrap()));
}

fn automorphism(c: &mut Criterion) {
    let m = build_dp5(7, 0).unwrap();
    c.bench_function("auto5 q=7", |b| b.iter(|| auto5(black_box(&m)).unwrap()));
}

criterion_group!(benches, build, distance, automorphism);
criterion_main!(benches);
