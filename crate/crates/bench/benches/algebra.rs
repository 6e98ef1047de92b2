use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use wwm_core::clifford::{apply_sequence, parse_gate_sequence};
use wwm_core::scalar::rat;
use wwm_core::weyl::six_tuple;
use wwm_core::{BlochVector, GrassmannElement, WeylState};

fn state() -> WeylState {
    WeylState::from_bloch(&BlochVector::new(rat(1, 2), rat(1, 3), rat(1, 5)).unwrap())
}

fn algebra(c: &mut Criterion) {
    let rho = state().into_symbol();
    let sigma: GrassmannElement = "1/2 + 1/3*i*xi_p xi_q".parse().unwrap();
    c.bench_function("grassmann multiply", |b| b.iter(|| black_box(&rho).multiply(black_box(&sigma))));
    c.bench_function("render and parse symbol", |b| {
        b.iter(|| black_box(&rho).to_string().parse::<GrassmannElement>().unwrap())
    });
}

fn dynamics(c: &mut Criterion) {
    let s = state();
    let seq = parse_gate_sequence("H X Y Z H T1 T2").unwrap();
    c.bench_function("gate sequence", |b| b.iter(|| apply_sequence(black_box(&seq), black_box(&s))));
    c.bench_function("six tuple", |b| b.iter(|| six_tuple(black_box(&s))));
}

criterion_group!(benches, algebra, dynamics);
criterion_main!(benches);
