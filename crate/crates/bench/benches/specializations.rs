use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use shiftedq::bijection::forward;
use shiftedq::qfunctions::ch_sym_degree;
use shiftedq::specializations::{q_bigraded, q_principal_hook, q_principal_tableau};
use shiftedq::tableaux::enumerate_marked;
use shiftedq::StrictPartition;

fn shape(parts: &[usize]) -> StrictPartition {
    StrictPartition::new(parts.to_vec()).unwrap()
}

fn principal(c: &mut Criterion) {
    let mut g = c.benchmark_group("principal");
    for parts in [&[4, 2, 1][..], &[5, 3], &[4, 3, 1]] {
        let l = shape(parts);
        g.bench_with_input(BenchmarkId::new("hook", &l), &l, |b, l| {
            b.iter(|| q_principal_hook(black_box(l), 21))
        });
        g.bench_with_input(BenchmarkId::new("tableau", &l), &l, |b, l| {
            b.iter(|| q_principal_tableau(black_box(l), 21).unwrap())
        });
    }
    g.finish();
}

fn bigraded(c: &mut Criterion) {
    let l = shape(&[3, 2, 1]);
    c.bench_function("bigraded (3,2,1) to t^10", |b| b.iter(|| q_bigraded(black_box(&l), 11)));
}

fn bijection(c: &mut Criterion) {
    let l = shape(&[4, 2, 1]);
    let all = enumerate_marked(&l, 3);
    c.bench_function("forward on every (4,2,1) tableau, letters <= 3", |b| {
        b.iter(|| all.iter().map(|t| forward(t).unwrap().0).collect::<Vec<_>>())
    });
}

fn characteristic(c: &mut Criterion) {
    c.bench_function("characteristic n = 5, degree 6", |b| {
        b.iter(|| ch_sym_degree(black_box(5), 6).unwrap())
    });
}

criterion_group!(benches, principal, bigraded, bijection, characteristic);
criterion_main!(benches);
