use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use tiled_bench::{integer_matrix, relation_sets};
use tiled_core::{smith_normal_form, FinAbGroup};

fn smith(c: &mut Criterion) {
    let mut group = c.benchmark_group("smith_normal_form");
    for size in [4, 8, 16] {
        let a = integer_matrix(size, size, 9, size as u64);
        group.bench_with_input(BenchmarkId::from_parameter(size), &a, |b, a| b.iter(|| smith_normal_form(black_box(a))));
    }
    group.finish();
}

fn quotients(c: &mut Criterion) {
    let g = FinAbGroup::new(vec![2, 4, 8, 48, 96]).unwrap();
    let sets = relation_sets(&g, 32, 3, 7);
    c.bench_function("quotient_by/rank5", |b| {
        b.iter(|| sets.iter().map(|r| g.quotient_by(black_box(r)).unwrap().power_quotient_size(12)).sum::<u64>())
    });
}

criterion_group!(benches, smith, quotients);
criterion_main!(benches);
