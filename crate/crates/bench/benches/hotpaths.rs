use criterion::{criterion_group, criterion_main, Criterion};
use coxlab::{
    bfs_by_length, bfs_full_group, contains_global_321, positive_roots_up_to_height,
    reduced_words, root_system_for, Element, Family, GroupSpec, RootVariant, DEFAULT_BUDGET,
};
use std::hint::black_box;

fn sp(f: Family, n: usize) -> GroupSpec {
    GroupSpec::new(f, n).unwrap()
}

fn bench_bfs(c: &mut Criterion) {
    c.bench_function("bfs_full_b3", |b| {
        b.iter(|| bfs_full_group(black_box(sp(Family::B, 3)), DEFAULT_BUDGET).unwrap())
    });
    c.bench_function("bfs_affc2_len10", |b| {
        b.iter(|| bfs_by_length(black_box(sp(Family::AffineC, 2)), 10, DEFAULT_BUDGET).unwrap())
    });
}

fn bench_reduced_words(c: &mut Criterion) {
    let longest = Element::from_window(sp(Family::A, 5), &[5, 4, 3, 2, 1]).unwrap();
    c.bench_function("reduced_words_a5_longest", |b| {
        b.iter(|| reduced_words(black_box(&longest), None))
    });
}

fn bench_patterns(c: &mut Criterion) {
    let census = bfs_by_length(sp(Family::AffineA, 3), 8, DEFAULT_BUDGET).unwrap();
    c.bench_function("global_321_affa3_len8", |b| {
        b.iter(|| {
            census
                .elements()
                .filter(|(_, w)| contains_global_321(black_box(w)).is_none())
                .count()
        })
    });
}

fn bench_roots(c: &mut Criterion) {
    let rs = root_system_for(sp(Family::AffineC, 2), RootVariant::ShortEnds);
    c.bench_function("roots_affc2_height12", |b| {
        b.iter(|| positive_roots_up_to_height(black_box(&rs), 12, DEFAULT_BUDGET).unwrap())
    });
}

criterion_group!(
    benches,
    bench_bfs,
    bench_reduced_words,
    bench_patterns,
    bench_roots
);
criterion_main!(benches);
