use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use tvsat::engine::{compute_all, KnotExpr, PatternId};
use tvsat::recoupling::tet;
use tvsat::{make_context, ExactMatrix};

fn scalars(c: &mut Criterion) {
    let ctx = make_context(8, None).unwrap();
    let x = &(&ctx.a_pow(3) + &ctx.int(2)) * &ctx.eta();
    let y = &ctx.a_pow(-5) - &ctx.one();
    c.bench_function("scalar mul p=8", |b| b.iter(|| black_box(&x) * black_box(&y)));
    c.bench_function("scalar inv p=8", |b| b.iter(|| black_box(&y).inv().unwrap()));
    c.bench_function("tet p=9 (memoized)", |b| {
        let ctx = make_context(9, None).unwrap();
        b.iter(|| tet(&ctx, 2, 4, 4, 2, 2, 2).unwrap())
    });
}

fn linalg(c: &mut Criterion) {
    let ctx = make_context(5, None).unwrap();
    let rows = (0..6)
        .map(|i| (0..6).map(|j| &ctx.a_pow((i * 7 + j * 3) as i64) * &ctx.int(((i + j) % 3) as i64 - 1)).collect())
        .collect();
    let m = ExactMatrix::from_rows(&ctx, rows).unwrap();
    c.bench_function("charpoly 6x6 p=5", |b| b.iter(|| black_box(&m).charpoly().unwrap()));
    c.bench_function("flat 6x6 p=5", |b| b.iter(|| black_box(&m).flat().unwrap()));
}

fn engine(c: &mut Criterion) {
    let ctx = make_context(5, None).unwrap();
    let mut group = c.benchmark_group("engine p=5");
    group.sample_size(10);
    for pattern in [PatternId::P21, PatternId::P31] {
        let k = KnotExpr::sat(KnotExpr::figure_eight(), pattern);
        group.bench_function(format!("F8*{pattern}"), |b| b.iter(|| compute_all(&ctx, &k).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, scalars, linalg, engine);
criterion_main!(benches);
