use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use trinomial_core::{factor_over_q, Poly, Trinomial};

fn classify(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify");
    let cases = [
        ("x^5-341x+780", Trinomial::from_ints(5, 1, -341, 780).unwrap()),
        ("x^7-232x+336", Trinomial::from_ints(7, 1, -232, 336).unwrap()),
        ("x^10-2005x^2-9996", Trinomial::from_ints(10, 2, -2005, -9996).unwrap()),
        ("x^12+128x^3+256", Trinomial::from_ints(12, 3, 128, 256).unwrap()),
        ("x^16+34816x^3-552960", Trinomial::from_ints(16, 3, 34816, -552960).unwrap()),
        ("x^16+x+1", Trinomial::from_ints(16, 1, 1, 1).unwrap()),
    ];
    for (name, t) in &cases {
        g.bench_with_input(BenchmarkId::from_parameter(name), t, |b, t| {
            b.iter(|| black_box(t).classify().unwrap())
        });
    }
    g.finish();
}

fn products(c: &mut Criterion) {
    // x^4 - 10x^2 + 1 splits into linear factors modulo every prime
    let f = Poly::from_ints(&[1, 0, -10, 0, 1]);
    let g = Poly::from_ints(&[-2, 0, 0, 0, 1]);
    let h = &f * &g;
    c.bench_function("factor deg 8 product of quartics", |b| b.iter(|| factor_over_q(black_box(&h)).unwrap()));
    let sq = &(&f * &f) * &Poly::from_ints(&[1, 1]);
    c.bench_function("factor deg 9 with a repeated factor", |b| b.iter(|| factor_over_q(black_box(&sq)).unwrap()));
}

criterion_group!(benches, classify, products);
criterion_main!(benches);
