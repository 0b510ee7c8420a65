use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gx_core::arf::QuadraticForm;
use gx_core::builtin::t_s_sphere;
use gx_core::group::{GroupContext, Triple};
use gx_core::linalg::{smith_normal_form, BitMatrix, Gf2Solver};

fn snf(c: &mut Criterion) {
    let x = t_s_sphere().complex;
    let mut g = c.benchmark_group("snf");
    for k in 0..3 {
        let m = x.coboundary_matrix_any(k);
        g.bench_with_input(BenchmarkId::new("tss2_coboundary", k), &m, |b, m| {
            b.iter(|| smith_normal_form(black_box(m)))
        });
    }
    g.finish();
}

fn gf2(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut g = c.benchmark_group("gf2");
    for n in [64, 256, 512] {
        let rows: Vec<Vec<u8>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..2)).collect()).collect();
        let m = BitMatrix::from_u8(&rows);
        g.bench_with_input(BenchmarkId::new("eliminate", n), &m, |b, m| b.iter(|| Gf2Solver::new(black_box(m))));
    }
    g.finish();
}

fn random_form(rng: &mut ChaCha8Rng, n: usize) -> QuadraticForm {
    let mut b = vec![vec![0u8; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = rng.gen_range(0..2);
            b[i][j] = v;
            b[j][i] = v;
        }
    }
    let q: Vec<u8> = (0..n)
        .map(|i| {
            let v: u8 = rng.gen_range(0..4);
            b[i][i] = v % 2;
            v
        })
        .collect();
    QuadraticForm::new(&b, &q).expect("valid form")
}

fn arf(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut g = c.benchmark_group("arf");
    for n in [8, 12, 16] {
        let f = random_form(&mut rng, n);
        g.bench_with_input(BenchmarkId::new("gauss_sum", n), &f, |b, f| b.iter(|| black_box(f).arf()));
    }
    g.finish();
}

fn tss2_order(c: &mut Criterion) {
    let e = t_s_sphere();
    let g = Triple::from_a(e.z2("c"));
    c.bench_function("tss2_order_of_c", |b| {
        b.iter(|| GroupContext::new(&e.complex).order(black_box(&g), 64).unwrap());
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = snf, gf2, arf, tss2_order
}
criterion_main!(benches);
