use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use lenticulus_bench::{dominant_root, lehmer, salem8};
use lenticulus_core::betashift::{dynamical_degree, renyi_expansion};
use lenticulus_core::equidist::discrepancy;
use lenticulus_core::measures::{constants, mahler};
use lenticulus_core::rewrite::u_beta_coeffs;
use lenticulus_core::rouche::{find_lenticulus, LenticulusOptions, ParryUpper};
use lenticulus_core::trinomial::roots;
use lenticulus_core::IntPolynomial;

fn expansions(c: &mut Criterion) {
    let mut g = c.benchmark_group("renyi_expansion");
    for (name, p) in [("lehmer", lehmer()), ("salem8", salem8())] {
        let beta = dominant_root(&p);
        g.bench_with_input(BenchmarkId::from_parameter(name), &beta, |b, beta| {
            b.iter(|| renyi_expansion(black_box(beta), 100_000).unwrap())
        });
    }
    g.finish();
    let beta = dominant_root(&lehmer());
    c.bench_function("dyg/lehmer", |b| b.iter(|| dynamical_degree(black_box(&beta)).unwrap()));
}

fn trinomial_roots(c: &mut Criterion) {
    let mut g = c.benchmark_group("trinomial_roots");
    g.sample_size(10);
    for n in [71usize, 260, 615] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| roots(black_box(n), 53).unwrap())
        });
    }
    g.finish();
}

fn lenticulus(c: &mut Criterion) {
    let mut g = c.benchmark_group("find_lenticulus");
    g.sample_size(10);
    for n in [260usize, 615] {
        let f = ParryUpper::trinomial(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| find_lenticulus(&f, n, 212, LenticulusOptions::default()).unwrap())
        });
    }
    g.finish();
}

fn measures(c: &mut Criterion) {
    c.bench_function("constants", |b| b.iter(constants));
    let g200 = IntPolynomial::trinomial(200);
    c.bench_function("mahler/G_200", |b| b.iter(|| mahler(black_box(&g200)).unwrap()));
    c.bench_function("discrepancy/G_200", |b| {
        b.iter(|| discrepancy(black_box(&g200), 256).unwrap())
    });
}

fn fracture(c: &mut Criterion) {
    let p = lehmer();
    let exp = renyi_expansion(&dominant_root(&p), 100_000).unwrap();
    c.bench_function("u_beta/lehmer/200", |b| {
        b.iter(|| u_beta_coeffs(black_box(&p), &exp.word, 200).unwrap())
    });
}

criterion_group!(benches, expansions, trinomial_roots, lenticulus, measures, fracture);
criterion_main!(benches);
