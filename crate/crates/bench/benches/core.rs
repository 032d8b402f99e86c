use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use lgp_core::algorithm1::{parse_candidates, run_algorithm1, setup, verify_candidates};
use lgp_core::arith::{discriminant, ResultantStrategy};
use lgp_core::density::{prime_sieve, sampled_density};
use lgp_core::dynatomic::{disc_phi5_sample, dynatomic, PolyMap, X};
use lgp_core::fixtures::APPENDIX_5_2;
use lgp_core::perm::centralizer_of_pi;
use lgp_core::MPoly;

fn arithmetic(c: &mut Criterion) {
    let family = PolyMap::quadratic_family();
    c.bench_function("dynatomic phi5 generic", |b| b.iter(|| dynatomic(black_box(&family), 5).unwrap()));
    let phi4 = dynatomic(&family, 4).unwrap().phi;
    let mut g = c.benchmark_group("disc phi4");
    g.sample_size(10);
    for (label, s) in [("subresultant", ResultantStrategy::Subresultant), ("interpolation", ResultantStrategy::Interpolation)] {
        g.bench_function(label, |b| b.iter(|| discriminant(black_box(&phi4), X, s).unwrap()));
    }
    g.finish();
    let mut g = c.benchmark_group("disc phi5");
    g.sample_size(10);
    g.bench_function("c = 3", |b| b.iter(|| disc_phi5_sample(black_box(3), ResultantStrategy::Subresultant).unwrap()));
    g.finish();
}

fn groups(c: &mut Criterion) {
    c.bench_function("centralizer (5,2) order", |b| b.iter(|| centralizer_of_pi(5, 6).order()));
    c.bench_function("algorithm1 (3,2)", |b| b.iter(|| run_algorithm1(black_box(3), 2).unwrap()));
    let mut g = c.benchmark_group("algorithm1 slow");
    g.sample_size(10);
    g.bench_function("(4,2)", |b| b.iter(|| run_algorithm1(4, 2).unwrap()));
    let (degree, ..) = setup(5, 2).unwrap();
    let cands = parse_candidates(APPENDIX_5_2, degree).unwrap();
    g.bench_function("verify (5,2) candidates", |b| b.iter(|| verify_candidates(5, 2, black_box(&cands)).unwrap()));
    g.finish();
}

fn density(c: &mut Criterion) {
    c.bench_function("prime sieve 1e6", |b| b.iter(|| prime_sieve(black_box(1_000_000)).unwrap()));
    let p = MPoly::parse("x^8 - 4x^7 - 16x^6 + 84x^5 - 6x^4 - 364x^3 + 584x^2 - 836x + 1021").unwrap();
    let mut g = c.benchmark_group("sampled density");
    g.sample_size(10);
    g.bench_function("degree 8 to 1e5", |b| b.iter(|| sampled_density(black_box(&p), 100_000).unwrap()));
    g.finish();
}

criterion_group!(benches, arithmetic, groups, density);
criterion_main!(benches);
