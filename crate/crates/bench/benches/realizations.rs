use bhr_core::growth::{multi_grow, GrowthSchedule};
use bhr_core::search::{brute_force, local_search};
use bhr_core::seeds::verify_all_seeds;
use bhr_core::{growth_points, solve, Certificate, HamPath, LengthMultiset, SearchConfig, SolveOptions};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn ms(s: &str) -> LengthMultiset {
    s.parse().unwrap()
}

fn seeds(c: &mut Criterion) {
    c.bench_function("verify_all_seeds", |b| b.iter(verify_all_seeds));
}

fn growth(c: &mut Criterion) {
    let path = HamPath::new(vec![0, 3, 6, 2, 1, 13, 10, 11, 14, 12, 9, 8, 5, 4, 7]).unwrap();
    let points = growth_points(&path);
    let cert = Certificate::from_path(path, points).unwrap();
    let mut g = c.benchmark_group("multi_grow");
    for n in [4usize, 16, 64] {
        let schedule: GrowthSchedule = format!("1*{n} 3*{n}").parse().unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &schedule, |b, s| {
            b.iter(|| multi_grow(black_box(&cert), s).unwrap())
        });
    }
    g.finish();
}

fn solvers(c: &mut Criterion) {
    let opts = SolveOptions::default();
    let mut g = c.benchmark_group("solve");
    for l in ["1^4 2^9 3^17 4", "1^3 3^18 6^10", "1^9 4^20 5^31", "1^8 8^60 16^12"] {
        let target = ms(l);
        g.bench_with_input(BenchmarkId::from_parameter(l), &target, |b, t| {
            b.iter(|| solve(black_box(t), &opts).unwrap())
        });
    }
    g.finish();
}

fn search(c: &mut Criterion) {
    let cfg = SearchConfig::default();
    let mut g = c.benchmark_group("local_search");
    for l in ["1^3 2^4 3^5 4^2", "1^4 2^6 3^8 4^6 5^5", "2^10 3^10 5^10 7^9"] {
        let target = ms(l);
        g.bench_with_input(BenchmarkId::from_parameter(l), &target, |b, t| {
            b.iter(|| local_search(black_box(t), &cfg).unwrap())
        });
    }
    g.finish();

    let mut g = c.benchmark_group("brute_force");
    g.sample_size(10);
    for l in ["1^2 2^3 3^3 4^3", "2^4 3^4 4^4 6", "2^4 4^5 6^4"] {
        let target = ms(l);
        g.bench_with_input(BenchmarkId::from_parameter(l), &target, |b, t| {
            b.iter(|| brute_force(black_box(t), None, 14).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, seeds, growth, solvers, search);
criterion_main!(benches);
