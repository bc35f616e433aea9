use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use cubesym_core::constructions::{fq_det_set, fq_dist_class, hamming_det_number};
use cubesym_core::oracle::oracle_determining_number;
use cubesym_core::{automorphism_group, build_family, search_automorphisms, FamilySpec, Solver};

fn generate(c: &mut Criterion) {
    let mut g = c.benchmark_group("generate");
    for spec in [FamilySpec::Hypercube { n: 12 }, FamilySpec::Augmented { n: 10 }, FamilySpec::Hamming { m: 4, n: 5 }] {
        g.bench_with_input(BenchmarkId::from_parameter(&spec), &spec, |b, s| b.iter(|| build_family(black_box(s))));
    }
    g.finish();
}

fn groups(c: &mut Criterion) {
    let mut g = c.benchmark_group("automorphisms");
    for spec in [FamilySpec::LocallyTwisted { n: 7 }, FamilySpec::HypercubePower { n: 6, k: 2 }, FamilySpec::Folded { n: 6 }] {
        let graph = Arc::new(build_family(&spec).unwrap());
        g.bench_with_input(BenchmarkId::new("search", &spec), &graph, |b, gr| {
            b.iter(|| search_automorphisms(Arc::clone(gr)).unwrap().order().unwrap())
        });
    }
    g.finish();
}

fn parameters(c: &mut Criterion) {
    let mut g = c.benchmark_group("parameters");
    g.sample_size(10);
    for spec in [FamilySpec::Hypercube { n: 6 }, FamilySpec::Folded { n: 6 }, FamilySpec::Enhanced { n: 5, k: 2 }] {
        let group = automorphism_group(Arc::new(build_family(&spec).unwrap())).unwrap();
        g.bench_with_input(BenchmarkId::new("det", &spec), &group, |b, gr| {
            b.iter(|| Solver::new(gr).determining_number().unwrap().value)
        });
        g.bench_with_input(BenchmarkId::new("dist", &spec), &group, |b, gr| {
            b.iter(|| Solver::new(gr).distinguishing_number().unwrap().value)
        });
        g.bench_with_input(BenchmarkId::new("cost", &spec), &group, |b, gr| b.iter(|| Solver::new(gr).cost().unwrap().value));
    }
    let q4 = build_family(&FamilySpec::Hypercube { n: 4 }).unwrap();
    g.bench_function("oracle det Q4", |b| b.iter(|| oracle_determining_number(black_box(&q4)).unwrap().value));
    g.finish();
}

fn constructions(c: &mut Criterion) {
    let mut g = c.benchmark_group("constructions");
    g.sample_size(10);
    g.bench_function("fq_det_set 12", |b| b.iter(|| fq_det_set(black_box(12)).unwrap()));
    g.bench_function("fq_dist_class 10", |b| b.iter(|| fq_dist_class(black_box(10)).unwrap()));
    g.bench_function("hamming_det_number 8 1e6", |b| b.iter(|| hamming_det_number(8, black_box(1_000_000)).unwrap()));
    g.finish();
}

criterion_group!(benches, generate, groups, parameters, constructions);
criterion_main!(benches);
