use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qtriangle::{build_double, build_hopf, build_r, classify, normalize_qt, set_solution, verify_qt};
use qtriangle_bench::{factorization, fixtures};

fn hopf(c: &mut Criterion) {
    let mut group = c.benchmark_group("hopf");
    for f in fixtures() {
        group.bench_with_input(BenchmarkId::new("build", f.label), &f.uf, |b, uf| b.iter(|| build_hopf(uf)));
        let h = build_hopf(&f.uf);
        group.bench_with_input(BenchmarkId::new("axioms", f.label), &h, |b, h| b.iter(|| h.verify_hopf_axioms()));
    }
    group.finish();
}

fn classification(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    for f in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(f.label), &f.uf, |b, uf| b.iter(|| classify(uf)));
    }
    let double = build_double(&factorization("S3", &[0, 1, 2], &[0, 3])).unwrap();
    group.bench_function("double(S3)", |b| b.iter(|| classify(&double)));
    group.finish();
}

fn per_structure(c: &mut Criterion) {
    let mut group = c.benchmark_group("structure");
    for f in fixtures() {
        let Some(p) = classify(&f.uf).into_iter().last() else { continue };
        let h = build_hopf(&f.uf);
        let r = build_r(&f.uf, &p.xi, &p.eta).unwrap();
        group.bench_function(BenchmarkId::new("verify_qt", f.label), |b| b.iter(|| verify_qt(&h, &r)));
        group.bench_function(BenchmarkId::new("normalize", f.label), |b| {
            b.iter(|| normalize_qt(&f.uf, &p.xi, &p.eta).unwrap())
        });
        group.bench_function(BenchmarkId::new("set_solution", f.label), |b| {
            b.iter(|| set_solution(&f.uf, &p.xi, &p.eta).unwrap())
        });
    }
    group.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = hopf, classification, per_structure
}
criterion_main!(benches);
