use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kansets::chain::{homology, normalized_chains, smith_normal_form};
use kansets::covers::kan_check;
use kansets::io::catalog;
use kansets_bench::{dense_matrix, spaces};

fn smith(c: &mut Criterion) {
    let mut group = c.benchmark_group("smith");
    for n in [8, 16, 32] {
        let m = dense_matrix(n, 7);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| smith_normal_form(m)));
    }
    group.finish();
}

fn integral_homology(c: &mut Criterion) {
    let mut group = c.benchmark_group("homology");
    for (name, k) in spaces() {
        let chains = normalized_chains(&k);
        let top = k.top_dim().unwrap();
        group.bench_function(name, |b| b.iter(|| homology(&chains, top).unwrap()));
    }
    group.finish();
}

fn kan(c: &mut Criterion) {
    let mut group = c.benchmark_group("kan");
    group.sample_size(10);
    for name in ["delta:2", "sphere:2", "discrete:3"] {
        let k = catalog(name).unwrap();
        group.bench_function(name, |b| b.iter(|| kan_check(&k, 2)));
    }
    group.finish();
}

criterion_group!(benches, smith, integral_homology, kan);
criterion_main!(benches);
