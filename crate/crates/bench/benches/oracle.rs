use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;
use vsdo_bench::workloads;
use vsdo_core::{SzProvider, Vsdo};

fn build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build");
    group.sample_size(10);
    for (label, g) in workloads(&[500, 1000, 2000]) {
        group.throughput(Throughput::Elements(g.m() as u64));
        for provider in [SzProvider::Exact, SzProvider::Fast] {
            group.bench_with_input(BenchmarkId::new(provider.as_str(), &label), &g, |b, g| {
                b.iter(|| Vsdo::build(g, 0, 0.25, provider).unwrap())
            });
        }
    }
    group.finish();
}

fn query(c: &mut Criterion) {
    let mut group = c.benchmark_group("query");
    for (label, g) in workloads(&[1000, 4000]) {
        let o = Vsdo::build(&g, 0, 0.25, SzProvider::Exact).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let n = g.n();
        let pairs: Vec<(usize, usize)> = (0..1024)
            .map(|_| (rng.gen_range(1..n), rng.gen_range(0..n)))
            .collect();
        group.throughput(Throughput::Elements(pairs.len() as u64));
        group.bench_function(&label, |b| {
            b.iter(|| {
                for &(x, t) in &pairs {
                    black_box(o.query(x, t).unwrap());
                }
            })
        });
    }
    group.finish();
}

criterion_group!(benches, build, query);
criterion_main!(benches);
