use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use pierik_bench::cases;
use pierik_core::ring::{pieri_multiply, special_chain};
use pierik_core::{coeff_direct, coeff_tableau, Engine, KVector, RecursiveEngine, Space};

fn engines(c: &mut Criterion) {
    let mut group = c.benchmark_group("coefficient");
    for case in cases() {
        group.bench_with_input(BenchmarkId::new("direct", case.name), &case, |b, k| {
            b.iter(|| coeff_direct(&k.lambda, black_box(k.p), &k.nu, k.space).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("recursive-cold", case.name), &case, |b, k| {
            b.iter(|| {
                RecursiveEngine::new()
                    .coefficient(&k.lambda, black_box(k.p), &k.nu, k.space)
                    .unwrap()
            })
        });
        if case.space.max_special() <= 7 {
            group.bench_with_input(BenchmarkId::new("tableau", case.name), &case, |b, k| {
                b.iter(|| coeff_tableau(&k.lambda, black_box(k.p), &k.nu, k.space).unwrap())
            });
        }
    }
    group.finish();
}

fn ring(c: &mut Criterion) {
    let mut group = c.benchmark_group("ring");
    group.sample_size(20);
    for space in [Space::rect(4, 5).unwrap(), Space::og(6).unwrap(), Space::lg(6).unwrap()] {
        let unit = KVector::unit(space);
        group.bench_with_input(BenchmarkId::new("pieri_multiply", space), &unit, |b, v| {
            b.iter(|| pieri_multiply(v, black_box(2), Engine::Direct).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("special_chain", space), &space, |b, &s| {
            b.iter(|| special_chain(s, black_box(&[1, 2, 3]), Engine::Recursive).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, engines, ring);
criterion_main!(benches);
