use criterion::{criterion_group, criterion_main, Criterion};
use evenodd::{verify, Exec, SweepConfig, Theorem};

fn bench_sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for theorem in [Theorem::Thm3, Theorem::Thm4, Theorem::Franklin] {
        for (label, exec) in [
            ("sequential", Exec::Sequential),
            ("parallel", Exec::Parallel),
        ] {
            group.bench_function(format!("{theorem}/{label}"), |b| {
                b.iter(|| verify(theorem, &SweepConfig::default(), exec))
            });
        }
    }
    group.finish();
}

fn bench_enumeration(c: &mut Criterion) {
    use evenodd::CompositionClass;
    c.bench_function("signed_count guarded k=3 m=2 size 20", |b| {
        b.iter(|| {
            CompositionClass::ExactSmallGuarded { k: 3, m: 2 }
                .signed_count(20)
                .unwrap()
        })
    });
}

criterion_group!(benches, bench_sweeps, bench_enumeration);
criterion_main!(benches);
