use arch_constants::{pre_class, pre_class_with, psi_from_tables, Exec, Tuple};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gt_core::Weight;

fn bench_psi(c: &mut Criterion) {
    let t = Tuple::new(Weight(vec![1, 0, -1]), 0, Weight(vec![1, 0]), 0, 0);
    let pre = pre_class(&t.lambda, t.w).unwrap();
    let pre_p = pre_class(&t.mu, t.wp).unwrap();
    let mut g = c.benchmark_group("psi_pairing");
    g.sample_size(10);
    for (name, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel { jobs: 0 })] {
        g.bench_with_input(BenchmarkId::new("tables", name), &exec, |b, &e| {
            b.iter(|| psi_from_tables(&t, &pre, &pre_p, e).unwrap())
        });
    }
    for (name, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel { jobs: 0 })] {
        g.bench_with_input(BenchmarkId::new("pre_class", name), &exec, |b, &e| {
            b.iter(|| pre_class_with(&Weight(vec![1, 0, -1]), 1, e).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, bench_psi);
criterion_main!(benches);
