use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use metabelian::verify::{run, Suite, VerifyOptions};
use metabelian::{Execution, SubgroupH};

fn suites(c: &mut Criterion) {
    let h = SubgroupH::full(4).unwrap();
    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    for suite in [Suite::Isolation, Suite::Lemma1, Suite::Coprime, Suite::Nonsep] {
        for exec in [Execution::Sequential, Execution::Parallel] {
            let opts = VerifyOptions {
                seed: 1,
                trials: None,
                class: 6,
                exec,
            };
            group.bench_with_input(BenchmarkId::new(suite.name(), format!("{exec:?}")), &opts, |b, opts| {
                b.iter(|| assert!(run(suite, &h, opts).passed()))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, suites);
criterion_main!(benches);
