//! Route-versus-route timing of the Euler-number algorithms.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use secant::euler::{euler_upto, EulerMethod};
use secant_bench::ROUTE_SIZES;

fn euler_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("euler_upto");
    group.sample_size(10);
    for max in ROUTE_SIZES {
        for method in EulerMethod::ALL {
            group.bench_with_input(
                BenchmarkId::new(method.name(), max),
                &max,
                |b, &max| b.iter(|| euler_upto(method, max)),
            );
        }
    }
    group.finish();
}

fn kb_headline(c: &mut Criterion) {
    // the recursion route at the scale of the classic 1000-number run
    let mut group = c.benchmark_group("kb_to_1000");
    group.sample_size(10);
    group.bench_function("kb", |b| {
        b.iter(|| euler_upto(EulerMethod::KnuthBuckholtz, 1000))
    });
    group.finish();
}

criterion_group!(benches, euler_routes, kb_headline);
criterion_main!(benches);
