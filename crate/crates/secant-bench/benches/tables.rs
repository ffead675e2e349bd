//! Timing of the coefficient-table builders and the series oracle.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use secant::central::{delta_triangle, stirling2_triangle, t_triangle};
use secant::gcoeff::SternTable;
use secant::series::PowerSeries;
use secant_bench::TABLE_SIZES;

fn triangle_builders(c: &mut Criterion) {
    let mut group = c.benchmark_group("triangles");
    group.sample_size(10);
    for rows in TABLE_SIZES {
        group.bench_with_input(BenchmarkId::new("cfn-first", rows), &rows, |b, &rows| {
            b.iter(|| t_triangle(rows))
        });
        group.bench_with_input(BenchmarkId::new("delta", rows), &rows, |b, &rows| {
            b.iter(|| delta_triangle(rows))
        });
        group.bench_with_input(BenchmarkId::new("stirling2", rows), &rows, |b, &rows| {
            b.iter(|| stirling2_triangle(rows))
        });
        group.bench_with_input(BenchmarkId::new("stern", rows), &rows, |b, &rows| {
            b.iter(|| SternTable::build(rows))
        });
    }
    group.finish();
}

fn series_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    group.sample_size(10);
    for order in [100usize, 200] {
        group.bench_with_input(BenchmarkId::new("sech", order), &order, |b, &order| {
            b.iter(|| PowerSeries::sech(order))
        });
        group.bench_with_input(
            BenchmarkId::new("asinh_of_sinh", order),
            &order,
            |b, &order| {
                let sinh = PowerSeries::sinh(order);
                let asinh = PowerSeries::asinh(order);
                b.iter(|| asinh.compose(&sinh))
            },
        );
    }
    group.finish();
}

criterion_group!(benches, triangle_builders, series_oracle);
criterion_main!(benches);
