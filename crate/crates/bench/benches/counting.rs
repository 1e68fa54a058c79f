use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use staircase_bench::bench_shapes;
use staircase_core::analysis::diagonal_sequence;
use staircase_core::{count_paths, enumerate_paths};

fn count_vs_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_12");
    for shape in bench_shapes() {
        let id = shape.to_syntax();
        group.bench_with_input(BenchmarkId::new("dp", &id), &shape, |b, s| {
            b.iter(|| count_paths(s, 6, 6))
        });
        group.bench_with_input(BenchmarkId::new("enumerate", &id), &shape, |b, s| {
            b.iter(|| enumerate_paths(s, 6, 6).unwrap().len())
        });
    }
    group.finish();
}

fn diagonals(c: &mut Criterion) {
    let mut group = c.benchmark_group("diagonal_sequence");
    for total in [20usize, 80, 200] {
        group.bench_with_input(BenchmarkId::from_parameter(total), &total, |b, &t| {
            let shape = "4,4,2,1".parse().unwrap();
            b.iter(|| diagonal_sequence(&shape, t))
        });
    }
    group.finish();
}

fn roots(c: &mut Criterion) {
    let poly = diagonal_sequence(&"3,2,1".parse().unwrap(), 24).polynomial();
    c.bench_function("count_real_roots_deg24", |b| b.iter(|| poly.count_real_roots().unwrap()));
}

criterion_group!(benches, count_vs_enumerate, diagonals, roots);
criterion_main!(benches);
