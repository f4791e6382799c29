//! Criterion benchmarks for the matching pipelines and their key
//! subroutines on constructed general-position sets.

use conmatch::geom::{convex_hull, last_ray_hull_intersection, point_depth};
use conmatch::instances::{large_general_position, random_balanced_coloring};
use conmatch::matching::{connected_matching_colored, connected_matching_uncolored};
use conmatch::separator::separating_path;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use std::hint::black_box;

fn bench_uncolored(c: &mut Criterion) {
    let mut group = c.benchmark_group("uncolored_pipeline");
    for n in [1_000usize, 10_000, 40_000] {
        let ps = large_general_position(n, 1);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::from_parameter(n), &ps, |b, ps| {
            b.iter(|| connected_matching_uncolored(black_box(ps)).unwrap())
        });
    }
    group.finish();
}

fn bench_colored(c: &mut Criterion) {
    let mut group = c.benchmark_group("colored_pipeline");
    for (n, colors) in [(1_200usize, 2usize), (12_000, 4)] {
        let ps = random_balanced_coloring(&large_general_position(n, 2), colors, 2).unwrap();
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(
            BenchmarkId::new(format!("c{colors}"), n),
            &ps,
            |b, ps| b.iter(|| connected_matching_colored(black_box(ps)).unwrap()),
        );
    }
    group.finish();
}

fn bench_subroutines(c: &mut Criterion) {
    let ps = large_general_position(20_000, 3);
    let subset: Vec<usize> = (0..ps.len()).collect();
    c.bench_function("separating_path_20k", |b| {
        b.iter(|| separating_path(black_box(&ps)).unwrap())
    });
    c.bench_function("convex_hull_20k", |b| {
        b.iter(|| convex_hull(black_box(ps.points()), black_box(&subset)))
    });
    let origin = ps.point(0);
    let target = ps.point(1);
    let dir = (target.x - origin.x, target.y - origin.y);
    c.bench_function("ray_exit_lp_20k", |b| {
        b.iter(|| last_ray_hull_intersection(black_box(ps.points()), origin, dir, 7).unwrap())
    });
    c.bench_function("point_depth_20k", |b| {
        b.iter(|| point_depth(black_box(ps.points()), 0))
    });
}

criterion_group!(benches, bench_uncolored, bench_colored, bench_subroutines);
criterion_main!(benches);
