use criterion::{criterion_group, criterion_main, Criterion};
use hardcover_bench::{graph, system};
use hardcover_core::combinat::{
    edge_color, exact_max_independent_set, exact_min_set_cover, exhaustive_min_vertex_cover,
};
use hardcover_core::rational::rat_int;
use hardcover_core::reductions::{
    build_circles, build_fat_triangles, build_friendly, build_indep3d, verify_circles,
    verify_fat_triangles, verify_friendly, verify_indep3d, CoverGeometry,
};
use std::hint::black_box;

fn builders(c: &mut Criterion) {
    let g8 = graph(8);
    let s = system(12, 6);
    c.bench_function("build_fat_triangles_n8", |b| {
        b.iter(|| build_fat_triangles(black_box(&g8), &rat_int(1)).unwrap())
    });
    c.bench_function("build_friendly_12x6", |b| {
        b.iter(|| build_friendly(black_box(&s)).unwrap())
    });
    c.bench_function("build_circles_n6", |b| {
        let g6 = graph(6);
        b.iter(|| build_circles(black_box(&g6), &rat_int(1)).unwrap())
    });
    c.bench_function("build_indep3d_n8", |b| {
        b.iter(|| build_indep3d(black_box(&g8)).unwrap())
    });
}

fn verifiers(c: &mut Criterion) {
    let fat = build_fat_triangles(&graph(8), &rat_int(1)).unwrap();
    let friendly = build_friendly(&system(12, 6)).unwrap();
    let circles = build_circles(&graph(6), &rat_int(1)).unwrap();
    let indep = build_indep3d(&graph(8)).unwrap();
    c.bench_function("verify_fat_triangles_n8", |b| {
        b.iter(|| verify_fat_triangles(black_box(&fat)))
    });
    c.bench_function("verify_friendly_12x6", |b| {
        b.iter(|| verify_friendly(black_box(&friendly)))
    });
    c.bench_function("verify_circles_n6", |b| {
        b.iter(|| verify_circles(black_box(&circles)))
    });
    c.bench_function("verify_indep3d_n8", |b| {
        b.iter(|| verify_indep3d(black_box(&indep)))
    });
}

fn solvers(c: &mut Criterion) {
    let g = graph(16);
    let fat = build_fat_triangles(&g, &rat_int(1)).unwrap();
    let cover = fat.cover_system().unwrap();
    c.bench_function("exact_min_set_cover_n16", |b| {
        b.iter(|| exact_min_set_cover(black_box(&cover)).unwrap())
    });
    c.bench_function("exhaustive_min_vertex_cover_n16", |b| {
        b.iter(|| exhaustive_min_vertex_cover(black_box(&g)).unwrap())
    });
    c.bench_function("exact_max_independent_set_n16", |b| {
        b.iter(|| exact_max_independent_set(black_box(&g)).unwrap())
    });
    let g50 = graph(50);
    c.bench_function("edge_color_n50", |b| {
        b.iter(|| edge_color(black_box(&g50)).unwrap())
    });
}

criterion_group!(benches, builders, verifiers, solvers);
criterion_main!(benches);
