//! Sequential versus parallel throughput on the two scan-heavy workloads:
//! deciding a page budget across many canonical layouts, and the en bloc
//! extensible search. Built with the default `parallel` feature this
//! compares worker counts; built with `--no-default-features` everything
//! degrades to the sequential path (the comparison then measures overhead
//! only).

use std::time::Duration;

use criterion::{criterion_group, criterion_main, Criterion};

use mbe_core::graph::{cartesian_product, cycle};
use mbe_search::{any_layout_colorable, canonical_layouts, color_search, SearchConfig};

fn bench_layout_scan(c: &mut Criterion) {
    let c3 = cycle(3).unwrap();
    let product = cartesian_product(&c3, &c3).unwrap();
    // A fixed slice of the canonical layouts of 9 vertices keeps one
    // iteration in benchmark range while exercising the same code path as
    // the full exact-thickness oracle.
    let layouts: Vec<_> = canonical_layouts(9).into_iter().take(512).collect();

    let mut group = c.benchmark_group("layout_scan_c3c3_k5");
    group.sample_size(10);
    group.measurement_time(Duration::from_secs(20));
    group.bench_function("sequential", |b| {
        b.iter(|| any_layout_colorable(&product, &layouts, 5, 1))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| any_layout_colorable(&product, &layouts, 5, 0))
    });
    group.finish();
}

fn bench_color_search(c: &mut Criterion) {
    let f = mbe_core::fixtures::lemma2_c5c5();
    let g = f.embedding.graph().clone();
    let layout = f.embedding.layout().clone();
    let config = SearchConfig::default();

    let mut group = c.benchmark_group("color_search_c5c5_reference_layout");
    group.sample_size(20);
    group.bench_function("k5_found", |b| {
        b.iter(|| color_search(&g, &layout, 5, &config).unwrap().found())
    });
    group.finish();
}

fn bench_extensible(c: &mut Criterion) {
    let c3 = cycle(3).unwrap();

    let mut group = c.benchmark_group("search_extensible_c3_s3");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        let config = SearchConfig::default();
        b.iter(|| mbe_search::search_extensible(&c3, 3, 5, &config).unwrap().found())
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        let config = SearchConfig::default().with_workers(0);
        b.iter(|| mbe_search::search_extensible(&c3, 3, 5, &config).unwrap().found())
    });
    group.finish();
}

criterion_group!(benches, bench_layout_scan, bench_color_search, bench_extensible);
criterion_main!(benches);
