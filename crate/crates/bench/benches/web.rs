use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use k3web::dataio::{self, Dataset};
use k3web::transitions::{candidate, search_all};
use k3web::web::{components, spanning_forest, to_dot, DotOptions, EdgeKind, WebEdge, WebGraph};
use k3web::{rr, Family};

fn hilbert(c: &mut Criterion) {
    let x = Family::complete_intersection(&[1, 1, 2, 3, 5], &[10], 3).unwrap();
    let pf = Family::pfaffian(&[1, 1, 1, 2, 2, 3, 3], &[5, 5, 6, 6, 6], 3).unwrap();
    c.bench_function("hilbert_ci", |b| b.iter(|| black_box(&x).hilbert_series().unwrap()));
    c.bench_function("hilbert_pfaffian", |b| {
        b.iter(|| black_box(&pf).hilbert_series().unwrap())
    });
    let p = x.hilbert_series().unwrap();
    c.bench_function("expand_64", |b| b.iter(|| black_box(&p).expand(64).unwrap()));
}

fn riemann_roch(c: &mut Criterion) {
    let d = Dataset::seed();
    let x = d.families.get(17).unwrap().clone();
    c.bench_function("threefold_invariants_17", |b| {
        b.iter(|| rr::threefold_invariants(black_box(&x)).unwrap())
    });
}

fn transitions(c: &mut Criterion) {
    let d = Dataset::seed();
    let numerical = dataio::numerical_pairs(&d.edges);
    let (x, y) = (d.families.get(1).unwrap(), d.families.get(6).unwrap());
    c.bench_function("candidate_1_6", |b| {
        b.iter(|| candidate(black_box(x), black_box(y), &d.k3s.families, &numerical))
    });
    let mut g = c.benchmark_group("search");
    g.sample_size(10);
    g.bench_function("search_all_seed", |b| {
        b.iter(|| search_all(&d.families.families, &d.k3s.families, &numerical))
    });
    g.finish();
}

/// A path on `n` nodes plus every tenth chord.
fn synthetic_web(n: u32) -> WebGraph {
    let mut g = WebGraph::new();
    for id in 1..=n {
        g.add_node(id, Default::default());
    }
    for id in 1..n {
        if id % 7 != 0 {
            g.add_edge(WebEdge::new(id, id + 1, EdgeKind::K3TypeI)).unwrap();
        }
        if id % 10 == 0 && id + 10 <= n {
            g.add_edge(WebEdge::new(id, id + 10, EdgeKind::NonK3)).unwrap();
        }
    }
    g
}

fn graph(c: &mut Criterion) {
    let g = synthetic_web(5000);
    let proven = EdgeKind::proven();
    c.bench_function("components_5000", |b| b.iter(|| components(black_box(&g), &proven)));
    c.bench_function("spanning_forest_5000", |b| {
        b.iter(|| spanning_forest(black_box(&g), &proven))
    });
    let seed = Dataset::seed().web();
    c.bench_function("dot_seed", |b| {
        b.iter(|| to_dot(black_box(&seed), &DotOptions::default()))
    });
}

criterion_group!(benches, hilbert, riemann_roch, transitions, graph);
criterion_main!(benches);
