//! Parallel against single-threaded execution of the same workloads.
//!
//! With `--no-default-features` the library is compiled without rayon and
//! both groups measure the sequential fallback.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use froblab_core::lab::theorem_sweep;
use froblab_core::lattice::family::{boolean, chain};
use froblab_core::quantale::{endo_quantale, search_frobenius};
use froblab_core::Caps;

fn pools() -> Vec<(String, rayon::ThreadPool)> {
    let all = rayon::current_num_threads();
    let mut out = vec![("1 thread".to_string(), rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap())];
    if all > 1 {
        out.push((format!("{all} threads"), rayon::ThreadPoolBuilder::new().num_threads(all).build().unwrap()));
    }
    out
}

fn sweep(c: &mut Criterion) {
    let caps = Caps::default();
    let mut group = c.benchmark_group("theorem_sweep");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_with_input(BenchmarkId::new("max_size_6", &name), &pool, |b, pool| {
            b.iter(|| pool.install(|| theorem_sweep(6, &caps).unwrap()))
        });
    }
    group.finish();
}

fn endo_search(c: &mut Criterion) {
    let caps = Caps::default();
    let lattices = [Arc::new(chain(6).unwrap()), Arc::new(boolean(2).unwrap())];
    let mut group = c.benchmark_group("endo_search");
    group.sample_size(10);
    for (name, pool) in pools() {
        for l in &lattices {
            let id = format!("{}/{name}", l.name().unwrap_or("?"));
            group.bench_function(id, |b| {
                b.iter(|| {
                    pool.install(|| {
                        let e = endo_quantale(l, &caps).unwrap();
                        search_frobenius(&e.quantale, &caps).unwrap()
                    })
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, sweep, endo_search);
criterion_main!(benches);
