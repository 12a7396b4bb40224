//! Benchmarks for kernel hot paths. Populated as the corresponding library
//! modules land; the placeholder keeps `cargo bench` wired up.

use criterion::{criterion_group, criterion_main, Criterion};
use hopfforge_core::{Simplex, SimplicialComplex};

fn bench_face_enumeration(c: &mut Criterion) {
    let octahedron = SimplicialComplex::from_facet_lists(&[
        vec![0, 2, 4],
        vec![0, 2, 5],
        vec![0, 3, 4],
        vec![0, 3, 5],
        vec![1, 2, 4],
        vec![1, 2, 5],
        vec![1, 3, 4],
        vec![1, 3, 5],
    ])
    .unwrap();
    // Suspend an 8-sphere: join of five octahedra (3^5 = 243 facets, dim 14
    // is too big; use three for a reasonable 8-dim workload of 512 facets).
    let mut big = octahedron.clone();
    for shift in [10u32, 20] {
        let other = octahedron.relabel(|v| v + shift).unwrap();
        big = big.join(&other).unwrap();
    }
    c.bench_function("f_vector join-of-3-octahedra", |b| {
        b.iter(|| std::hint::black_box(&big).f_vector())
    });
}

criterion_group!(benches, bench_face_enumeration);
criterion_main!(benches);
