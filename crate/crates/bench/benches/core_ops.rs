use criterion::{black_box, criterion_group, criterion_main, Criterion};
use flagcomb::complex::{cross_polytope_boundary, cycle};
use flagcomb::poly::SymmetricHVector;
use flagcomb::poset::CellPoset;
use flagcomb::{mirror, tcheb_triangulate};

fn bench_face_enumeration(c: &mut Criterion) {
    let cross6 = cross_polytope_boundary(6).unwrap();
    c.bench_function("f_vector cross:6", |b| {
        b.iter(|| black_box(&cross6).f_vector())
    });
}

fn bench_gamma_pipeline(c: &mut Criterion) {
    let sphere = cycle(5).unwrap().join(&cycle(7).unwrap()).unwrap();
    let h = SymmetricHVector::from_complex(&sphere).unwrap();
    c.bench_function("gamma inversion check C5*C7", |b| {
        b.iter(|| black_box(&h).verify_gamcheb_inversion())
    });
}

fn bench_tcheb_triangulation(c: &mut Criterion) {
    let p = CellPoset::from_simplicial(&cycle(6).unwrap());
    let order: Vec<u32> = (0..6).collect();
    c.bench_function("tcheb_triangulate cycle:6", |b| {
        b.iter(|| tcheb_triangulate(black_box(&p), black_box(&order)).unwrap())
    });
}

fn bench_mirror(c: &mut Criterion) {
    let p = CellPoset::from_simplicial(&cross_polytope_boundary(3).unwrap());
    c.bench_function("mirror cross:3", |b| {
        b.iter(|| mirror(black_box(&p)).unwrap().face_count())
    });
}

criterion_group!(
    benches,
    bench_face_enumeration,
    bench_gamma_pipeline,
    bench_tcheb_triangulation,
    bench_mirror
);
criterion_main!(benches);
