use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use matroid_rep::catalog;
use matroid_rep::complex::sphere;
use matroid_rep::engstrom::{build_representation, expected_betti, induced_representation_map, ImmersedMatroid};
use matroid_rep::homology::{homology_map, reduced_betti, reduced_betti_mod_p};
use matroid_rep::{Matroid, SetMap};

fn lattice_of_flats(c: &mut Criterion) {
    let mut group = c.benchmark_group("lattice");
    for (r, n) in [(2, 6), (3, 7), (4, 9)] {
        group.bench_with_input(BenchmarkId::new("uniform", format!("U{r},{n}")), &(r, n), |b, &(r, n)| {
            b.iter(|| {
                let m = Matroid::uniform(r, n).unwrap();
                black_box(m.lattice().whitney())
            })
        });
    }
    group.finish();
}

fn build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_representation");
    group.sample_size(20);
    let s0 = sphere(0).unwrap();
    let s1 = sphere(1).unwrap();
    for (name, x, xname) in [("U2,4", &s0, "S0"), ("explicit", &s0, "S0"), ("U3,4", &s0, "S0"), ("U2,4", &s1, "S1")] {
        let m = Arc::new(catalog::by_name(name).unwrap());
        let im = ImmersedMatroid::canonical(m.clone(), m.rank()).unwrap();
        group.bench_function(format!("{name}/{xname}"), |b| {
            b.iter(|| black_box(build_representation(&im, x).unwrap()))
        });
    }
    group.finish();
}

fn homology(c: &mut Criterion) {
    let mut group = c.benchmark_group("homology");
    group.sample_size(20);
    let m = Arc::new(catalog::explicit());
    let im = ImmersedMatroid::canonical(m, 3).unwrap();
    let x = sphere(1).unwrap();
    let t = build_representation(&im, &x).unwrap().t().clone();
    group.bench_function("rational/explicit-S1", |b| b.iter(|| black_box(reduced_betti(&t))));
    group.bench_function("mod-p/explicit-S1", |b| b.iter(|| black_box(reduced_betti_mod_p(&t))));
    group.bench_function("formula/explicit-S1", |b| b.iter(|| black_box(expected_betti(&im, &x))));
    group.finish();
}

fn induced_maps(c: &mut Criterion) {
    let s0 = sphere(0).unwrap();
    let (m, n) = (Arc::new(catalog::func_m()), Arc::new(catalog::func_n()));
    let rm = build_representation(&ImmersedMatroid::canonical(m.clone(), 3).unwrap(), &s0).unwrap();
    let rn = build_representation(&ImmersedMatroid::canonical(n.clone(), 3).unwrap(), &s0).unwrap();
    let id = SetMap::identity_on_labels(m, n).unwrap();
    let (hm, hn) = (rm.t_homology(), rn.t_homology());
    c.bench_function("induced_map/func-M->func-N", |b| {
        b.iter(|| {
            let f = induced_representation_map(&id, &rm, &rn, None).unwrap();
            black_box(homology_map(&f.on_t, hm, hn))
        })
    });
}

criterion_group!(benches, lattice_of_flats, build, homology, induced_maps);
criterion_main!(benches);
