use std::sync::Arc;

use matroid_rep::catalog;
use matroid_rep::maps::{classify_map, factor_through_truncation, induced_flat_map, surjection_rank_witness};
use matroid_rep::matroid::MatroidError;
use matroid_rep::{Matroid, SetMap};

fn arc(m: Matroid) -> Arc<Matroid> {
    Arc::new(m)
}

fn flat(m: &Matroid, labels: &[&str]) -> usize {
    m.lattice().index_of(m.mask_of(labels).unwrap()).unwrap()
}

#[test]
fn constructors() {
    let u23 = Matroid::from_bases(&["1", "2", "3"], &[vec!["1", "2"], vec!["1", "3"], vec!["2", "3"]]).unwrap();
    assert_eq!(u23, Matroid::uniform(2, 3).unwrap());
    let err = Matroid::from_bases(&["1", "2"], &[vec!["1"], vec!["2"], vec!["1", "2"]]).unwrap_err();
    assert!(matches!(err, MatroidError::NotEquicardinal { .. }));
    let err = Matroid::from_flats(&["1", "2"], &[vec![], vec!["1"]]).unwrap_err();
    assert_eq!(err, MatroidError::MissingGroundSet);
    assert_eq!(catalog::func_l().lattice().len(), 8);
    let u02 = Matroid::uniform(0, 2).unwrap();
    assert_eq!((u02.rank(), u02.lattice().len()), (0, 1));
}

#[test]
fn explicit_matroid_rank_and_closure() {
    let m = catalog::explicit();
    assert_eq!(m.rank_of_labels(&["1", "2"]).unwrap(), 1);
    assert_eq!(m.labels_of(m.closure_of_labels(&["1"]).unwrap()), ["1", "2"]);
    assert_eq!(m.lattice().len(), 10);
    let u23 = Matroid::uniform(2, 3).unwrap();
    assert_eq!(u23.labels_of(u23.closure_of_labels(&["1", "2"]).unwrap()), ["1", "2", "3"]);
}

#[test]
fn mobius_values() {
    let u24 = Matroid::uniform(2, 4).unwrap();
    let l = u24.lattice();
    assert_eq!(l.mobius().get(l.top()), 3);
    assert!(l.atoms().iter().all(|&a| l.mobius().get(a) == -1));
    let n = catalog::func_n();
    assert_eq!(n.lattice().mobius().get(flat(&n, &["2", "3", "4"])), 2);
    assert_eq!(Matroid::uniform(1, 5).unwrap().lattice().whitney().as_slice(), &[1, 1]);
}

#[test]
fn truncations() {
    let u34 = Matroid::uniform(3, 4).unwrap();
    assert_eq!(u34.truncate(1).unwrap(), Matroid::uniform(2, 4).unwrap());
    assert_eq!(u34.truncate(0).unwrap(), u34);
    assert_eq!(u34.truncate(3).unwrap().rank(), 0);
}

#[test]
fn classification_examples() {
    let (m, n) = (arc(catalog::func_m()), arc(catalog::func_n()));
    let c = classify_map(&SetMap::identity_on_labels(m.clone(), n.clone()).unwrap());
    assert!(c.is_weak && c.is_surjective && !c.is_strong);
    assert!(c.strong_witness.is_some());
    let c = classify_map(&SetMap::identity_on_labels(m.clone(), m.clone()).unwrap());
    assert!(c.is_weak && c.is_strong && c.is_surjective);
    let u23 = arc(Matroid::uniform(2, 3).unwrap());
    let zero = SetMap::from_labels(u23.clone(), u23, &[("1", "o"), ("2", "o"), ("3", "o")]).unwrap();
    let c = classify_map(&zero);
    assert!(c.is_weak && !c.is_non_annihilating);
}

#[test]
fn flat_maps_of_the_composition_example() {
    let (m, n, l) = (arc(catalog::func_m()), arc(catalog::func_n()), arc(catalog::func_l()));
    let mn = induced_flat_map(&SetMap::identity_on_labels(m.clone(), n.clone()).unwrap()).unwrap();
    let nl = induced_flat_map(&SetMap::identity_on_labels(n, l.clone()).unwrap()).unwrap();
    let ml = induced_flat_map(&SetMap::identity_on_labels(m.clone(), l.clone()).unwrap()).unwrap();
    let p = flat(&m, &["3", "4"]);
    assert_eq!(l.lattice().labels_of(ml.get(p)), ["3", "4"]);
    assert_eq!(l.lattice().labels_of(mn.then(&nl).unwrap().get(p)), ["2", "3", "4"]);
    let id = induced_flat_map(&SetMap::identity_on_labels(m.clone(), m.clone()).unwrap()).unwrap();
    assert!(id.is_order_isomorphism());
}

#[test]
fn truncation_factorisations() {
    let u34 = arc(Matroid::uniform(3, 4).unwrap());
    let f = factor_through_truncation(&SetMap::identity_on_labels(u34.clone(), arc(Matroid::uniform(2, 4).unwrap())).unwrap()).unwrap();
    assert_eq!(f.k, 1);
    assert_eq!(*f.truncation, Matroid::uniform(2, 4).unwrap());
    let f = factor_through_truncation(&SetMap::identity_on_labels(u34.clone(), arc(Matroid::uniform(1, 4).unwrap())).unwrap()).unwrap();
    assert_eq!(f.k, 2);
    let f = factor_through_truncation(&SetMap::identity_on_labels(u34.clone(), u34).unwrap()).unwrap();
    assert_eq!(f.k, 0);
}

#[test]
fn rank_witnesses() {
    let (m, n) = (arc(catalog::func_m()), arc(catalog::func_n()));
    let id = SetMap::identity_on_labels(m.clone(), n.clone()).unwrap();
    let x = surjection_rank_witness(&id, n.mask_of(&["2", "3", "4"]).unwrap()).unwrap();
    assert_eq!(m.labels_of(x), ["2", "3"]);
    assert_eq!(surjection_rank_witness(&id, 0).unwrap(), 0);
    let top = surjection_rank_witness(&id, n.ground()).unwrap();
    assert_eq!(m.rank_of(top), n.rank());
    assert_eq!(n.closure(id.image(top)), n.ground());
}
