use std::sync::Arc;

use matroid_rep::complex::{sphere, two_triangles};
use matroid_rep::diagram::{appendix_d, appendix_e, appendix_morphism, face_poset_diagram, induced_map};
use matroid_rep::homology::{rational_homology_map, BettiVector};
use matroid_rep::poset::FinitePoset;
use matroid_rep::Label;

#[test]
fn colimits_differ_while_homotopy_colimits_agree() {
    let (d, e) = (Arc::new(appendix_d()), Arc::new(appendix_e()));
    let s2 = BettiVector::from_degrees(&[(2, 1)]);
    assert_eq!(d.colim_cells().reduced_betti(), s2);
    assert!(e.colim_cells().reduced_betti().is_zero());
    let (hd, he) = (d.hocolim(), e.hocolim());
    assert_eq!(hd.complex().reduced_betti(), s2);
    assert_eq!(he.complex().reduced_betti(), s2);
    let m = appendix_morphism(d, e);
    let f = induced_map(&m, &hd, &he).unwrap();
    let h = rational_homology_map(&f);
    assert!(h.is_surjective() && h.is_injective());
}

#[test]
fn face_poset_recovers_the_complex() {
    for k in [sphere(1).unwrap(), two_triangles()] {
        let d = face_poset_diagram(&k);
        assert_eq!(d.colim().unwrap().reduced_betti(), k.reduced_betti());
        assert_eq!(d.hocolim().complex().reduced_betti(), k.reduced_betti());
    }
}

#[test]
fn order_complex_of_a_boolean_lattice_minus_ends_is_a_sphere() {
    let subsets: Vec<u32> = (1..7).collect();
    let labels: Vec<Label> = subsets.iter().map(|&s| Label::Int(s as i64)).collect();
    let p = FinitePoset::from_leq(labels, |a, b| subsets[a] & !subsets[b] == 0).unwrap();
    assert_eq!(p.order_complex().reduced_betti(), BettiVector::from_degrees(&[(1, 1)]));
}
