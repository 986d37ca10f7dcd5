//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Every comparison is exact (integer Betti numbers from rational
//! elimination), so the tolerance on each line is zero.

use std::sync::Arc;
use std::time::Instant;

use matroid_rep::action::{check_equivariance, GroupAction};
use matroid_rep::catalog::{self, catalog_maps};
use matroid_rep::complex::{sphere, SimplicialComplex};
use matroid_rep::diagram::{appendix_d, appendix_e};
use matroid_rep::engstrom::{
    arrangement_flats, build_representation, expected_betti, induced_representation_map, verify_stability,
    verify_strict_decrease, verify_surjectivity, ImmersedMatroid, Representation,
};
use matroid_rep::homology::{homology_map, BettiVector};
use matroid_rep::lattice::coatom_identity_violation;
use matroid_rep::{bits, Matroid, SetMap, WhitneyVector};

type Outcome = Result<String, String>;

fn rep(m: &Arc<Matroid>, rho: usize, x: &SimplicialComplex) -> Representation {
    let im = ImmersedMatroid::canonical(m.clone(), rho).expect("rho at least the rank");
    build_representation(&im, x).expect("valid representation")
}

fn named(name: &str) -> Arc<Matroid> {
    Arc::new(catalog::by_name(name).expect("catalog name"))
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Whitney numbers from the subset expansion of the characteristic
/// polynomial, `χ(t) = Σ_A (-1)^{|A|} t^{r - r(A)}`; independent of the lattice.
fn whitney_oracle(m: &Matroid) -> WhitneyVector {
    let r = m.rank();
    let mut coeff = vec![0i64; r + 1];
    for a in bits::subsets(m.ground()) {
        let sign = if bits::count(a) % 2 == 0 { 1 } else { -1 };
        coeff[m.rank_of(a)] += sign;
    }
    WhitneyVector(coeff.iter().map(|c| c.unsigned_abs()).collect())
}

fn criterion1() -> Outcome {
    let s0 = sphere(0).unwrap();
    let s1 = sphere(1).unwrap();
    let mut cases: Vec<(&str, &SimplicialComplex, &str)> = ["U2,3", "U2,4", "U3,4", "explicit", "func-N", "func-L"]
        .into_iter()
        .map(|n| (n, &s0, "S0"))
        .collect();
    cases.push(("U2,3", &s1, "S1"));
    cases.push(("U2,4", &s1, "S1"));
    let mut failures = Vec::new();
    for (name, x, xname) in cases {
        let start = Instant::now();
        let m = named(name);
        let r = rep(&m, m.rank(), x);
        let expected = expected_betti(r.immersed(), x);
        let direct = r.t_betti();
        if direct != expected || start.elapsed().as_secs() >= 60 {
            failures.push(format!("{name}/{xname}: direct {direct} vs formula {expected}"));
        }
    }
    check(failures.is_empty(), if failures.is_empty() { "8 instances agree".into() } else { failures.join("; ") })
}

fn criterion2() -> Outcome {
    let s0 = sphere(0).unwrap();
    let s1 = sphere(1).unwrap();
    let u24 = rep(&named("U2,4"), 2, &s0).t_betti();
    let u34 = ImmersedMatroid::canonical(named("U3,4"), 3).unwrap();
    let u34_formula = expected_betti(&u34, &s1);
    let u23 = rep(&named("U2,3"), 2, &s1).t_betti();
    let ok = u24 == BettiVector::from_degrees(&[(0, 7)])
        && u34_formula == BettiVector::from_degrees(&[(1, 3), (2, 6), (3, 4)])
        && u23 == BettiVector::from_degrees(&[(0, 2), (1, 3)]);
    check(ok, format!("U2,4/S0 {u24}; U3,4/S1 formula {u34_formula}; U2,3/S1 {u23}"))
}

fn criterion3() -> Outcome {
    let chain = ["func-M", "func-N", "func-L"].map(named);
    let oracle: Vec<WhitneyVector> = chain.iter().map(|m| whitney_oracle(m)).collect();
    let lattice: Vec<WhitneyVector> = chain.iter().map(|m| m.lattice().whitney()).collect();
    let expected = [vec![1, 4, 6, 3], vec![1, 4, 5, 2], vec![1, 3, 3, 1]];
    let ok = oracle == lattice
        && oracle.iter().zip(&expected).all(|(w, e)| w.as_slice() == e.as_slice())
        && oracle[0].dominates(&oracle[1])
        && oracle[1].dominates(&oracle[2]);
    check(ok, format!("{:?} >= {:?} >= {:?}", oracle[0].0, oracle[1].0, oracle[2].0))
}

fn criterion4() -> Outcome {
    let s0 = sphere(0).unwrap();
    let (m, n, l) = (named("func-M"), named("func-N"), named("func-L"));
    let (rm, rn, rl) = (rep(&m, 3, &s0), rep(&n, 3, &s0), rep(&l, 3, &s0));
    let mut details = Vec::new();
    let mut ok = true;
    for (name, tau, a, b) in [
        ("id:M->N", SetMap::identity_on_labels(m.clone(), n.clone()).unwrap(), &rm, &rn),
        ("id:N->L", SetMap::identity_on_labels(n.clone(), l.clone()).unwrap(), &rn, &rl),
    ] {
        let report = verify_surjectivity(&tau, a, b).map_err(|e| e.to_string())?;
        ok &= report.holds();
        let ranks: Vec<String> = report.degrees.iter().map(|(k, r, c, rk)| format!("H{k}:{r}x{c} rank {rk}")).collect();
        details.push(format!("{name} {}", ranks.join(",")));
    }
    check(ok, details.join("; "))
}

fn criterion5() -> Outcome {
    let s0 = sphere(0).unwrap();
    let (m, n) = (named("U3,4"), named("U2,4"));
    let tau = SetMap::identity_on_labels(m.clone(), n.clone()).unwrap();
    let report = verify_strict_decrease(&tau, &rep(&m, 3, &s0), &rep(&n, 3, &s0)).map_err(|e| e.to_string())?;
    let ok = report.holds
        && report.flagged_degrees == vec![1]
        && report.source_betti.get(1) == 13
        && report.target_betti.get(1) == 7;
    check(
        ok,
        format!("degree 1: {} > {}", report.source_betti.get(1), report.target_betti.get(1)),
    )
}

fn criterion6() -> Outcome {
    let s0 = sphere(0).unwrap();
    let (m, n, l) = (named("func-M"), named("func-N"), named("func-L"));
    let (rm, rn, rl) = (rep(&m, 3, &s0), rep(&n, 3, &s0), rep(&l, 3, &s0));
    let tau = SetMap::identity_on_labels(m.clone(), n.clone()).unwrap();
    let sigma = SetMap::identity_on_labels(n.clone(), l.clone()).unwrap();
    let both = tau.then(&sigma).unwrap();
    let err = |e: matroid_rep::engstrom::EngstromError| e.to_string();
    let f_tau = induced_representation_map(&tau, &rm, &rn, None).map_err(err)?;
    let f_sigma = induced_representation_map(&sigma, &rn, &rl, None).map_err(err)?;
    let f_both = induced_representation_map(&both, &rm, &rl, None).map_err(err)?;
    let h_tau = homology_map(&f_tau.on_t, rm.t_homology(), rn.t_homology());
    let h_sigma = homology_map(&f_sigma.on_t, rn.t_homology(), rl.t_homology());
    let h_both = homology_map(&f_both.on_t, rm.t_homology(), rl.t_homology());
    let composed = h_sigma.after(&h_tau).ok_or("matrix shapes differ")?;
    let poset_composite = f_tau.flat_map.then(&f_sigma.flat_map).ok_or("flat maps not composable")?;
    let lm = m.lattice();
    let differs: Vec<Vec<String>> = f_both.flat_map.differences(&poset_composite).into_iter().map(|p| lm.labels_of(p)).collect();
    let three_four = lm.index_of(m.mask_of(&["3", "4"]).unwrap()).unwrap();
    let images_ok = l.labels_of(l.lattice().flat(f_both.flat_map.get(three_four))) == ["3", "4"]
        && l.labels_of(l.lattice().flat(poset_composite.get(three_four))) == ["2", "3", "4"];
    let vertex_maps_differ = f_both.on_t.vertex_map() != f_tau.on_t.then(&f_sigma.on_t).unwrap().vertex_map();
    let ok = composed == h_both && differs == vec![vec!["3".to_string(), "4".to_string()]] && images_ok && vertex_maps_differ;
    check(ok, format!("homology matrices equal: {}; poset maps differ at {differs:?}", composed == h_both))
}

fn criterion7() -> Outcome {
    let (d, e) = (appendix_d(), appendix_e());
    let target = BettiVector::from_degrees(&[(2, 1)]);
    let colim_d = d.colim_cells().reduced_betti();
    let colim_e = e.colim_cells().reduced_betti();
    let hd = d.hocolim().complex().reduced_betti();
    let he = e.hocolim().complex().reduced_betti();
    let ok = colim_d == target && colim_e.is_zero() && hd == target && he == target;
    check(ok, format!("colim D {colim_d}; colim E {colim_e}; hocolim D {hd}; hocolim E {he}"))
}

fn criterion8() -> Outcome {
    let s0 = sphere(0).unwrap();
    let u23 = named("U2,3");
    let at3 = verify_stability(&ImmersedMatroid::canonical(u23.clone(), 3).unwrap(), &s0).map_err(|e| e.to_string())?;
    let at4 = verify_stability(&ImmersedMatroid::canonical(u23, 4).unwrap(), &s0).map_err(|e| e.to_string())?;
    let ok = at3.holds && at4.holds && at3.at_rho.get(1) == 5 && at4.at_rho.get(2) == 5;
    check(ok, format!("rho=3: {}; rho=4: {}", at3.at_rho, at4.at_rho))
}

fn criterion9() -> Outcome {
    let mut failures = Vec::new();
    for (name, m) in catalog::catalog() {
        let lattice = m.lattice();
        let mu = lattice.mobius();
        let identity = coatom_identity_violation(lattice).is_none() || lattice.atoms().is_empty();
        let nonvanishing = (0..lattice.len()).all(|p| {
            let v = mu.get(p);
            v != 0 && (v > 0) == (lattice.rank_of(p) % 2 == 0)
        });
        if !(identity && nonvanishing) {
            failures.push(name);
        }
    }
    check(failures.is_empty(), format!("{} lattices; failures {failures:?}", catalog::CATALOG_NAMES.len()))
}

fn criterion10() -> Outcome {
    let s0 = sphere(0).unwrap();
    let failures: Vec<String> = catalog::catalog()
        .into_iter()
        .filter(|(_, m)| !arrangement_flats(&rep(m, m.rank(), &s0)).matches_lattice)
        .map(|(n, _)| n)
        .collect();
    check(failures.is_empty(), format!("{} instances; failures {failures:?}", catalog::CATALOG_NAMES.len()))
}

fn criterion11() -> Outcome {
    let s0 = sphere(0).unwrap();
    let action = GroupAction::antipodal_s0();
    let mut failures = Vec::new();
    for (name, m) in catalog::catalog() {
        let r = rep(&m, m.rank(), &s0);
        let id = SetMap::identity_on_labels(m.clone(), m.clone()).unwrap();
        let f = induced_representation_map(&id, &r, &r, None).map_err(|e| e.to_string())?;
        match check_equivariance(&action, &r, &r, &f) {
            Ok(rep) if rep.holds() => {}
            other => failures.push(format!("{name}: {other:?}")),
        }
    }
    let maps = catalog_maps();
    for cm in &maps {
        let rho = cm.map.source().rank();
        let (a, b) = (rep(cm.map.source(), rho, &s0), rep(cm.map.target(), rho, &s0));
        let f = induced_representation_map(&cm.map, &a, &b, None).map_err(|e| e.to_string())?;
        match check_equivariance(&action, &a, &b, &f) {
            Ok(rep) if rep.holds() => {}
            other => failures.push(format!("{}: {other:?}", cm.name)),
        }
    }
    check(
        failures.is_empty(),
        format!("{} representations, {} maps; failures {failures:?}", catalog::CATALOG_NAMES.len(), maps.len()),
    )
}

fn criterion12() -> Outcome {
    let s0 = sphere(0).unwrap();
    let m = Arc::new(catalog::explicit());
    let canonical = ImmersedMatroid::canonical(m.clone(), 3).unwrap();
    let other = ImmersedMatroid::new(m.clone(), catalog::explicit_immersion(&m).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let a = build_representation(&canonical, &s0).unwrap().t_betti();
    let b = build_representation(&other, &s0).unwrap().t_betti();
    let distinct = canonical.immersion() != other.immersion();
    check(distinct && a == b && a == BettiVector::from_degrees(&[(1, 11)]), format!("canonical {a}; explicit {b}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("formula and construction agree", criterion1),
        ("reference Betti numbers", criterion2),
        ("Whitney monotonicity along M -> N -> L", criterion3),
        ("surjective weak maps surject on homology", criterion4),
        ("strict decrease under rank drop", criterion5),
        ("functoriality on homology", criterion6),
        ("colimit versus homotopy colimit", criterion7),
        ("stability in rho", criterion8),
        ("Moebius identity and sign pattern", criterion9),
        ("arrangement recovers the lattice of flats", criterion10),
        ("antipodal equivariance", criterion11),
        ("independence of the immersion", criterion12),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} (exact, tolerance 0) [{secs:.2}s]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} (exact, tolerance 0) [{secs:.2}s]: {detail}", i + 1)
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
