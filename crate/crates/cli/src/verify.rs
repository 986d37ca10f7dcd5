//! The verification suites behind `matrep verify`.

use anyhow::Result;
use serde_json::{json, Value};

use matroid_rep::action::{check_equivariance, GroupAction};
use matroid_rep::complex::{sphere, SimplicialComplex};
use matroid_rep::diagram::{appendix_d, appendix_e};
use matroid_rep::engstrom::{
    arrangement_flats, build_representation, expected_betti, induced_representation_map, t_homology_map,
    verify_stability, verify_strict_decrease, verify_surjectivity, Representation,
};
use matroid_rep::homology::{homology_map, BettiVector};
use matroid_rep::lattice::coatom_identity_violation;

use crate::input::{input_error, LoadedMap, LoadedMatroid};

pub struct Suite {
    pub pass: bool,
    pub items: Vec<Value>,
}

impl Suite {
    fn new() -> Self {
        Suite { pass: true, items: Vec::new() }
    }

    fn push(&mut self, pass: bool, item: Value) {
        self.pass &= pass;
        let mut item = item;
        item["pass"] = Value::Bool(pass);
        self.items.push(item);
    }

    fn skip(&mut self, item: Value, why: &str) {
        let mut item = item;
        item["applicable"] = Value::Bool(false);
        item["reason"] = Value::from(why);
        self.items.push(item);
    }

    pub fn to_json(&self) -> Value {
        json!({ "pass": self.pass, "items": self.items })
    }
}

fn represent(m: &LoadedMatroid, rho: usize, x: &SimplicialComplex) -> Result<Representation> {
    let im = m.immersed(rho)?;
    build_representation(&im, x).map_err(|e| input_error(format!("{}: {e}", m.name)))
}

fn map_rho(f: &LoadedMap, rho: Option<usize>) -> usize {
    rho.unwrap_or_else(|| f.map.source().rank().max(f.map.target().rank()))
}

fn map_reps(f: &LoadedMap, rho: Option<usize>, x: &SimplicialComplex) -> Result<(Representation, Representation)> {
    let rho = map_rho(f, rho);
    Ok((represent(&f.source, rho, x)?, represent(&f.target, rho, x)?))
}

pub fn formula(matroids: &[LoadedMatroid], rho: Option<usize>, x: &SimplicialComplex) -> Result<Suite> {
    let mut s = Suite::new();
    for m in matroids {
        let rho = rho.unwrap_or(m.matroid.rank());
        let rep = represent(m, rho, x)?;
        let direct = rep.t_betti();
        let formula = expected_betti(rep.immersed(), x);
        s.push(direct == formula, json!({ "matroid": m.name, "rho": rho, "direct": direct, "formula": formula }));
    }
    Ok(s)
}

pub fn surjectivity(maps: &[LoadedMap], rho: Option<usize>, x: &SimplicialComplex) -> Result<Suite> {
    let mut s = Suite::new();
    for f in maps {
        let item = json!({ "map": f.name });
        if !f.map.is_surjective() {
            s.skip(item, "map is not surjective");
            continue;
        }
        let (a, b) = map_reps(f, rho, x)?;
        let report = verify_surjectivity(&f.map, &a, &b).map_err(|e| input_error(format!("{}: {e}", f.name)))?;
        let degrees: Vec<Value> = report
            .degrees
            .iter()
            .map(|(k, r, c, rank)| json!({ "degree": k, "rows": r, "cols": c, "rank": rank }))
            .collect();
        s.push(
            report.holds(),
            json!({
                "map": f.name,
                "source_betti": report.source_betti,
                "target_betti": report.target_betti,
                "matrices": degrees,
            }),
        );
    }
    Ok(s)
}

pub fn strict_decrease(maps: &[LoadedMap], rho: Option<usize>, x: &SimplicialComplex) -> Result<Suite> {
    let mut s = Suite::new();
    for f in maps {
        let item = json!({ "map": f.name });
        if f.map.source().rank() <= f.map.target().rank() {
            s.skip(item, "rank does not drop");
            continue;
        }
        if !f.map.is_surjective() {
            s.skip(item, "map is not surjective");
            continue;
        }
        let (a, b) = map_reps(f, rho, x)?;
        let report = verify_strict_decrease(&f.map, &a, &b).map_err(|e| input_error(format!("{}: {e}", f.name)))?;
        s.push(
            report.holds,
            json!({
                "map": f.name,
                "flagged_degrees": report.flagged_degrees,
                "source_betti": report.source_betti,
                "target_betti": report.target_betti,
            }),
        );
    }
    Ok(s)
}

/// `H((σ∘τ)*) = H(σ*) H(τ*)` for consecutive composable maps.
pub fn functoriality(maps: &[LoadedMap], rho: Option<usize>, x: &SimplicialComplex) -> Result<Suite> {
    let mut s = Suite::new();
    for pair in maps.windows(2) {
        let (tau, sigma) = (&pair[0], &pair[1]);
        let name = format!("{} then {}", tau.name, sigma.name);
        let Ok(both) = tau.map.then(&sigma.map) else {
            s.skip(json!({ "maps": name }), "maps are not composable");
            continue;
        };
        let rho = rho.unwrap_or_else(|| map_rho(tau, None).max(map_rho(sigma, None)));
        let ra = represent(&tau.source, rho, x)?;
        let rb = represent(&tau.target, rho, x)?;
        let rc = represent(&sigma.target, rho, x)?;
        let err = |e: matroid_rep::engstrom::EngstromError| input_error(format!("{name}: {e}"));
        let f_tau = induced_representation_map(&tau.map, &ra, &rb, None).map_err(err)?;
        let f_sigma = induced_representation_map(&sigma.map, &rb, &rc, None).map_err(err)?;
        let f_both = induced_representation_map(&both, &ra, &rc, None).map_err(err)?;
        let h_tau = homology_map(&f_tau.on_t, ra.t_homology(), rb.t_homology());
        let h_sigma = homology_map(&f_sigma.on_t, rb.t_homology(), rc.t_homology());
        let h_both = homology_map(&f_both.on_t, ra.t_homology(), rc.t_homology());
        let equal = h_sigma.after(&h_tau).is_some_and(|h| h == h_both);
        let composite = f_tau.rerouted.then(&f_sigma.rerouted).expect("lattices match");
        let lattice = tau.map.source().lattice();
        let target = sigma.map.target().lattice();
        let differences: Vec<Value> = f_both
            .rerouted
            .differences(&composite)
            .into_iter()
            .map(|p| {
                json!({
                    "flat": lattice.labels_of(p),
                    "direct": target.labels_of(f_both.rerouted.get(p)),
                    "composite": target.labels_of(composite.get(p)),
                })
            })
            .collect();
        let note = if differences.is_empty() {
            "poset maps agree".to_string()
        } else {
            let at: Vec<String> = differences.iter().map(|d| flat_string(&d["flat"])).collect();
            format!("poset maps differ at {}; homology matrices still compose", at.join(", "))
        };
        let through_t = t_homology_map(&composite, &ra, &rc).map(|h| h == h_both).unwrap_or(false);
        s.push(
            equal && through_t,
            json!({ "maps": name, "rho": rho, "homology_equal": equal, "poset_differences": differences, "note": note }),
        );
    }
    Ok(s)
}

fn flat_string(v: &Value) -> String {
    let parts: Vec<&str> = v.as_array().map(|a| a.iter().filter_map(Value::as_str).collect()).unwrap_or_default();
    format!("{{{}}}", parts.join(","))
}

pub fn whitney_monotone(maps: &[LoadedMap]) -> Suite {
    let mut s = Suite::new();
    for f in maps {
        let (wm, wn) = (f.map.source().lattice().whitney(), f.map.target().lattice().whitney());
        let item = json!({ "map": f.name, "source": wm.as_slice(), "target": wn.as_slice() });
        if !(f.map.is_weak() && f.map.is_surjective() && f.map.source().rank() == f.map.target().rank()) {
            s.skip(item, "needs a surjective weak map between equal ranks");
            continue;
        }
        s.push(wm.dominates(&wn), item);
    }
    s
}

pub fn mobius(matroids: &[LoadedMatroid]) -> Suite {
    let mut s = Suite::new();
    for m in matroids {
        let lattice = m.matroid.lattice();
        let mu = lattice.mobius();
        let identity = lattice.atoms().is_empty() || coatom_identity_violation(lattice).is_none();
        let signs = (0..lattice.len()).all(|p| mu.get(p) != 0 && (mu.get(p) > 0) == (lattice.rank_of(p) % 2 == 0));
        s.push(
            identity && signs,
            json!({ "matroid": m.name, "coatom_identity": identity, "alternating_nonzero": signs, "top": mu.get(lattice.top()) }),
        );
    }
    s
}

pub fn stability(matroids: &[LoadedMatroid], rho: Option<usize>, x: &SimplicialComplex) -> Result<Suite> {
    let mut s = Suite::new();
    for m in matroids {
        let r = m.matroid.rank();
        let rhos = match rho {
            Some(rho) => vec![rho],
            None => vec![r + 1, r + 2],
        };
        for rho in rhos {
            let report = verify_stability(&m.immersed(rho)?, x).map_err(|e| input_error(format!("{}: {e}", m.name)))?;
            s.push(
                report.holds,
                json!({ "matroid": m.name, "rho": rho, "at_rho": report.at_rho, "at_rank": report.at_rank, "predicted": report.predicted }),
            );
        }
    }
    Ok(s)
}

pub fn arrangement(matroids: &[LoadedMatroid], x: &SimplicialComplex) -> Result<Suite> {
    let mut s = Suite::new();
    for m in matroids {
        let rep = represent(m, m.matroid.rank(), x)?;
        let found = arrangement_flats(&rep);
        s.push(found.matches_lattice, json!({ "matroid": m.name, "flats": found.flats.len() }));
    }
    Ok(s)
}

/// The antipodal action on `S^0`, extended to every representation and
/// checked against every map.
pub fn equivariance(matroids: &[LoadedMatroid], maps: &[LoadedMap], rho: Option<usize>) -> Result<Suite> {
    let s0 = sphere(0).expect("S^0");
    let action = GroupAction::antipodal_s0();
    let mut s = Suite::new();
    let err = |name: &str, e: &dyn std::fmt::Display| input_error(format!("{name}: {e}"));
    for m in matroids {
        let rep = represent(m, rho.unwrap_or(m.matroid.rank()), &s0)?;
        let id = matroid_rep::SetMap::identity_on_labels(m.matroid.clone(), m.matroid.clone()).map_err(|e| err(&m.name, &e))?;
        let f = induced_representation_map(&id, &rep, &rep, None).map_err(|e| err(&m.name, &e))?;
        let report = check_equivariance(&action, &rep, &rep, &f).map_err(|e| err(&m.name, &e))?;
        s.push(report.holds(), json!({ "matroid": m.name, "free_on_y": report.free_on_y, "free_on_intersections": report.free_on_intersections }));
    }
    for f in maps {
        let (a, b) = map_reps(f, rho, &s0)?;
        let induced = induced_representation_map(&f.map, &a, &b, None).map_err(|e| err(&f.name, &e))?;
        let report = check_equivariance(&action, &a, &b, &induced).map_err(|e| err(&f.name, &e))?;
        s.push(report.holds(), json!({ "map": f.name, "commutes_on_t": report.commutes_on_t, "commutes_on_y": report.commutes_on_y }));
    }
    Ok(s)
}

pub fn appendix_demo() -> Suite {
    let (d, e) = (appendix_d(), appendix_e());
    let colim_d = d.colim_cells().reduced_betti();
    let colim_e = e.colim_cells().reduced_betti();
    let hocolim_d = d.hocolim().complex().reduced_betti();
    let hocolim_e = e.hocolim().complex().reduced_betti();
    let sphere2 = BettiVector::from_degrees(&[(2, 1)]);
    let mut s = Suite::new();
    s.push(
        colim_d == sphere2 && colim_e.is_zero() && hocolim_d == hocolim_e,
        json!({ "colim_d": colim_d, "colim_e": colim_e, "hocolim_d": hocolim_d, "hocolim_e": hocolim_e }),
    );
    s
}

/// Maps used when `verify` is run without `--map`, by suite.
pub fn default_map_specs(suite: &str) -> &'static [&'static str] {
    match suite {
        "strict-decrease" => &["U3,4->U2,4", "U2,4->U1,4"],
        "equivariance" => &["func-M->func-N", "func-N->func-L", "U3,4->U2,4"],
        _ => &["func-M->func-N", "func-N->func-L"],
    }
}

/// Matroids used when `verify` is run without `--matroid`.
pub const DEFAULT_MATROIDS: &[&str] = &["U2,3", "U2,4", "U3,4", "explicit", "func-N", "func-L"];
