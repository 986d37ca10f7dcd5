//! `matrep`: build topological representations of matroids and check the
//! theorems about them from the command line.
//!
//! Every subcommand prints a JSON report on stdout. The exit status is 0
//! when everything checked holds, 2 when a property is violated and 3 when
//! the input cannot be used.

mod input;
mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use matroid_rep::engstrom::{build_representation, expected_betti};
use matroid_rep::export;
use matroid_rep::homology::reduced_betti_mod_p;
use matroid_rep::lattice::coatom_identity_violation;
use matroid_rep::maps::{classify_map, factor_through_truncation, induced_flat_map};

use input::{input_error, InputError, Inputs, LoadedMap, LoadedMatroid, MatroidDocument};
use report::Report;

#[derive(Parser)]
#[command(name = "matrep", version, about = "Topological representations of matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank, flats, Whitney numbers and Möbius values of a matroid.
    Info { matroid: String },
    /// The lattice of flats with ranks and covers.
    Lattice { matroid: String },
    /// Whitney numbers of the first kind and the characteristic polynomial.
    Whitney { matroid: String },
    /// Truncate a matroid `k` times, lowering its rank by `k`.
    Truncate {
        matroid: String,
        #[arg(long)]
        k: usize,
        /// Write the truncation as a matroid document.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a map (a map document or `SOURCE->TARGET` for the identity).
    CheckMap { map: String },
    /// Build the representation and compare its Betti numbers with the formula.
    Represent(SpaceArgs),
    /// Reduced Betti numbers of a complex (`S<d>`, `two-triangles` or a file).
    Betti { complex: String },
    /// Run verification suites; with no suite flag every suite runs.
    Verify(VerifyArgs),
    /// Write a representation in the complex exchange format.
    Export(SpaceArgs),
}

#[derive(Args)]
struct SpaceArgs {
    matroid: String,
    /// The complex X: `S<d>`, `two-triangles` or a complex file.
    #[arg(long, default_value = "S0")]
    x: String,
    /// Dimension parameter of the immersion; defaults to the document's or the rank.
    #[arg(long)]
    rho: Option<usize>,
    /// Which space to write: `t` (the representation) or `y` (the ambient space).
    #[arg(long, default_value = "t")]
    space: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Matroids to check (files or catalog names); defaults to the catalog.
    #[arg(long = "matroid")]
    matroids: Vec<String>,
    /// Maps to check (files or `SOURCE->TARGET`); defaults per suite.
    #[arg(long = "map")]
    maps: Vec<String>,
    #[arg(long, default_value = "S0")]
    x: String,
    #[arg(long)]
    rho: Option<usize>,
    #[arg(long)]
    formula: bool,
    #[arg(long)]
    surjectivity: bool,
    #[arg(long)]
    strict_decrease: bool,
    #[arg(long)]
    functoriality: bool,
    #[arg(long)]
    whitney_monotone: bool,
    #[arg(long)]
    mobius: bool,
    #[arg(long)]
    stability: bool,
    #[arg(long)]
    arrangement_flats: bool,
    #[arg(long)]
    equivariance: bool,
    #[arg(long)]
    appendix_demo: bool,
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    let start = Instant::now();
    let mut inputs = Inputs::new(&args);
    match run(cli.command, &mut inputs) {
        Ok((results, pass)) => {
            let report = Report { command: args, inputs_digest: inputs.digest(), results, pass };
            print!("{}", report.render(start.elapsed()));
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<InputError>().is_some() {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn run(command: Command, inputs: &mut Inputs) -> Result<(Value, bool)> {
    match command {
        Command::Info { matroid } => info(&inputs.matroid(&matroid)?),
        Command::Lattice { matroid } => lattice(&inputs.matroid(&matroid)?),
        Command::Whitney { matroid } => whitney(&inputs.matroid(&matroid)?),
        Command::Truncate { matroid, k, out } => truncate(&inputs.matroid(&matroid)?, k, out),
        Command::CheckMap { map } => check_map(&inputs.map(&map)?),
        Command::Represent(a) => represent(inputs, a, false),
        Command::Export(a) => represent(inputs, a, true),
        Command::Betti { complex } => {
            let k = inputs.complex(&complex)?;
            let betti = k.reduced_betti();
            let mod_p = reduced_betti_mod_p(&k);
            Ok((
                json!({
                    "betti": betti,
                    "betti_mod_p": mod_p,
                    "f_vector": k.f_vector(),
                    "euler_characteristic": k.euler_characteristic(),
                }),
                betti == mod_p,
            ))
        }
        Command::Verify(a) => verify_cmd(inputs, a),
    }
}

fn info(m: &LoadedMatroid) -> Result<(Value, bool)> {
    let l = m.matroid.lattice();
    let mu = l.mobius();
    let mobius: Vec<Value> = (0..l.len())
        .map(|p| json!({ "flat": l.labels_of(p), "rank": l.rank_of(p), "mu": mu.get(p) }))
        .collect();
    Ok((
        json!({
            "name": m.name,
            "elements": m.matroid.elements(),
            "rank": m.matroid.rank(),
            "flats": l.len(),
            "whitney": l.whitney().as_slice(),
            "mobius": mobius,
        }),
        true,
    ))
}

fn lattice(m: &LoadedMatroid) -> Result<(Value, bool)> {
    let l = m.matroid.lattice();
    let flats: Vec<Value> = (0..l.len())
        .map(|p| {
            let covers: Vec<Vec<String>> = l.upper_covers(p).iter().map(|&q| l.labels_of(q)).collect();
            json!({ "flat": l.labels_of(p), "rank": l.rank_of(p), "upper_covers": covers })
        })
        .collect();
    let semimodular = l.semimodularity_violation().is_none();
    let atomic = l.atomicity_violation().is_none();
    Ok((
        json!({ "name": m.name, "flats": flats, "semimodular": semimodular, "atomic": atomic }),
        semimodular && atomic,
    ))
}

fn whitney(m: &LoadedMatroid) -> Result<(Value, bool)> {
    let l = m.matroid.lattice();
    let w = l.whitney();
    let r = l.rank();
    let chi: Vec<i64> = (0..=r)
        .map(|k| if k % 2 == 0 { w.get(k) as i64 } else { -(w.get(k) as i64) })
        .collect();
    let identity = l.atoms().is_empty() || coatom_identity_violation(l).is_none();
    Ok((
        json!({
            "name": m.name,
            "whitney": w.as_slice(),
            "characteristic_polynomial": { "coefficients_by_codegree": chi },
            "coatom_identity": identity,
        }),
        identity,
    ))
}

fn truncate(m: &LoadedMatroid, k: usize, out: Option<PathBuf>) -> Result<(Value, bool)> {
    let t = m.matroid.truncate(k).map_err(|e| input_error(format!("{}: {e}", m.name)))?;
    let name = format!("T^{k}({})", m.name);
    let n = t.rank();
    if let Some(path) = &out {
        let doc = serde_json::to_string_pretty(&MatroidDocument::of(&name, &t))? + "\n";
        std::fs::write(path, doc).with_context(|| format!("writing {}", path.display()))?;
    }
    let (wm, wt) = (m.matroid.lattice().whitney(), t.lattice().whitney());
    let agree_below = (0..n).all(|i| wm.get(i) == wt.get(i));
    let dominated = wm.get(n) >= wt.get(n);
    Ok((
        json!({
            "name": name,
            "rank": t.rank(),
            "flats": t.lattice().len(),
            "whitney": wt.as_slice(),
            "source_whitney": wm.as_slice(),
            "agree_below_rank": agree_below,
            "top_dominated": dominated,
        }),
        agree_below && dominated,
    ))
}

fn check_map(f: &LoadedMap) -> Result<(Value, bool)> {
    let class = classify_map(&f.map);
    let mut results = json!({
        "map": f.name,
        "assignment": f.map.label_pairs(),
        "weak": class.is_weak,
        "weak_by_independence": class.is_weak_by_independence,
        "strong": class.is_strong,
        "surjective": class.is_surjective,
        "non_annihilating": class.is_non_annihilating,
        "weak_witness": class.weak_witness,
        "strong_witness": class.strong_witness,
    });
    if class.is_weak {
        let phi = induced_flat_map(&f.map)?;
        let (ls, lt) = (phi.source(), phi.target());
        let table: Vec<Value> = (0..ls.len())
            .map(|p| json!({ "flat": ls.labels_of(p), "image": lt.labels_of(phi.get(p)) }))
            .collect();
        results["flat_map"] = Value::from(table);
        results["flat_map_order_preserving"] = Value::Bool(phi.is_order_preserving());
        if let Ok(fac) = factor_through_truncation(&f.map) {
            results["truncation_rank"] = Value::from(fac.k);
        }
    }
    Ok((results, class.is_weak))
}

fn represent(inputs: &mut Inputs, a: SpaceArgs, export_only: bool) -> Result<(Value, bool)> {
    let m = inputs.matroid(&a.matroid)?;
    let x = inputs.complex(&a.x)?;
    let rho = a.rho.or(m.rho).unwrap_or(m.matroid.rank());
    let im = m.immersed(rho)?;
    let rep = build_representation(&im, &x).map_err(|e| input_error(format!("{}: {e}", m.name)))?;
    let space = match a.space.as_str() {
        "t" => rep.t(),
        "y" => rep.y(),
        other => return Err(input_error(format!("unknown space {other:?}; use t or y"))),
    };
    if let Some(path) = &a.out {
        let text = export::to_json(space)?;
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    let mut results = json!({
        "matroid": m.name,
        "x": a.x,
        "rho": rho,
        "space": a.space,
        "vertices": space.num_vertices(),
        "facets": space.facets().len(),
        "f_vector": space.f_vector(),
        "dim": space.dim(),
    });
    if export_only {
        return Ok((results, true));
    }
    let direct = space.reduced_betti();
    let mut pass = true;
    results["betti"] = serde_json::to_value(&direct)?;
    if a.space == "t" {
        let formula = expected_betti(&im, &x);
        pass = direct == formula;
        results["formula"] = serde_json::to_value(&formula)?;
        results["agree"] = Value::Bool(pass);
    }
    Ok((results, pass))
}

fn verify_cmd(inputs: &mut Inputs, a: VerifyArgs) -> Result<(Value, bool)> {
    let x = inputs.complex(&a.x)?;
    let matroids: Vec<LoadedMatroid> = if a.matroids.is_empty() {
        verify::DEFAULT_MATROIDS.iter().map(|s| inputs.matroid(s)).collect::<Result<_>>()?
    } else {
        a.matroids.iter().map(|s| inputs.matroid(s)).collect::<Result<_>>()?
    };
    let given_maps: Vec<LoadedMap> = a.maps.iter().map(|s| inputs.map(s)).collect::<Result<_>>()?;
    let mut maps_for = |suite: &str| -> Result<Vec<LoadedMap>> {
        if given_maps.is_empty() {
            verify::default_map_specs(suite).iter().map(|s| inputs.map(s)).collect()
        } else {
            Ok(given_maps.clone())
        }
    };
    let any = a.formula
        || a.surjectivity
        || a.strict_decrease
        || a.functoriality
        || a.whitney_monotone
        || a.mobius
        || a.stability
        || a.arrangement_flats
        || a.equivariance
        || a.appendix_demo;
    let mut suites = serde_json::Map::new();
    let mut pass = true;
    let mut record = |name: &str, suite: verify::Suite| {
        pass &= suite.pass;
        suites.insert(name.to_string(), suite.to_json());
    };
    if a.formula || !any {
        record("formula", verify::formula(&matroids, a.rho, &x)?);
    }
    if a.surjectivity || !any {
        record("surjectivity", verify::surjectivity(&maps_for("surjectivity")?, a.rho, &x)?);
    }
    if a.strict_decrease || !any {
        record("strict-decrease", verify::strict_decrease(&maps_for("strict-decrease")?, a.rho, &x)?);
    }
    if a.functoriality || !any {
        record("functoriality", verify::functoriality(&maps_for("functoriality")?, a.rho, &x)?);
    }
    if a.whitney_monotone || !any {
        record("whitney-monotone", verify::whitney_monotone(&maps_for("whitney-monotone")?));
    }
    if a.mobius || !any {
        record("mobius", verify::mobius(&matroids));
    }
    if a.stability || !any {
        record("stability", verify::stability(&matroids, a.rho, &x)?);
    }
    if a.arrangement_flats || !any {
        record("arrangement-flats", verify::arrangement(&matroids, &x)?);
    }
    if a.equivariance || !any {
        record("equivariance", verify::equivariance(&matroids, &maps_for("equivariance")?, a.rho)?);
    }
    if a.appendix_demo || !any {
        record("appendix-demo", verify::appendix_demo());
    }
    Ok((json!({ "x": a.x, "suites": suites }), pass))
}
