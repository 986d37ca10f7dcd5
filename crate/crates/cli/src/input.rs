//! Loading matroids, maps and complexes from the command line.
//!
//! Every argument naming a matroid is either a path to a matroid document or
//! a catalog name such as `U2,4` or `explicit`. Complexes are `S<d>`,
//! `two-triangles`, or a path to an exported complex. Everything read is fed
//! into the digest that ends up in the report.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use matroid_rep::catalog;
use matroid_rep::complex::{sphere, two_triangles, SimplicialComplex};
use matroid_rep::engstrom::{ImmersedMatroid, Immersion};
use matroid_rep::export;
use matroid_rep::{Matroid, SetMap};

/// An error caused by the user's input rather than by a violated property.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

pub fn input_error(msg: impl Into<String>) -> anyhow::Error {
    InputError(msg.into()).into()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImmersionEntry {
    pub flat: Vec<String>,
    pub values: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidDocument {
    pub name: String,
    pub ground: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bases: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub independents: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flats: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub immersion: Option<Vec<ImmersionEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<usize>,
}

impl MatroidDocument {
    /// A document listing the flats of `m`.
    pub fn of(name: &str, m: &Matroid) -> Self {
        let lattice = m.lattice();
        MatroidDocument {
            name: name.to_string(),
            ground: m.elements().to_vec(),
            bases: None,
            independents: None,
            flats: Some((0..lattice.len()).map(|p| lattice.labels_of(p)).collect()),
            immersion: None,
            rho: None,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub source: String,
    pub target: String,
    pub assignment: BTreeMap<String, String>,
}

#[derive(Debug, Clone)]
pub struct LoadedMatroid {
    pub name: String,
    pub matroid: Arc<Matroid>,
    pub immersion: Option<Immersion>,
    pub rho: Option<usize>,
}

impl LoadedMatroid {
    /// The document's immersion when it matches `rho`, otherwise the
    /// canonical one.
    pub fn immersed(&self, rho: usize) -> Result<ImmersedMatroid> {
        let im = match &self.immersion {
            Some(l) if l.rho() == rho => ImmersedMatroid::new(self.matroid.clone(), l.clone()),
            _ => ImmersedMatroid::canonical(self.matroid.clone(), rho),
        };
        im.map_err(|e| input_error(format!("{}: {e}", self.name)))
    }
}

#[derive(Debug, Clone)]
pub struct LoadedMap {
    pub name: String,
    pub source: LoadedMatroid,
    pub target: LoadedMatroid,
    pub map: SetMap,
}

/// Collects every input into a SHA-256 digest.
pub struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    pub fn new(args: &[String]) -> Self {
        let mut hasher = Sha256::new();
        for a in args {
            hasher.update(a.as_bytes());
            hasher.update([0]);
        }
        Inputs { hasher }
    }

    fn read(&mut self, path: &Path) -> Result<String> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))
            .map_err(|e| input_error(format!("{e:#}")))?;
        self.hasher.update(path.to_string_lossy().as_bytes());
        self.hasher.update([0]);
        self.hasher.update(text.as_bytes());
        self.hasher.update([0]);
        Ok(text)
    }

    pub fn digest(&self) -> String {
        hex::encode(self.hasher.clone().finalize())
    }

    pub fn matroid(&mut self, spec: &str) -> Result<LoadedMatroid> {
        self.matroid_relative(spec, None)
    }

    fn matroid_relative(&mut self, spec: &str, base: Option<&Path>) -> Result<LoadedMatroid> {
        let path = resolve(spec, base);
        if let Some(path) = path {
            let text = self.read(&path)?;
            return parse_matroid_document(&text, &path);
        }
        let m = catalog::by_name(spec).map_err(|_| {
            input_error(format!("{spec:?} is neither a file nor a catalog matroid (try U2,4, explicit, func-M, func-N, func-L)"))
        })?;
        let immersion = if spec == "explicit" {
            Some(catalog::explicit_immersion(&m).expect("catalog immersion is valid"))
        } else {
            None
        };
        Ok(LoadedMatroid { name: spec.to_string(), matroid: Arc::new(m), immersion, rho: None })
    }

    /// A map file, or `SOURCE->TARGET` for the identity on labels.
    pub fn map(&mut self, spec: &str) -> Result<LoadedMap> {
        if let Some(path) = resolve(spec, None) {
            let text = self.read(&path)?;
            let doc: MapDocument = serde_json::from_str(&text)
                .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
            let base = path.parent().map(Path::to_path_buf);
            let source = self.matroid_relative(&doc.source, base.as_deref())?;
            let target = self.matroid_relative(&doc.target, base.as_deref())?;
            let pairs: Vec<(&String, &String)> = doc.assignment.iter().collect();
            let map = SetMap::from_labels(source.matroid.clone(), target.matroid.clone(), &pairs)
                .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
            let name = format!("{}->{}", source.name, target.name);
            return Ok(LoadedMap { name, source, target, map });
        }
        let (s, t) = spec
            .split_once("->")
            .ok_or_else(|| input_error(format!("{spec:?} is neither a map file nor SOURCE->TARGET")))?;
        let source = self.matroid(s)?;
        let target = self.matroid(t)?;
        let map = SetMap::identity_on_labels(source.matroid.clone(), target.matroid.clone())
            .map_err(|e| input_error(format!("{spec}: {e}")))?;
        Ok(LoadedMap { name: spec.to_string(), source, target, map })
    }

    /// `S<d>`, `two-triangles`, or an exported complex file.
    pub fn complex(&mut self, spec: &str) -> Result<SimplicialComplex> {
        if let Some(path) = resolve(spec, None) {
            let text = self.read(&path)?;
            return export::from_json(&text).map_err(|e| input_error(format!("{}: {e}", path.display())));
        }
        if spec == "two-triangles" {
            return Ok(two_triangles());
        }
        spec.strip_prefix('S')
            .and_then(|d| d.parse::<i64>().ok())
            .and_then(|d| sphere(d).ok())
            .ok_or_else(|| input_error(format!("{spec:?} is not S<d>, two-triangles, or a complex file")))
    }
}

fn resolve(spec: &str, base: Option<&Path>) -> Option<PathBuf> {
    let direct = PathBuf::from(spec);
    if direct.is_file() {
        return Some(direct);
    }
    let joined = base?.join(spec);
    joined.is_file().then_some(joined)
}

fn parse_matroid_document(text: &str, path: &Path) -> Result<LoadedMatroid> {
    let doc: MatroidDocument =
        serde_json::from_str(text).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let given = [doc.bases.is_some(), doc.independents.is_some(), doc.flats.is_some()];
    if given.iter().filter(|&&b| b).count() != 1 {
        return Err(input_error(format!(
            "{}: give exactly one of \"bases\", \"independents\", \"flats\"",
            path.display()
        )));
    }
    let built = if let Some(b) = &doc.bases {
        Matroid::from_bases(&doc.ground, b)
    } else if let Some(i) = &doc.independents {
        Matroid::from_independents(&doc.ground, i)
    } else {
        Matroid::from_flats(&doc.ground, doc.flats.as_ref().expect("checked above"))
    };
    let m = built.map_err(|e| input_error(format!("{} ({}): {e}", path.display(), doc.name)))?;
    let immersion = match &doc.immersion {
        None => None,
        Some(entries) => {
            let rho = doc.rho.unwrap_or(m.rank());
            let pairs: Vec<(Vec<String>, Vec<usize>)> =
                entries.iter().map(|e| (e.flat.clone(), e.values.clone())).collect();
            Some(
                Immersion::from_flat_labels(&m, rho, &pairs)
                    .map_err(|e| input_error(format!("{} ({}): {e}", path.display(), doc.name)))?,
            )
        }
    };
    Ok(LoadedMatroid { name: doc.name, matroid: Arc::new(m), immersion, rho: doc.rho })
}
