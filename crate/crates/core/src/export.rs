//! The JSON exchange format for complexes.
//!
//! A complex is written as `{"facets": [[...], ...], "vertices": [...]}` with
//! every vertex label rendered as a string. Labels inside each facet, the
//! facet list and the vertex list are all sorted lexicographically, so the
//! output is byte-identical across runs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::label::Label;

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("two vertices render to the same label {0:?}")]
    AmbiguousLabel(String),
    #[error("facet mentions unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error(transparent)]
    Complex(#[from] crate::complex::ComplexError),
    #[error("malformed complex document: {0}")]
    Parse(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub facets: Vec<Vec<String>>,
    pub vertices: Vec<String>,
}

impl ComplexDocument {
    pub fn of(k: &SimplicialComplex) -> Result<Self, ExportError> {
        let mut vertices: Vec<String> = k.vertices().iter().map(Label::to_string).collect();
        vertices.sort();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(ExportError::AmbiguousLabel(w[0].clone()));
        }
        let mut facets: Vec<Vec<String>> = k
            .facet_labels()
            .into_iter()
            .map(|f| {
                let mut f: Vec<String> = f.iter().map(Label::to_string).collect();
                f.sort();
                f
            })
            .collect();
        facets.sort();
        Ok(ComplexDocument { facets, vertices })
    }

    /// The complex with every vertex labelled by its string.
    pub fn to_complex(&self) -> Result<SimplicialComplex, ExportError> {
        let known: std::collections::HashSet<&String> = self.vertices.iter().collect();
        if let Some(bad) = self.facets.iter().flatten().find(|v| !known.contains(v)) {
            return Err(ExportError::UnknownVertex(bad.clone()));
        }
        let vertices: Vec<Label> = self.vertices.iter().map(|v| Label::Name(v.clone())).collect();
        let index: std::collections::HashMap<&String, u32> =
            self.vertices.iter().enumerate().map(|(i, v)| (v, i as u32)).collect();
        let facets = self.facets.iter().map(|f| f.iter().map(|v| index[v]).collect()).collect();
        Ok(SimplicialComplex::from_indexed_facets(vertices, facets)?)
    }
}

pub fn to_json(k: &SimplicialComplex) -> Result<String, ExportError> {
    Ok(serde_json::to_string_pretty(&ComplexDocument::of(k)?)? + "\n")
}

pub fn from_json(text: &str) -> Result<SimplicialComplex, ExportError> {
    serde_json::from_str::<ComplexDocument>(text)?.to_complex()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{sphere, two_triangles};

    #[test]
    fn round_trip_keeps_betti() {
        for k in [sphere(2).unwrap(), two_triangles(), SimplicialComplex::empty()] {
            let text = to_json(&k).unwrap();
            let back = from_json(&text).unwrap();
            assert_eq!(back.reduced_betti(), k.reduced_betti());
            assert_eq!(to_json(&back).unwrap(), text);
        }
    }

    #[test]
    fn rejects_unknown_vertices() {
        let doc = r#"{"facets": [["a", "z"]], "vertices": ["a"]}"#;
        assert!(matches!(from_json(doc), Err(ExportError::UnknownVertex(_))));
    }
}
