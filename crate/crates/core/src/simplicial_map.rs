//! Vertex maps between simplicial complexes.

use std::sync::Arc;

use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::label::Label;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum MapError {
    #[error("vertex map has {got} entries, source has {expected} vertices")]
    WrongLength { expected: usize, got: usize },
    #[error("vertex {0} has no image")]
    MissingImage(Label),
    #[error("image label {0} is not a vertex of the target")]
    UnknownTarget(Label),
    #[error("image of simplex {simplex:?} is not a simplex of the target")]
    NotSimplicial { simplex: Vec<Label> },
    #[error("maps are not composable")]
    NotComposable,
}

/// A simplicial map given by its action on vertices.
#[derive(Debug, Clone)]
pub struct SimplicialMap {
    source: Arc<SimplicialComplex>,
    target: Arc<SimplicialComplex>,
    vertex_map: Vec<u32>,
}

impl SimplicialMap {
    /// Checks that every facet of `source` lands on a simplex of `target`.
    pub fn new(
        source: Arc<SimplicialComplex>,
        target: Arc<SimplicialComplex>,
        vertex_map: Vec<u32>,
    ) -> Result<Self, MapError> {
        if vertex_map.len() != source.num_vertices() {
            return Err(MapError::WrongLength {
                expected: source.num_vertices(),
                got: vertex_map.len(),
            });
        }
        if let Some(&bad) = vertex_map.iter().find(|&&v| v as usize >= target.num_vertices()) {
            return Err(MapError::UnknownTarget(Label::Int(bad as i64)));
        }
        for f in source.facets() {
            let mut image: Vec<u32> = f.iter().map(|&v| vertex_map[v as usize]).collect();
            image.sort_unstable();
            image.dedup();
            if !target.contains(&image) {
                return Err(MapError::NotSimplicial {
                    simplex: source.labels_of(f),
                });
            }
        }
        Ok(SimplicialMap {
            source,
            target,
            vertex_map,
        })
    }

    /// Builds a map from a function on vertex labels.
    pub fn from_label_fn(
        source: Arc<SimplicialComplex>,
        target: Arc<SimplicialComplex>,
        f: impl Fn(&Label) -> Option<Label>,
    ) -> Result<Self, MapError> {
        let mut vertex_map = Vec::with_capacity(source.num_vertices());
        for v in source.vertices() {
            let image = f(v).ok_or_else(|| MapError::MissingImage(v.clone()))?;
            let idx = target
                .vertex_index(&image)
                .ok_or(MapError::UnknownTarget(image))?;
            vertex_map.push(idx);
        }
        Self::new(source, target, vertex_map)
    }

    /// The identity of a complex.
    pub fn identity(k: Arc<SimplicialComplex>) -> Self {
        let vertex_map = (0..k.num_vertices() as u32).collect();
        SimplicialMap {
            source: k.clone(),
            target: k,
            vertex_map,
        }
    }

    pub fn source(&self) -> &SimplicialComplex {
        &self.source
    }

    pub fn target(&self) -> &SimplicialComplex {
        &self.target
    }

    pub fn source_arc(&self) -> &Arc<SimplicialComplex> {
        &self.source
    }

    pub fn target_arc(&self) -> &Arc<SimplicialComplex> {
        &self.target
    }

    pub fn image(&self, v: u32) -> u32 {
        self.vertex_map[v as usize]
    }

    pub fn vertex_map(&self) -> &[u32] {
        &self.vertex_map
    }

    pub fn image_label(&self, v: &Label) -> Option<&Label> {
        let i = self.source.vertex_index(v)?;
        Some(&self.target.vertices()[self.image(i) as usize])
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &SimplicialMap) -> Result<SimplicialMap, MapError> {
        if *self.target != *next.source {
            return Err(MapError::NotComposable);
        }
        Ok(SimplicialMap {
            source: self.source.clone(),
            target: next.target.clone(),
            vertex_map: self.vertex_map.iter().map(|&v| next.image(v)).collect(),
        })
    }

    /// Whether every simplex image lands inside `sub`, a subcomplex of the target.
    pub fn maps_into(&self, sub: &SimplicialComplex) -> bool {
        self.source.facets().iter().all(|f| {
            let labels: Vec<Label> = f
                .iter()
                .map(|&v| self.target.vertices()[self.image(v) as usize].clone())
                .collect();
            sub.contains_labels(&labels)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{simplex, sphere};

    #[test]
    fn collapse_to_point_is_simplicial() {
        let s1 = Arc::new(sphere(1).unwrap());
        let pt = Arc::new(simplex(vec![Label::Int(0)]));
        let f = SimplicialMap::new(s1, pt, vec![0, 0, 0]).unwrap();
        assert_eq!(f.image(2), 0);
    }

    #[test]
    fn rejects_non_simplicial() {
        let disk = Arc::new(simplex(vec![Label::Int(0), Label::Int(1), Label::Int(2)]));
        let s1 = Arc::new(sphere(1).unwrap());
        assert!(SimplicialMap::new(disk.clone(), s1.clone(), vec![0, 1, 2]).is_err());
        assert!(SimplicialMap::new(s1, disk, vec![0, 1, 2]).is_ok());
    }

    #[test]
    fn composition() {
        let s1 = Arc::new(sphere(1).unwrap());
        let id = SimplicialMap::identity(s1.clone());
        let rot = SimplicialMap::new(s1.clone(), s1, vec![1, 2, 0]).unwrap();
        let twice = rot.then(&rot).unwrap().then(&rot).unwrap();
        assert_eq!(twice.vertex_map(), id.vertex_map());
    }
}
