//! Finite groups acting on complexes by vertex permutations.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::diagram::Hocolim;
use crate::engstrom::{InducedMap, Representation};
use crate::label::Label;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ActionError {
    #[error("generator {0} is not a permutation of the vertices")]
    NotPermutation(usize),
    #[error("group element maps simplex {simplex:?} outside the complex")]
    NotSimplicial { simplex: Vec<Label> },
    #[error("action is not free: a group element fixes the simplex {simplex:?}")]
    NotFree { simplex: Vec<Label> },
    #[error("unknown vertex label {0}")]
    UnknownVertex(Label),
}

/// A permutation group acting simplicially on a complex, stored as the full
/// list of its elements (the identity first).
#[derive(Debug, Clone)]
pub struct GroupAction {
    complex: Arc<SimplicialComplex>,
    elements: Vec<Vec<u32>>,
}

fn is_simplicial(k: &SimplicialComplex, g: &[u32]) -> Option<Vec<Label>> {
    k.facets().iter().find_map(|f| {
        let mut image: Vec<u32> = f.iter().map(|&v| g[v as usize]).collect();
        image.sort_unstable();
        (!k.contains(&image)).then(|| k.labels_of(f))
    })
}

/// A simplex fixed setwise by the permutation `g`, if any.
pub fn fixed_simplex(k: &SimplicialComplex, g: &[u32]) -> Option<Vec<Label>> {
    for f in k.facets() {
        for &v in f {
            let mut orbit = BTreeSet::from([v]);
            let mut w = g[v as usize];
            while w != v {
                orbit.insert(w);
                w = g[w as usize];
            }
            if orbit.iter().all(|u| f.binary_search(u).is_ok()) {
                let s: Vec<u32> = orbit.into_iter().collect();
                return Some(k.labels_of(&s));
            }
        }
    }
    None
}

impl GroupAction {
    /// The group generated by vertex permutations given as index vectors.
    pub fn new(complex: Arc<SimplicialComplex>, generators: Vec<Vec<u32>>) -> Result<Self, ActionError> {
        let n = complex.num_vertices();
        for (i, g) in generators.iter().enumerate() {
            let mut seen = vec![false; n];
            if g.len() != n || g.iter().any(|&v| v as usize >= n || std::mem::replace(&mut seen[v as usize], true)) {
                return Err(ActionError::NotPermutation(i));
            }
            if let Some(simplex) = is_simplicial(&complex, g) {
                return Err(ActionError::NotSimplicial { simplex });
            }
        }
        let identity: Vec<u32> = (0..n as u32).collect();
        let mut elements = vec![identity.clone()];
        let mut known: BTreeSet<Vec<u32>> = BTreeSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(h) = queue.pop_front() {
            for g in &generators {
                let gh: Vec<u32> = h.iter().map(|&v| g[v as usize]).collect();
                if known.insert(gh.clone()) {
                    elements.push(gh.clone());
                    queue.push_back(gh);
                }
            }
        }
        Ok(GroupAction { complex, elements })
    }

    /// Generators given as label pairs; unlisted vertices are fixed.
    pub fn from_label_generators(
        complex: Arc<SimplicialComplex>,
        generators: &[Vec<(Label, Label)>],
    ) -> Result<Self, ActionError> {
        let mut perms = Vec::new();
        for pairs in generators {
            let mut g: Vec<u32> = (0..complex.num_vertices() as u32).collect();
            for (a, b) in pairs {
                let ia = complex.vertex_index(a).ok_or_else(|| ActionError::UnknownVertex(a.clone()))?;
                let ib = complex.vertex_index(b).ok_or_else(|| ActionError::UnknownVertex(b.clone()))?;
                g[ia as usize] = ib;
            }
            perms.push(g);
        }
        Self::new(complex, perms)
    }

    /// The antipodal swap on `S^0`.
    pub fn antipodal_s0() -> Self {
        let s0 = Arc::new(crate::complex::sphere(0).expect("S^0"));
        Self::new(s0, vec![vec![1, 0]]).expect("swap is a simplicial permutation")
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<u32>] {
        &self.elements
    }

    /// Fails with the first simplex fixed by a nonidentity element.
    pub fn check_free(&self) -> Result<(), ActionError> {
        for g in &self.elements[1..] {
            if let Some(simplex) = fixed_simplex(&self.complex, g) {
                return Err(ActionError::NotFree { simplex });
            }
        }
        Ok(())
    }

    fn act_label(&self, g: &[u32], x: &Label) -> Option<Label> {
        let i = self.complex.vertex_index(x)?;
        Some(self.complex.vertices()[g[i as usize] as usize].clone())
    }

    /// The permutation of hocolim vertices `(p, σ) ↦ (p, g·σ)` where `g`
    /// acts on each copy `(i, x) ↦ (i, g x)`.
    pub fn extend_to_hocolim(&self, rep: &Representation, h: &Hocolim, element: usize) -> Option<Vec<u32>> {
        let g = &self.elements[element];
        let diagram = rep.diagram();
        (0..h.num_vertices() as u32)
            .map(|v| {
                let (p, sigma) = h.cell(v);
                let space = diagram.space(p);
                let mut moved = sigma
                    .iter()
                    .map(|&u| match &space.vertices()[u as usize] {
                        Label::Tuple(parts) if parts.len() == 2 => {
                            let image = Label::pair(parts[0].clone(), self.act_label(g, &parts[1])?);
                            space.vertex_index(&image)
                        }
                        _ => None,
                    })
                    .collect::<Option<Vec<u32>>>()?;
                moved.sort_unstable();
                h.vertex_of(p, &moved)
            })
            .collect()
    }
}

/// Outcome of extending an action through a pair of representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivarianceReport {
    pub simplicial: bool,
    pub free_on_y: bool,
    pub free_on_intersections: bool,
    pub commutes_on_y: bool,
    pub commutes_on_t: bool,
}

impl EquivarianceReport {
    pub fn holds(&self) -> bool {
        self.simplicial && self.free_on_y && self.free_on_intersections && self.commutes_on_y && self.commutes_on_t
    }
}

fn extensions(action: &GroupAction, rep: &Representation, h: &Hocolim) -> Result<Vec<Vec<u32>>, ActionError> {
    (1..action.order())
        .map(|e| {
            action.extend_to_hocolim(rep, h, e).ok_or_else(|| ActionError::NotSimplicial {
                simplex: rep.x().vertices().to_vec(),
            })
        })
        .collect()
}

fn free_and_simplicial(k: &SimplicialComplex, perms: &[Vec<u32>]) -> (bool, bool) {
    let simplicial = perms.iter().all(|g| is_simplicial(k, g).is_none());
    let free = perms.iter().all(|g| fixed_simplex(k, g).is_none());
    (simplicial, free)
}

/// Checks that a free action on `X` extends freely to `Y` and every
/// intersection of arrangement subcomplexes of both representations, and
/// that the induced map commutes with it vertex by vertex.
pub fn check_equivariance(
    action: &GroupAction,
    source: &Representation,
    target: &Representation,
    induced: &InducedMap,
) -> Result<EquivarianceReport, ActionError> {
    action.check_free()?;
    let mut simplicial = true;
    let mut free_on_y = true;
    let mut free_on_intersections = true;
    for rep in [source, target] {
        let on_y = extensions(action, rep, rep.y_hocolim())?;
        let (s, f) = free_and_simplicial(rep.y(), &on_y);
        simplicial &= s;
        free_on_y &= f;
        let lattice = rep.immersed().lattice();
        let atoms = lattice.atoms();
        for mask in 1u64..(1u64 << atoms.len()) {
            let chosen: Vec<usize> = (0..atoms.len()).filter(|i| mask >> i & 1 == 1).map(|i| atoms[i]).collect();
            let keep = rep.intersection_vertices(&chosen);
            if !keep.iter().any(|&b| b) {
                continue;
            }
            let invariant = on_y.iter().all(|g| (0..keep.len()).all(|v| !keep[v] || keep[g[v] as usize]));
            if !invariant {
                simplicial = false;
                continue;
            }
            let sub = rep.induced(&keep);
            let restricted: Vec<Vec<u32>> = on_y
                .iter()
                .map(|g| {
                    (0..sub.num_vertices() as u32)
                        .map(|v| {
                            let label = &sub.vertices()[v as usize];
                            let y = rep.y().vertex_index(label).expect("induced vertex");
                            let image = &rep.y().vertices()[g[y as usize] as usize];
                            sub.vertex_index(image).expect("invariant set")
                        })
                        .collect()
                })
                .collect();
            let (s, f) = free_and_simplicial(&sub, &restricted);
            simplicial &= s;
            free_on_intersections &= f;
        }
    }
    let commutes = |f: &crate::simplicial_map::SimplicialMap, hs: &Hocolim, ht: &Hocolim| -> Result<bool, ActionError> {
        let gs = extensions(action, source, hs)?;
        let gt = extensions(action, target, ht)?;
        Ok(gs
            .iter()
            .zip(&gt)
            .all(|(g, h)| (0..g.len() as u32).all(|v| f.image(g[v as usize]) == h[f.image(v) as usize])))
    };
    let commutes_on_y = commutes(&induced.on_y, source.y_hocolim(), target.y_hocolim())?;
    let commutes_on_t = commutes(&induced.on_t, source.t_hocolim(), target.t_hocolim())?;
    Ok(EquivarianceReport { simplicial, free_on_y, free_on_intersections, commutes_on_y, commutes_on_t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::sphere;
    use crate::engstrom::{build_representation, induced_representation_map, ImmersedMatroid};
    use crate::maps::SetMap;
    use crate::matroid::Matroid;

    #[test]
    fn rotation_of_square_is_free_reflection_is_not() {
        let square = Arc::new(SimplicialComplex::from_facets(vec![
            vec![Label::Int(0), Label::Int(1)],
            vec![Label::Int(1), Label::Int(2)],
            vec![Label::Int(2), Label::Int(3)],
            vec![Label::Int(3), Label::Int(0)],
        ]));
        let rot = GroupAction::new(square.clone(), vec![vec![1, 2, 3, 0]]).unwrap();
        assert_eq!(rot.order(), 4);
        assert!(rot.check_free().is_ok());
        let flip = GroupAction::new(square, vec![vec![0, 3, 2, 1]]).unwrap();
        assert!(matches!(flip.check_free(), Err(ActionError::NotFree { .. })));
    }

    #[test]
    fn non_simplicial_permutation_rejected() {
        let path = Arc::new(SimplicialComplex::from_facets(vec![
            vec![Label::Int(0), Label::Int(1)],
            vec![Label::Int(1), Label::Int(2)],
        ]));
        assert!(matches!(
            GroupAction::new(path, vec![vec![1, 0, 2]]),
            Err(ActionError::NotSimplicial { .. })
        ));
    }

    #[test]
    fn antipodal_identity_u23() {
        let m = Arc::new(Matroid::uniform(2, 3).unwrap());
        let im = ImmersedMatroid::canonical(m.clone(), 2).unwrap();
        let rep = build_representation(&im, &sphere(0).unwrap()).unwrap();
        let id = SetMap::identity_on_labels(m.clone(), m).unwrap();
        let f = induced_representation_map(&id, &rep, &rep, None).unwrap();
        let report = check_equivariance(&GroupAction::antipodal_s0(), &rep, &rep, &f).unwrap();
        assert!(report.holds(), "{report:?}");
    }
}
