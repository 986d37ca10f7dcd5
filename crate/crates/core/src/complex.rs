//! Finite abstract simplicial complexes and the standard constructions on them.
//!
//! Vertices carry structured [`Label`]s and are stored sorted, so a vertex
//! index is its position in label order. Simplices are sorted `Vec<u32>` of
//! vertex indices. A complex is determined by its facets; the empty simplex
//! is always implicitly present, so the complex with no vertices is the
//! sphere `S^{-1}` with reduced Betti number `β̃_{-1} = 1`.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use thiserror::Error;

use crate::homology::{self, BettiVector};
use crate::label::Label;

pub type Simplex = Vec<u32>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("vertex index {0} out of range")]
    IndexOutOfRange(u32),
    #[error("duplicate vertex label {0}")]
    DuplicateVertex(Label),
    #[error("join needs disjoint vertex sets; {0} occurs in both")]
    OverlappingVertices(Label),
    #[error("sphere dimension must be at least -1, got {0}")]
    InvalidDimension(i64),
}

#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    vertices: Vec<Label>,
    facets: Vec<Simplex>,
    incidence: OnceLock<Vec<Vec<u32>>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

fn is_sorted_subset(small: &[u32], big: &[u32]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.by_ref().any(|y| y == x))
}

/// Removes empty, duplicate and non-maximal simplices; returns facets sorted.
fn maximal_faces(mut simplices: Vec<Simplex>, n_vertices: usize) -> Vec<Simplex> {
    for s in simplices.iter_mut() {
        s.sort_unstable();
        s.dedup();
    }
    simplices.retain(|s| !s.is_empty());
    simplices.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    simplices.dedup();

    let mut kept: Vec<Simplex> = Vec::new();
    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); n_vertices];
    for s in simplices {
        let rarest = s
            .iter()
            .min_by_key(|&&v| by_vertex[v as usize].len())
            .copied()
            .expect("nonempty simplex");
        let covered = by_vertex[rarest as usize]
            .iter()
            .any(|&f| is_sorted_subset(&s, &kept[f]));
        if !covered {
            for &v in &s {
                by_vertex[v as usize].push(kept.len());
            }
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

impl SimplicialComplex {
    /// The complex with no vertices: `S^{-1}`, the unit for joins.
    pub fn empty() -> Self {
        SimplicialComplex {
            vertices: Vec::new(),
            facets: Vec::new(),
            incidence: OnceLock::new(),
        }
    }

    /// Builds a complex from vertex labels and simplices given as indices
    /// into `vertices`. Every listed vertex becomes a vertex of the complex.
    pub fn from_indexed_facets(
        vertices: Vec<Label>,
        facets: Vec<Vec<u32>>,
    ) -> Result<Self, ComplexError> {
        let n = vertices.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
        for w in order.windows(2) {
            if vertices[w[0]] == vertices[w[1]] {
                return Err(ComplexError::DuplicateVertex(vertices[w[0]].clone()));
            }
        }
        let mut new_index = vec![0u32; n];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new as u32;
        }
        let mut simplices = Vec::with_capacity(facets.len() + n);
        let mut used = vec![false; n];
        for f in facets {
            let mut s = Vec::with_capacity(f.len());
            for v in f {
                let idx = *new_index
                    .get(v as usize)
                    .ok_or(ComplexError::IndexOutOfRange(v))?;
                used[idx as usize] = true;
                s.push(idx);
            }
            simplices.push(s);
        }
        for (v, u) in used.iter().enumerate() {
            if !u {
                simplices.push(vec![v as u32]);
            }
        }
        let mut sorted_vertices = vertices;
        sorted_vertices.sort();
        Ok(SimplicialComplex {
            facets: maximal_faces(simplices, n),
            vertices: sorted_vertices,
            incidence: OnceLock::new(),
        })
    }

    /// Builds a complex from simplices given by vertex labels.
    pub fn from_facets<I, F>(facets: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = Label>,
    {
        let mut vertices: Vec<Label> = Vec::new();
        let mut index: HashMap<Label, u32> = HashMap::new();
        let mut simplices = Vec::new();
        for f in facets {
            let s = f
                .into_iter()
                .map(|l| {
                    *index.entry(l.clone()).or_insert_with(|| {
                        vertices.push(l);
                        (vertices.len() - 1) as u32
                    })
                })
                .collect();
            simplices.push(s);
        }
        Self::from_indexed_facets(vertices, simplices).expect("indices are generated in range")
    }

    pub fn vertices(&self) -> &[Label] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn vertex_index(&self, label: &Label) -> Option<u32> {
        self.vertices.binary_search(label).ok().map(|i| i as u32)
    }

    pub fn labels_of(&self, simplex: &[u32]) -> Vec<Label> {
        simplex.iter().map(|&v| self.vertices[v as usize].clone()).collect()
    }

    pub fn facet_labels(&self) -> Vec<Vec<Label>> {
        self.facets.iter().map(|f| self.labels_of(f)).collect()
    }

    /// `true` for the complex with no vertices.
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Dimension; `-1` for the empty complex.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1)
    }

    fn incidence(&self) -> &[Vec<u32>] {
        self.incidence.get_or_init(|| {
            let mut inc = vec![Vec::new(); self.vertices.len()];
            for (i, f) in self.facets.iter().enumerate() {
                for &v in f {
                    inc[v as usize].push(i as u32);
                }
            }
            inc
        })
    }

    /// Whether the (sorted) vertex set spans a simplex. The empty set always does.
    pub fn contains(&self, simplex: &[u32]) -> bool {
        let Some(&first) = simplex.first() else {
            return true;
        };
        let inc = self.incidence();
        let Some(facets) = inc.get(first as usize) else {
            return false;
        };
        facets
            .iter()
            .any(|&f| is_sorted_subset(simplex, &self.facets[f as usize]))
    }

    pub fn contains_labels(&self, labels: &[Label]) -> bool {
        let mut idx = Vec::with_capacity(labels.len());
        for l in labels {
            match self.vertex_index(l) {
                Some(i) => idx.push(i),
                None => return false,
            }
        }
        idx.sort_unstable();
        idx.dedup();
        self.contains(&idx)
    }

    /// All nonempty simplices grouped by dimension (`result[k]` holds the
    /// `k`-simplices), each group sorted.
    pub fn simplices_by_dim(&self) -> Vec<Vec<Simplex>> {
        let top = self.dim();
        if top < 0 {
            return Vec::new();
        }
        let mut sets: Vec<HashSet<Simplex>> = vec![HashSet::new(); top as usize + 1];
        for f in &self.facets {
            let n = f.len();
            for mask in 1u64..(1u64 << n) {
                let s: Simplex = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| f[i]).collect();
                sets[s.len() - 1].insert(s);
            }
        }
        sets.into_iter()
            .map(|s| {
                let mut v: Vec<Simplex> = s.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect()
    }

    /// Number of nonempty simplices in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices_by_dim().iter().map(Vec::len).collect()
    }

    /// `Σ_k (-1)^k f_k` over nonempty simplices.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets
            .iter()
            .all(|f| other.contains_labels(&self.labels_of(f)))
    }

    pub fn relabel(&self, f: impl Fn(&Label) -> Label) -> Result<Self, ComplexError> {
        Self::from_indexed_facets(self.vertices.iter().map(f).collect(), self.facets.clone())
    }

    /// The full subcomplex on the vertices satisfying `keep`.
    pub fn induced(&self, keep: impl Fn(u32, &Label) -> bool) -> Self {
        let kept: Vec<u32> = (0..self.vertices.len() as u32)
            .filter(|&v| keep(v, &self.vertices[v as usize]))
            .collect();
        let mut new_index = vec![u32::MAX; self.vertices.len()];
        for (i, &v) in kept.iter().enumerate() {
            new_index[v as usize] = i as u32;
        }
        let facets = self
            .facets
            .iter()
            .map(|f| {
                f.iter()
                    .filter(|&&v| new_index[v as usize] != u32::MAX)
                    .map(|&v| new_index[v as usize])
                    .collect()
            })
            .collect();
        let labels = kept.iter().map(|&v| self.vertices[v as usize].clone()).collect();
        Self::from_indexed_facets(labels, facets).expect("indices in range")
    }

    /// Union inside the common label universe.
    pub fn union(&self, other: &SimplicialComplex) -> Self {
        Self::from_facets(self.facet_labels().into_iter().chain(other.facet_labels()))
    }

    pub fn reduced_betti(&self) -> BettiVector {
        homology::reduced_betti(self)
    }
}

/// `S^d` as the boundary of the `(d+1)`-simplex on labels `0..=d+1`;
/// `d = -1` gives the empty complex.
pub fn sphere(d: i64) -> Result<SimplicialComplex, ComplexError> {
    if d < -1 {
        return Err(ComplexError::InvalidDimension(d));
    }
    if d == -1 {
        return Ok(SimplicialComplex::empty());
    }
    let all: Vec<i64> = (0..=d + 1).collect();
    let facets = (0..all.len()).map(|skip| {
        all.iter()
            .enumerate()
            .filter(move |(i, _)| *i != skip)
            .map(|(_, &v)| Label::Int(v))
            .collect::<Vec<_>>()
    });
    Ok(SimplicialComplex::from_facets(facets))
}

/// The full simplex on the given labels.
pub fn simplex(labels: Vec<Label>) -> SimplicialComplex {
    SimplicialComplex::from_facets([labels])
}

/// Join of complexes with disjoint vertex sets.
pub fn join(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
    if let Some(shared) = a.vertices().iter().find(|l| b.vertex_index(l).is_some()) {
        return Err(ComplexError::OverlappingVertices(shared.clone()));
    }
    if a.is_empty() {
        return Ok(b.clone());
    }
    if b.is_empty() {
        return Ok(a.clone());
    }
    let fa = a.facet_labels();
    let fb = b.facet_labels();
    let facets = fa.iter().flat_map(|x| {
        fb.iter().map(move |y| x.iter().chain(y.iter()).cloned().collect::<Vec<_>>())
    });
    Ok(SimplicialComplex::from_facets(facets))
}

/// Join of copies of `x`, one for each index, with vertices labelled `(i, v)`.
pub fn join_copies(x: &SimplicialComplex, indices: &[i64]) -> SimplicialComplex {
    let mut result = SimplicialComplex::empty();
    for &i in indices {
        let copy = x
            .relabel(|v| Label::pair(Label::Int(i), v.clone()))
            .expect("tagging keeps labels distinct");
        result = join(&result, &copy).expect("distinct copy indices give disjoint copies");
    }
    result
}

/// `X^{*d}`: `d` copies labelled `1..=d`; `d = 0` gives the empty complex.
pub fn iterated_join(x: &SimplicialComplex, d: usize) -> SimplicialComplex {
    let indices: Vec<i64> = (1..=d as i64).collect();
    join_copies(x, &indices)
}

/// `k`-fold suspension: the join with `k` copies of `S^0`.
pub fn suspension_iter(a: &SimplicialComplex, k: usize) -> SimplicialComplex {
    if k == 0 {
        return a.clone();
    }
    let base = a
        .relabel(|v| Label::pair(Label::Int(0), v.clone()))
        .expect("tagging keeps labels distinct");
    let s0 = sphere(0).expect("valid dimension");
    let poles = join_copies(&s0, &(1..=k as i64).collect::<Vec<_>>());
    join(&base, &poles).expect("tag 0 is disjoint from the pole copies")
}

/// Disjoint union with vertices tagged `(0, a)` and `(1, b)`.
pub fn disjoint_union(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    let tag = |t: i64, k: &SimplicialComplex| {
        k.facet_labels()
            .into_iter()
            .map(move |f| f.into_iter().map(|v| Label::pair(Label::Int(t), v)).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    };
    SimplicialComplex::from_facets(tag(0, a).into_iter().chain(tag(1, b)))
}

/// Two triangles glued along an edge: `{a,b,c}` and `{b,c,d}`.
pub fn two_triangles() -> SimplicialComplex {
    SimplicialComplex::from_facets([
        vec![Label::name("a"), Label::name("b"), Label::name("c")],
        vec![Label::name("b"), Label::name("c"), Label::name("d")],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spheres() {
        let s0 = sphere(0).unwrap();
        assert_eq!(s0.num_vertices(), 2);
        assert_eq!(s0.facets().len(), 2);
        let s1 = sphere(1).unwrap();
        assert_eq!(s1.f_vector(), vec![3, 3]);
        assert!(sphere(-1).unwrap().is_empty());
        assert!(sphere(-2).is_err());
    }

    #[test]
    fn facets_are_maximal() {
        let k = SimplicialComplex::from_facets([
            vec![Label::Int(1), Label::Int(2)],
            vec![Label::Int(1)],
            vec![Label::Int(2), Label::Int(1)],
            vec![Label::Int(3)],
        ]);
        assert_eq!(k.facets(), &[vec![0, 1], vec![2]]);
    }

    #[test]
    fn join_with_empty_is_unit() {
        let t = two_triangles();
        assert_eq!(join(&t, &SimplicialComplex::empty()).unwrap(), t);
        assert_eq!(join(&SimplicialComplex::empty(), &t).unwrap(), t);
    }

    #[test]
    fn join_rejects_overlap() {
        let s0 = sphere(0).unwrap();
        assert!(matches!(join(&s0, &s0), Err(ComplexError::OverlappingVertices(_))));
    }

    #[test]
    fn iterated_join_of_s0_is_square() {
        let sq = iterated_join(&sphere(0).unwrap(), 2);
        assert_eq!(sq.f_vector(), vec![4, 4]);
        assert!(iterated_join(&sphere(0).unwrap(), 0).is_empty());
        assert_eq!(iterated_join(&two_triangles(), 1).f_vector(), two_triangles().f_vector());
    }

    #[test]
    fn induced_subcomplex() {
        let t = two_triangles();
        let sub = t.induced(|_, l| *l != Label::name("d"));
        assert_eq!(sub.facets().len(), 1);
        assert!(sub.is_subcomplex_of(&t));
        assert!(!t.is_subcomplex_of(&sub));
    }

    #[test]
    fn contains_checks() {
        let t = two_triangles();
        assert!(t.contains(&[]));
        assert!(t.contains_labels(&[Label::name("b"), Label::name("d")]));
        assert!(!t.contains_labels(&[Label::name("a"), Label::name("d")]));
        assert!(!t.contains_labels(&[Label::name("z")]));
    }

    #[test]
    fn euler_of_two_triangles() {
        // 4 vertices, 5 edges, 2 triangles
        assert_eq!(two_triangles().f_vector(), vec![4, 5, 2]);
        assert_eq!(two_triangles().euler_characteristic(), 1);
    }
}
