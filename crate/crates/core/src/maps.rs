//! Set maps between matroids, weak and strong maps, and the induced maps of
//! lattices of flats.
//!
//! A [`SetMap`] sends every element of the source either to an element of
//! the target or to the zero element `o`. The zero element is fixed and
//! carries rank zero, so it is simply dropped from images before any rank
//! or closure computation.

use std::sync::Arc;

use thiserror::Error;

use crate::bits::{self, Mask};
use crate::lattice::GeometricLattice;
use crate::matroid::{Matroid, MatroidError, ZERO_LABEL};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SetMapError {
    #[error("unknown source element {0:?}")]
    UnknownSource(String),
    #[error("unknown target element {0:?}")]
    UnknownTarget(String),
    #[error("source element {0:?} has no image")]
    MissingImage(String),
    #[error("source element {0:?} is assigned twice")]
    DuplicateAssignment(String),
    #[error("the zero element must map to the zero element")]
    ZeroNotFixed,
    #[error("map is not weak: rank of the image of {witness:?} exceeds its rank")]
    NotWeak { witness: Vec<String> },
    #[error("map is not surjective: {0:?} is not in the image")]
    NotSurjective(String),
    #[error("maps are not composable")]
    NotComposable,
    #[error("no flat of the source maps onto {0:?} with matching rank")]
    WitnessFailed(Vec<String>),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// A function `E(M) ∪ o → E(N) ∪ o` fixing `o`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetMap {
    source: Arc<Matroid>,
    target: Arc<Matroid>,
    images: Vec<Option<usize>>,
}

impl SetMap {
    /// `images[i]` is the target index of source element `i`, `None` for `o`.
    pub fn new(
        source: Arc<Matroid>,
        target: Arc<Matroid>,
        images: Vec<Option<usize>>,
    ) -> Result<Self, SetMapError> {
        if images.len() != source.len() {
            let missing = source.elements().get(images.len()).cloned().unwrap_or_default();
            return Err(SetMapError::MissingImage(missing));
        }
        if let Some(&Some(bad)) = images.iter().find(|i| matches!(i, Some(t) if *t >= target.len())) {
            return Err(SetMapError::UnknownTarget(bad.to_string()));
        }
        Ok(SetMap { source, target, images })
    }

    /// Builds a map from label pairs. Every source element must be assigned;
    /// the pair `("o", "o")` is accepted and any other use of `o` on the
    /// source side is rejected.
    pub fn from_labels<S: AsRef<str>, T: AsRef<str>>(
        source: Arc<Matroid>,
        target: Arc<Matroid>,
        pairs: &[(S, T)],
    ) -> Result<Self, SetMapError> {
        let mut images: Vec<Option<Option<usize>>> = vec![None; source.len()];
        for (from, to) in pairs {
            let (from, to) = (from.as_ref(), to.as_ref());
            if from == ZERO_LABEL {
                if to != ZERO_LABEL {
                    return Err(SetMapError::ZeroNotFixed);
                }
                continue;
            }
            let i = source
                .index_of(from)
                .ok_or_else(|| SetMapError::UnknownSource(from.to_string()))?;
            let image = if to == ZERO_LABEL {
                None
            } else {
                Some(
                    target
                        .index_of(to)
                        .ok_or_else(|| SetMapError::UnknownTarget(to.to_string()))?,
                )
            };
            if images[i].is_some() {
                return Err(SetMapError::DuplicateAssignment(from.to_string()));
            }
            images[i] = Some(image);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, im)| im.ok_or_else(|| SetMapError::MissingImage(source.elements()[i].clone())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(source, target, images)
    }

    /// The identity on labels between two matroids on the same ground labels.
    pub fn identity_on_labels(source: Arc<Matroid>, target: Arc<Matroid>) -> Result<Self, SetMapError> {
        let pairs: Vec<(String, String)> = source.elements().iter().map(|e| (e.clone(), e.clone())).collect();
        Self::from_labels(source, target, &pairs)
    }

    pub fn source(&self) -> &Arc<Matroid> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Matroid> {
        &self.target
    }

    pub fn images(&self) -> &[Option<usize>] {
        &self.images
    }

    /// `(source label, image label)` pairs, including `("o", "o")`.
    pub fn label_pairs(&self) -> Vec<(String, String)> {
        let mut out = vec![(ZERO_LABEL.to_string(), ZERO_LABEL.to_string())];
        for (i, im) in self.images.iter().enumerate() {
            let to = im.map_or(ZERO_LABEL.to_string(), |t| self.target.elements()[t].clone());
            out.push((self.source.elements()[i].clone(), to));
        }
        out
    }

    /// `τ(X)` with `o` dropped.
    pub fn image(&self, x: Mask) -> Mask {
        bits::members(x)
            .filter_map(|i| self.images[i])
            .fold(0, |acc, t| acc | (1 << t))
    }

    /// `{x : τ(x) ∈ Y or τ(x) = o}`.
    pub fn preimage(&self, y: Mask) -> Mask {
        (0..self.images.len())
            .filter(|&i| self.images[i].map_or(true, |t| y & (1 << t) != 0))
            .fold(0, |acc, i| acc | (1 << i))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &SetMap) -> Result<SetMap, SetMapError> {
        if *self.target != *next.source {
            return Err(SetMapError::NotComposable);
        }
        Ok(SetMap {
            source: self.source.clone(),
            target: next.target.clone(),
            images: self.images.iter().map(|im| im.and_then(|t| next.images[t])).collect(),
        })
    }

    /// First subset `X` with `r_N(τ(X)) > r_M(X)`, if any.
    pub fn weak_violation(&self) -> Option<Mask> {
        bits::subsets(self.source.ground())
            .find(|&x| self.target.rank_of(self.image(x)) > self.source.rank_of(x))
    }

    pub fn is_weak(&self) -> bool {
        self.weak_violation().is_none()
    }

    /// The defining condition: whenever `τ|_X` is injective and `τ(X)` is
    /// independent in `N`, `X` is independent in `M`.
    pub fn is_weak_by_independence(&self) -> bool {
        bits::subsets(self.source.ground()).all(|x| {
            let size = bits::count(x);
            let hits_zero = bits::members(x).any(|i| self.images[i].is_none());
            let y = self.image(x);
            let injective = !hits_zero && bits::count(y) == size;
            !(injective && self.target.is_independent(y)) || self.source.is_independent(x)
        })
    }

    /// First flat of `N` whose preimage is not a flat of `M`, if any.
    pub fn strong_violation(&self) -> Option<Mask> {
        self.target
            .lattice()
            .flats()
            .iter()
            .copied()
            .find(|&f| !self.source.is_flat(self.preimage(f)))
    }

    pub fn is_strong(&self) -> bool {
        self.strong_violation().is_none()
    }

    pub fn missed_target(&self) -> Option<usize> {
        let hit = self.image(self.source.ground());
        (0..self.target.len()).find(|&t| hit & (1 << t) == 0)
    }

    pub fn is_surjective(&self) -> bool {
        self.missed_target().is_none()
    }

    /// `τ^#(X) = cl_N(τ(X))`.
    pub fn flat_image(&self, x: Mask) -> Mask {
        self.target.closure(self.image(x))
    }

    /// Whether `τ^#` sends every atom of `lat(M)` to an atom of `lat(N)`.
    pub fn is_non_annihilating(&self) -> bool {
        let lm = self.source.lattice();
        lm.atoms()
            .into_iter()
            .all(|a| self.target.rank_of(self.flat_image(lm.flat(a))) == 1)
    }
}

/// The properties decided by [`classify_map`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapClass {
    pub is_weak: bool,
    pub is_weak_by_independence: bool,
    pub is_strong: bool,
    pub is_surjective: bool,
    pub is_non_annihilating: bool,
    pub weak_witness: Option<Vec<String>>,
    pub strong_witness: Option<Vec<String>>,
}

pub fn classify_map(f: &SetMap) -> MapClass {
    let weak_witness = f.weak_violation();
    let strong_witness = if weak_witness.is_none() { f.strong_violation() } else { None };
    let is_weak = weak_witness.is_none();
    MapClass {
        is_weak,
        is_weak_by_independence: f.is_weak_by_independence(),
        is_strong: is_weak && strong_witness.is_none(),
        is_surjective: f.is_surjective(),
        is_non_annihilating: is_weak && f.is_non_annihilating(),
        weak_witness: weak_witness.map(|w| f.source.labels_of(w)),
        strong_witness: strong_witness.map(|w| f.target.labels_of(w)),
    }
}

/// A map between lattices of flats, given by flat indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatMap {
    source: Arc<GeometricLattice>,
    target: Arc<GeometricLattice>,
    table: Vec<usize>,
}

impl FlatMap {
    pub fn new(source: Arc<GeometricLattice>, target: Arc<GeometricLattice>, table: Vec<usize>) -> Self {
        assert_eq!(table.len(), source.len(), "one image per source flat");
        FlatMap { source, target, table }
    }

    pub fn identity(l: Arc<GeometricLattice>) -> Self {
        let table = (0..l.len()).collect();
        FlatMap { source: l.clone(), target: l, table }
    }

    pub fn source(&self) -> &Arc<GeometricLattice> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GeometricLattice> {
        &self.target
    }

    pub fn get(&self, p: usize) -> usize {
        self.table[p]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &FlatMap) -> Option<FlatMap> {
        if *self.target != *next.source {
            return None;
        }
        Some(FlatMap {
            source: self.source.clone(),
            target: next.target.clone(),
            table: self.table.iter().map(|&q| next.table[q]).collect(),
        })
    }

    pub fn order_violation(&self) -> Option<(usize, usize)> {
        let n = self.source.len();
        (0..n)
            .flat_map(|p| (0..n).map(move |q| (p, q)))
            .find(|&(p, q)| self.source.leq(p, q) && !self.target.leq(self.table[p], self.table[q]))
    }

    pub fn is_order_preserving(&self) -> bool {
        self.order_violation().is_none()
    }

    pub fn is_rank_nonincreasing(&self) -> bool {
        (0..self.source.len()).all(|p| self.target.rank_of(self.table[p]) <= self.source.rank_of(p))
    }

    pub fn join_violation(&self) -> Option<(usize, usize)> {
        let n = self.source.len();
        (0..n).flat_map(|p| (0..n).map(move |q| (p, q))).find(|&(p, q)| {
            self.table[self.source.join(p, q)] != self.target.join(self.table[p], self.table[q])
        })
    }

    pub fn is_join_preserving(&self) -> bool {
        self.join_violation().is_none()
    }

    /// Whether every atom goes to an atom.
    pub fn is_non_annihilating(&self) -> bool {
        self.source
            .atoms()
            .into_iter()
            .all(|a| self.target.rank_of(self.table[a]) == 1)
    }

    /// Whether `self(p) ≥ other(p)` for every flat.
    pub fn dominates(&self, other: &FlatMap) -> bool {
        self.table.len() == other.table.len()
            && self.table.iter().zip(&other.table).all(|(&a, &b)| self.target.leq(b, a))
    }

    /// Flats on which the two maps differ.
    pub fn differences(&self, other: &FlatMap) -> Vec<usize> {
        (0..self.table.len()).filter(|&p| self.table[p] != other.table[p]).collect()
    }

    /// Whether the map is a bijection whose inverse is also order-preserving.
    pub fn is_order_isomorphism(&self) -> bool {
        let n = self.source.len();
        if n != self.target.len() {
            return false;
        }
        let mut seen = vec![false; n];
        for &q in &self.table {
            if seen[q] {
                return false;
            }
            seen[q] = true;
        }
        (0..n).all(|p| {
            (0..n).all(|q| self.source.leq(p, q) == self.target.leq(self.table[p], self.table[q]))
        })
    }
}

/// `τ^#`, the map `X ↦ cl_N(τ(X))` on flats.
pub fn induced_flat_map(f: &SetMap) -> Result<FlatMap, SetMapError> {
    if let Some(w) = f.weak_violation() {
        return Err(SetMapError::NotWeak { witness: f.source.labels_of(w) });
    }
    let lm = f.source.lattice().clone();
    let ln = f.target.lattice().clone();
    let table = lm
        .flats()
        .iter()
        .map(|&x| ln.index_of(f.flat_image(x)).expect("closures are flats"))
        .collect();
    Ok(FlatMap::new(lm, ln, table))
}

/// The factorisation `τ = τ_k ∘ id_k` through `T^k(M)`, `k = r(M) - r(N)`.
#[derive(Debug, Clone)]
pub struct TruncationFactorisation {
    pub k: usize,
    pub truncation: Arc<Matroid>,
    pub id_k: SetMap,
    pub tau_k: SetMap,
}

pub fn factor_through_truncation(f: &SetMap) -> Result<TruncationFactorisation, SetMapError> {
    if let Some(t) = f.missed_target() {
        return Err(SetMapError::NotSurjective(f.target.elements()[t].clone()));
    }
    if let Some(w) = f.weak_violation() {
        return Err(SetMapError::NotWeak { witness: f.source.labels_of(w) });
    }
    let k = f.source.rank() - f.target.rank();
    let truncation = Arc::new(f.source.truncate(k)?);
    let id_k = SetMap::new(
        f.source.clone(),
        truncation.clone(),
        (0..f.source.len()).map(Some).collect(),
    )?;
    let tau_k = SetMap::new(truncation.clone(), f.target.clone(), f.images.clone())?;
    for g in [&id_k, &tau_k] {
        if let Some(w) = g.weak_violation() {
            return Err(SetMapError::NotWeak { witness: g.source.labels_of(w) });
        }
    }
    Ok(TruncationFactorisation { k, truncation, id_k, tau_k })
}

/// For a surjective weak map and a flat `Y` of the target, a flat `X` of the
/// source with `τ^#(X) = Y` and `r(X) = r(Y)`.
///
/// `X` is the closure of preimages of the lexicographically smallest basis
/// of `Y` (each basis element replaced by its smallest preimage).
pub fn surjection_rank_witness(f: &SetMap, y: Mask) -> Result<Mask, SetMapError> {
    if let Some(t) = f.missed_target() {
        return Err(SetMapError::NotSurjective(f.target.elements()[t].clone()));
    }
    let n = &f.target;
    let mut basis: Mask = 0;
    for e in bits::members(y) {
        if n.is_independent(basis | (1 << e)) {
            basis |= 1 << e;
        }
    }
    let lifted = bits::members(basis)
        .map(|t| {
            f.images
                .iter()
                .position(|&im| im == Some(t))
                .expect("surjective map hits every element")
        })
        .fold(0, |acc, i| acc | (1 << i));
    let x = f.source.closure(lifted);
    if f.flat_image(x) != y || f.source.rank_of(x) != n.rank_of(y) {
        return Err(SetMapError::WitnessFailed(n.labels_of(y)));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(r: usize, n: usize) -> Arc<Matroid> {
        Arc::new(Matroid::uniform(r, n).unwrap())
    }

    #[test]
    fn identity_is_weak_strong_surjective() {
        let m = u(2, 3);
        let id = SetMap::identity_on_labels(m.clone(), m).unwrap();
        let c = classify_map(&id);
        assert!(c.is_weak && c.is_strong && c.is_surjective && c.is_non_annihilating);
    }

    #[test]
    fn everything_to_zero() {
        let m = u(2, 3);
        let pairs = [("1", "o"), ("2", "o"), ("3", "o")];
        let f = SetMap::from_labels(m.clone(), m, &pairs).unwrap();
        let c = classify_map(&f);
        assert!(c.is_weak);
        assert!(!c.is_non_annihilating);
        assert!(!c.is_surjective);
    }

    #[test]
    fn rejects_bad_documents() {
        let m = u(2, 3);
        assert!(matches!(
            SetMap::from_labels(m.clone(), m.clone(), &[("1", "1"), ("2", "2")]),
            Err(SetMapError::MissingImage(_))
        ));
        assert!(matches!(
            SetMap::from_labels(m.clone(), m, &[("o", "1")]),
            Err(SetMapError::ZeroNotFixed)
        ));
    }

    #[test]
    fn truncation_factorisation() {
        let m = u(3, 4);
        let n = u(1, 4);
        let f = SetMap::identity_on_labels(m.clone(), n.clone()).unwrap();
        let fac = factor_through_truncation(&f).unwrap();
        assert_eq!(fac.k, 2);
        assert_eq!(*fac.truncation, *n);
        assert_eq!(fac.id_k.then(&fac.tau_k).unwrap(), f);
    }

    #[test]
    fn rank_increasing_map_is_not_weak() {
        let m = u(1, 2);
        let n = u(2, 2);
        let f = SetMap::identity_on_labels(m, n).unwrap();
        assert!(!f.is_weak());
        assert!(!f.is_weak_by_independence());
        assert!(induced_flat_map(&f).is_err());
    }
}
