//! Matroids on small labelled ground sets.
//!
//! A [`Matroid`] stores its full family of independent sets as a table
//! indexed by bitmask, together with the rank of every subset. The ground
//! set is limited to [`MAX_ELEMENTS`] elements, which keeps every query an
//! exact table lookup.
//!
//! The label `"o"` is reserved for the zero element adjoined to every
//! matroid when talking about maps between matroids (see [`crate::maps`]).
//! It never appears in the ground set and carries rank zero.

use std::collections::{BTreeSet, HashSet};
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::bits::{self, Mask};
use crate::lattice::GeometricLattice;

pub const MAX_ELEMENTS: usize = 16;

/// Label of the zero element.
pub const ZERO_LABEL: &str = "o";

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum MatroidError {
    #[error("ground set has {0} elements, at most {MAX_ELEMENTS} are supported")]
    TooManyElements(usize),
    #[error("duplicate element label {0:?}")]
    DuplicateElement(String),
    #[error("the label \"o\" is reserved for the zero element")]
    ReservedLabel,
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("no bases given")]
    EmptyBases,
    #[error("bases have different sizes ({first} and {other})")]
    NotEquicardinal { first: usize, other: usize },
    #[error("exchange axiom fails for {smaller:?} and {larger:?}")]
    ExchangeFailure { smaller: Vec<String>, larger: Vec<String> },
    #[error("the empty set is not independent")]
    EmptySetNotIndependent,
    #[error("family is not closed under subsets: {0:?} is missing")]
    NotDownwardClosed(Vec<String>),
    #[error("flat family is not closed under intersection: {a:?} and {b:?}")]
    NotIntersectionClosed { a: Vec<String>, b: Vec<String> },
    #[error("flat family does not contain the ground set")]
    MissingGroundSet,
    #[error("flat family is not the family of flats of any matroid")]
    NotMatroidal,
    #[error("truncation index {k} exceeds rank {rank}")]
    KOutOfRange { k: usize, rank: usize },
    #[error("uniform matroid needs r <= n (got r = {r}, n = {n})")]
    InvalidUniform { r: usize, n: usize },
    #[error("unknown catalog matroid {0:?}")]
    UnknownCatalogName(String),
}

#[derive(Debug, Clone)]
pub struct Matroid {
    elements: Vec<String>,
    independent: Vec<bool>,
    rank: Vec<u8>,
    rank_total: usize,
    lattice: OnceLock<Arc<GeometricLattice>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.independent == other.independent
    }
}

impl Eq for Matroid {}

fn check_labels<S: AsRef<str>>(elements: &[S]) -> Result<Vec<String>, MatroidError> {
    if elements.len() > MAX_ELEMENTS {
        return Err(MatroidError::TooManyElements(elements.len()));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(elements.len());
    for e in elements {
        let e = e.as_ref();
        if e == ZERO_LABEL {
            return Err(MatroidError::ReservedLabel);
        }
        if !seen.insert(e) {
            return Err(MatroidError::DuplicateElement(e.to_string()));
        }
        out.push(e.to_string());
    }
    Ok(out)
}

fn mask_in(elements: &[String], set: &[impl AsRef<str>]) -> Result<Mask, MatroidError> {
    let mut mask = 0;
    for s in set {
        let s = s.as_ref();
        let i = elements
            .iter()
            .position(|e| e == s)
            .ok_or_else(|| MatroidError::UnknownElement(s.to_string()))?;
        mask |= 1 << i;
    }
    Ok(mask)
}

impl Matroid {
    /// Builds a matroid from a downward-closed independence table.
    fn from_table(elements: Vec<String>, independent: Vec<bool>) -> Result<Self, MatroidError> {
        let n = elements.len();
        let full = 1usize << n;
        debug_assert_eq!(independent.len(), full);
        if !independent[0] {
            return Err(MatroidError::EmptySetNotIndependent);
        }
        for mask in 0..full {
            if !independent[mask] {
                continue;
            }
            for i in bits::members(mask as Mask) {
                let sub = mask & !(1 << i);
                if !independent[sub] {
                    let labels = bits::members(sub as Mask).map(|j| elements[j].clone()).collect();
                    return Err(MatroidError::NotDownwardClosed(labels));
                }
            }
        }

        let mut rank = vec![0u8; full];
        for mask in 1..full {
            rank[mask] = if independent[mask] {
                bits::count(mask as Mask) as u8
            } else {
                bits::members(mask as Mask)
                    .map(|i| rank[mask & !(1 << i)])
                    .max()
                    .unwrap_or(0)
            };
        }

        // Local submodularity of the induced rank function is equivalent to
        // the exchange axiom for a downward-closed family.
        let mut submodular = true;
        'outer: for x_set in 0..full {
            for x in 0..n {
                if x_set & (1 << x) != 0 {
                    continue;
                }
                for y in (x + 1)..n {
                    if x_set & (1 << y) != 0 {
                        continue;
                    }
                    let rx = rank[x_set | (1 << x)] as i32;
                    let ry = rank[x_set | (1 << y)] as i32;
                    let rxy = rank[x_set | (1 << x) | (1 << y)] as i32;
                    if rx + ry < rxy + rank[x_set] as i32 {
                        submodular = false;
                        break 'outer;
                    }
                }
            }
        }
        if !submodular {
            let (small, large) = exchange_witness(&independent, n)
                .expect("submodularity failure implies an exchange failure");
            let labels = |m: Mask| bits::members(m).map(|j| elements[j].clone()).collect();
            return Err(MatroidError::ExchangeFailure {
                smaller: labels(small),
                larger: labels(large),
            });
        }

        let rank_total = rank[full - 1] as usize;
        Ok(Matroid {
            elements,
            independent,
            rank,
            rank_total,
            lattice: OnceLock::new(),
        })
    }

    pub fn from_independents<S: AsRef<str>, T: AsRef<str>>(
        elements: &[S],
        family: &[Vec<T>],
    ) -> Result<Self, MatroidError> {
        let elements = check_labels(elements)?;
        let mut independent = vec![false; 1 << elements.len()];
        for set in family {
            independent[mask_in(&elements, set)? as usize] = true;
        }
        Self::from_table(elements, independent)
    }

    pub fn from_bases<S: AsRef<str>, T: AsRef<str>>(
        elements: &[S],
        bases: &[Vec<T>],
    ) -> Result<Self, MatroidError> {
        let elements = check_labels(elements)?;
        if bases.is_empty() {
            return Err(MatroidError::EmptyBases);
        }
        let masks = bases
            .iter()
            .map(|b| mask_in(&elements, b))
            .collect::<Result<Vec<_>, _>>()?;
        let first = bits::count(masks[0]);
        if let Some(&other) = masks.iter().find(|&&m| bits::count(m) != first) {
            return Err(MatroidError::NotEquicardinal {
                first,
                other: bits::count(other),
            });
        }
        let mut independent = vec![false; 1 << elements.len()];
        for &b in &masks {
            for s in bits::subsets(b) {
                independent[s as usize] = true;
            }
        }
        Self::from_table(elements, independent)
    }

    /// Reconstructs a matroid from its family of flats.
    ///
    /// The rank of a flat is its height above the smallest flat; the rank of
    /// any set is the rank of the smallest flat containing it. The result is
    /// rejected unless its own flats are exactly the given family.
    pub fn from_flats<S: AsRef<str>, T: AsRef<str>>(
        elements: &[S],
        flats: &[Vec<T>],
    ) -> Result<Self, MatroidError> {
        let elements = check_labels(elements)?;
        let n = elements.len();
        let ground: Mask = if n == 0 { 0 } else { ((1u64 << n) - 1) as Mask };
        let mut family: Vec<Mask> = flats
            .iter()
            .map(|f| mask_in(&elements, f))
            .collect::<Result<BTreeSet<_>, _>>()?
            .into_iter()
            .collect();
        if !family.contains(&ground) {
            return Err(MatroidError::MissingGroundSet);
        }
        let members: HashSet<Mask> = family.iter().copied().collect();
        for (i, &a) in family.iter().enumerate() {
            for &b in &family[i + 1..] {
                if !members.contains(&(a & b)) {
                    let labels = |m: Mask| bits::members(m).map(|j| elements[j].clone()).collect();
                    return Err(MatroidError::NotIntersectionClosed {
                        a: labels(a),
                        b: labels(b),
                    });
                }
            }
        }

        family.sort_by_key(|&f| bits::count(f));
        let mut height = vec![0usize; family.len()];
        for i in 0..family.len() {
            height[i] = (0..i)
                .filter(|&j| family[j] != family[i] && bits::is_subset(family[j], family[i]))
                .map(|j| height[j] + 1)
                .max()
                .unwrap_or(0);
        }

        let mut independent = vec![false; 1 << n];
        for mask in 0..(1usize << n) {
            let m = mask as Mask;
            let r = family
                .iter()
                .zip(&height)
                .filter(|(&f, _)| bits::is_subset(m, f))
                .map(|(_, &h)| h)
                .min()
                .expect("ground set contains every subset");
            independent[mask] = r == bits::count(m);
        }
        let matroid = Self::from_table(elements, independent).map_err(|e| match e {
            MatroidError::ExchangeFailure { .. } | MatroidError::NotDownwardClosed(_) => {
                MatroidError::NotMatroidal
            }
            other => other,
        })?;
        let mut recovered: Vec<Mask> = matroid.lattice().flats().to_vec();
        recovered.sort_unstable();
        let mut expected = family.clone();
        expected.sort_unstable();
        if recovered != expected {
            return Err(MatroidError::NotMatroidal);
        }
        Ok(matroid)
    }

    /// The uniform matroid `U_{r,n}` on the labels `"1"..="n"`.
    pub fn uniform(r: usize, n: usize) -> Result<Self, MatroidError> {
        if r > n {
            return Err(MatroidError::InvalidUniform { r, n });
        }
        if n > MAX_ELEMENTS {
            return Err(MatroidError::TooManyElements(n));
        }
        let elements: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let independent = (0..(1usize << n))
            .map(|m| bits::count(m as Mask) <= r)
            .collect();
        Self::from_table(elements, independent)
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn ground(&self) -> Mask {
        ((1u64 << self.elements.len()) - 1) as Mask
    }

    pub fn rank(&self) -> usize {
        self.rank_total
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Mask, MatroidError> {
        mask_in(&self.elements, labels)
    }

    pub fn labels_of(&self, mask: Mask) -> Vec<String> {
        bits::members(mask).map(|i| self.elements[i].clone()).collect()
    }

    pub fn rank_of(&self, mask: Mask) -> usize {
        self.rank[mask as usize] as usize
    }

    pub fn rank_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<usize, MatroidError> {
        Ok(self.rank_of(self.mask_of(labels)?))
    }

    pub fn is_independent(&self, mask: Mask) -> bool {
        self.independent[mask as usize]
    }

    pub fn closure(&self, mask: Mask) -> Mask {
        let r = self.rank_of(mask);
        (0..self.len())
            .filter(|&x| self.rank_of(mask | (1 << x)) == r)
            .fold(mask, |m, x| m | (1 << x))
    }

    pub fn closure_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Mask, MatroidError> {
        Ok(self.closure(self.mask_of(labels)?))
    }

    pub fn is_flat(&self, mask: Mask) -> bool {
        self.closure(mask) == mask
    }

    pub fn independents(&self) -> impl Iterator<Item = Mask> + '_ {
        (0..self.independent.len())
            .filter(|&m| self.independent[m])
            .map(|m| m as Mask)
    }

    pub fn bases(&self) -> impl Iterator<Item = Mask> + '_ {
        self.independents()
            .filter(move |&m| bits::count(m) == self.rank_total)
    }

    /// The `k`-th truncation: the rank function clamped at `rank - k`.
    pub fn truncate(&self, k: usize) -> Result<Matroid, MatroidError> {
        if k > self.rank_total {
            return Err(MatroidError::KOutOfRange {
                k,
                rank: self.rank_total,
            });
        }
        let cap = self.rank_total - k;
        let independent = (0..self.independent.len())
            .map(|m| self.independent[m] && bits::count(m as Mask) <= cap)
            .collect();
        Self::from_table(self.elements.clone(), independent)
    }

    /// The lattice of flats, computed on first use.
    pub fn lattice(&self) -> &Arc<GeometricLattice> {
        self.lattice
            .get_or_init(|| Arc::new(GeometricLattice::of_matroid(self)))
    }
}

/// First pair of independent sets `(I, J)` with `|J| = |I| + 1` for which no
/// element of `J \ I` extends `I`.
fn exchange_witness(independent: &[bool], n: usize) -> Option<(Mask, Mask)> {
    let full = 1usize << n;
    for small in 0..full {
        if !independent[small] {
            continue;
        }
        let size = bits::count(small as Mask);
        for large in 0..full {
            if !independent[large] || bits::count(large as Mask) != size + 1 {
                continue;
            }
            let extends = bits::members((large & !small) as Mask)
                .any(|y| independent[small | (1 << y)]);
            if !extends {
                return Some((small as Mask, large as Mask));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(v: &[&[&str]]) -> Vec<Vec<String>> {
        v.iter()
            .map(|s| s.iter().map(|x| x.to_string()).collect())
            .collect()
    }

    #[test]
    fn bases_of_u23() {
        let m = Matroid::from_bases(&["1", "2", "3"], &sets(&[&["1", "2"], &["1", "3"], &["2", "3"]]))
            .unwrap();
        assert_eq!(m, Matroid::uniform(2, 3).unwrap());
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn bases_u34() {
        let bases = sets(&[
            &["1", "2", "3"],
            &["1", "2", "4"],
            &["1", "3", "4"],
            &["2", "3", "4"],
        ]);
        let m = Matroid::from_bases(&["1", "2", "3", "4"], &bases).unwrap();
        assert_eq!(m, Matroid::uniform(3, 4).unwrap());
    }

    #[test]
    fn bases_must_be_equicardinal() {
        let err = Matroid::from_bases(&["1", "2"], &sets(&[&["1"], &["2"], &["1", "2"]])).unwrap_err();
        assert_eq!(err, MatroidError::NotEquicardinal { first: 1, other: 2 });
    }

    #[test]
    fn exchange_failure_is_witnessed() {
        // {1,2} and {3,4} as the only bases: 1 cannot be extended from {3,4}.
        let err = Matroid::from_bases(&["1", "2", "3", "4"], &sets(&[&["1", "2"], &["3", "4"]]))
            .unwrap_err();
        match err {
            MatroidError::ExchangeFailure { smaller, larger } => {
                assert_eq!(smaller.len() + 1, larger.len());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn reserved_and_unknown_labels() {
        assert_eq!(
            Matroid::uniform(1, 2).unwrap().rank_of_labels(&["7"]),
            Err(MatroidError::UnknownElement("7".into()))
        );
        assert_eq!(
            Matroid::from_bases(&["o"], &sets(&[&["o"]])),
            Err(MatroidError::ReservedLabel)
        );
    }

    #[test]
    fn rank_and_closure_basics() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.rank_of(u23.ground()), 2);
        assert_eq!(u23.rank_of(0), 0);
        assert_eq!(u23.closure(0b011), 0b111);
        assert_eq!(u23.closure(0b001), 0b001);
    }

    #[test]
    fn uniform_rank_zero() {
        let m = Matroid::uniform(0, 2).unwrap();
        assert_eq!(m.rank(), 0);
        assert_eq!(m.closure(0), m.ground());
        assert!(Matroid::uniform(3, 2).is_err());
    }

    #[test]
    fn truncation_clamps_rank() {
        let u34 = Matroid::uniform(3, 4).unwrap();
        assert_eq!(u34.truncate(1).unwrap(), Matroid::uniform(2, 4).unwrap());
        assert_eq!(u34.truncate(0).unwrap(), u34);
        assert_eq!(u34.truncate(3).unwrap().rank(), 0);
        assert_eq!(u34.truncate(4), Err(MatroidError::KOutOfRange { k: 4, rank: 3 }));
    }

    #[test]
    fn flats_missing_ground_set() {
        let err = Matroid::from_flats(&["1", "2"], &sets(&[&[], &["1"]])).unwrap_err();
        assert_eq!(err, MatroidError::MissingGroundSet);
    }

    #[test]
    fn flats_not_intersection_closed() {
        let err = Matroid::from_flats(
            &["1", "2", "3"],
            &sets(&[&[], &["1", "2"], &["2", "3"], &["1", "2", "3"]]),
        )
        .unwrap_err();
        assert!(matches!(err, MatroidError::NotIntersectionClosed { .. }));
    }

    #[test]
    fn flats_not_matroidal() {
        // {1} and {1,2} with nothing covering 2 alone: not geometric.
        let err = Matroid::from_flats(&["1", "2", "3"], &sets(&[&[], &["1"], &["1", "2"], &["1", "2", "3"]]))
            .unwrap_err();
        assert_eq!(err, MatroidError::NotMatroidal);
    }
}
