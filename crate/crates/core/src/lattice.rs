//! Lattices of flats, Möbius values and Whitney numbers of the first kind.

use std::collections::HashMap;

use crate::bits::{self, Mask};
use crate::label::Label;
use crate::matroid::Matroid;
use crate::poset::FinitePoset;

/// The flats of a matroid ordered by containment.
///
/// Flats are indexed by position: sorted by rank, then lexicographically by
/// their ascending element sequence. Index `0` is always the bottom flat
/// `cl(∅)` and the last index is the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricLattice {
    elements: Vec<String>,
    flats: Vec<Mask>,
    ranks: Vec<usize>,
    index: HashMap<Mask, usize>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
}

impl GeometricLattice {
    /// Enumerates flats as the closures of all subsets of the ground set.
    pub fn of_matroid(m: &Matroid) -> Self {
        let mut seen: HashMap<Mask, ()> = HashMap::new();
        for s in bits::subsets(m.ground()) {
            seen.insert(m.closure(s), ());
        }
        let mut flats: Vec<Mask> = seen.into_keys().collect();
        flats.sort_by(|&a, &b| {
            m.rank_of(a)
                .cmp(&m.rank_of(b))
                .then_with(|| bits::lex_cmp(a, b))
        });
        let ranks: Vec<usize> = flats.iter().map(|&f| m.rank_of(f)).collect();
        let index: HashMap<Mask, usize> = flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();

        let n = flats.len();
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                if ranks[j] == ranks[i] + 1 && bits::is_subset(flats[i], flats[j]) {
                    upper_covers[i].push(j);
                    lower_covers[j].push(i);
                }
            }
        }
        let lattice = GeometricLattice {
            elements: m.elements().to_vec(),
            flats,
            ranks,
            index,
            upper_covers,
            lower_covers,
        };
        debug_assert!(lattice.semimodularity_violation().is_none());
        lattice
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[Mask] {
        &self.flats
    }

    pub fn flat(&self, i: usize) -> Mask {
        self.flats[i]
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn index_of(&self, flat: Mask) -> Option<usize> {
        self.index.get(&flat).copied()
    }

    pub fn rank_of(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn rank(&self) -> usize {
        self.ranks[self.top()]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        bits::is_subset(self.flats[a], self.flats[b])
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.index[&(self.flats[a] & self.flats[b])]
    }

    /// The smallest flat above both; the intersection of all flats containing the union.
    pub fn join(&self, a: usize, b: usize) -> usize {
        let union = self.flats[a] | self.flats[b];
        let meet = self
            .flats
            .iter()
            .filter(|&&f| bits::is_subset(union, f))
            .fold(self.flats[self.top()], |acc, &f| acc & f);
        self.index[&meet]
    }

    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items
            .into_iter()
            .fold(self.bottom(), |acc, x| self.join(acc, x))
    }

    pub fn of_rank(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.ranks[i] == k)
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.of_rank(1).collect()
    }

    pub fn coatoms(&self) -> Vec<usize> {
        match self.rank() {
            0 => Vec::new(),
            r => self.of_rank(r - 1).collect(),
        }
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper_covers[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower_covers[i]
    }

    pub fn up_set(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.leq(i, j)).collect()
    }

    pub fn atoms_below(&self, i: usize) -> Vec<usize> {
        self.atoms().into_iter().filter(|&a| self.leq(a, i)).collect()
    }

    pub fn labels_of(&self, i: usize) -> Vec<String> {
        bits::members(self.flats[i])
            .map(|e| self.elements[e].clone())
            .collect()
    }

    /// Set label of a flat, e.g. `{1,2}`.
    pub fn label(&self, i: usize) -> Label {
        Label::Set(self.labels_of(i).into_iter().map(Label::Name).collect())
    }

    pub fn to_poset(&self) -> FinitePoset {
        let labels = (0..self.len()).map(|i| self.label(i)).collect();
        FinitePoset::from_leq(labels, |a, b| self.leq(a, b))
            .expect("containment is a partial order")
    }

    /// First pair violating `r(p) + r(q) >= r(p ∧ q) + r(p ∨ q)`, if any.
    pub fn semimodularity_violation(&self) -> Option<(usize, usize)> {
        for p in 0..self.len() {
            for q in p + 1..self.len() {
                let lhs = self.ranks[p] + self.ranks[q];
                let rhs = self.ranks[self.meet(p, q)] + self.ranks[self.join(p, q)];
                if lhs < rhs {
                    return Some((p, q));
                }
            }
        }
        None
    }

    /// First flat that is not the join of the atoms below it, if any.
    pub fn atomicity_violation(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.join_all(self.atoms_below(i)) != i)
    }

    pub fn mobius(&self) -> MobiusTable {
        MobiusTable::of(self)
    }

    pub fn whitney(&self) -> WhitneyVector {
        WhitneyVector::of(self)
    }
}

/// `μ(0̂, p)` for every flat `p`, indexed like the lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusTable {
    values: Vec<i64>,
}

impl MobiusTable {
    pub fn of(lattice: &GeometricLattice) -> Self {
        let mut values = vec![0i64; lattice.len()];
        // Flats are sorted by rank, so everything below p precedes it.
        for p in 0..lattice.len() {
            values[p] = if p == lattice.bottom() {
                1
            } else {
                -(0..p)
                    .filter(|&q| lattice.leq(q, p))
                    .map(|q| values[q])
                    .sum::<i64>()
            };
        }
        MobiusTable { values }
    }

    pub fn get(&self, p: usize) -> i64 {
        self.values[p]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

/// Whitney numbers of the first kind, `w_0..=w_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhitneyVector(pub Vec<u64>);

impl WhitneyVector {
    pub fn of(lattice: &GeometricLattice) -> Self {
        let mu = lattice.mobius();
        let mut w = vec![0u64; lattice.rank() + 1];
        for p in 0..lattice.len() {
            w[lattice.rank_of(p)] += mu.get(p).unsigned_abs();
        }
        WhitneyVector(w)
    }

    pub fn get(&self, k: usize) -> u64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// Componentwise `self >= other` over the longer of the two lengths.
    pub fn dominates(&self, other: &WhitneyVector) -> bool {
        let n = self.0.len().max(other.0.len());
        (0..n).all(|k| self.get(k) >= other.get(k))
    }
}

/// Checks `μ(0̂,1̂) = -Σ μ(0̂,q)` over coatoms `q` not above the atom `p`,
/// for every atom `p`. Returns the first failing atom.
pub fn coatom_identity_violation(lattice: &GeometricLattice) -> Option<usize> {
    let mu = lattice.mobius();
    let top = mu.get(lattice.top());
    let coatoms = lattice.coatoms();
    lattice.atoms().into_iter().find(|&p| {
        let sum: i64 = coatoms
            .iter()
            .filter(|&&q| !lattice.leq(p, q))
            .map(|&q| mu.get(q))
            .sum();
        top != -sum
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u24_lattice() {
        let l = Matroid::uniform(2, 4).unwrap().lattice().clone();
        assert_eq!(l.len(), 6);
        assert_eq!(l.atoms().len(), 4);
        assert_eq!(l.mobius().get(l.top()), 3);
        assert!(l.semimodularity_violation().is_none());
        assert!(l.atomicity_violation().is_none());
    }

    #[test]
    fn chain_lattice() {
        let l = Matroid::uniform(1, 1).unwrap().lattice().clone();
        assert_eq!(l.len(), 2);
        assert_eq!(l.whitney(), WhitneyVector(vec![1, 1]));
    }

    #[test]
    fn rank_zero_lattice() {
        let l = Matroid::uniform(0, 2).unwrap().lattice().clone();
        assert_eq!(l.len(), 1);
        assert_eq!(l.flat(0), 0b11);
        assert_eq!(l.whitney(), WhitneyVector(vec![1]));
        assert!(coatom_identity_violation(&l).is_none());
    }

    #[test]
    fn uniform_whitney() {
        let l = Matroid::uniform(3, 4).unwrap().lattice().clone();
        assert_eq!(l.whitney(), WhitneyVector(vec![1, 4, 6, 3]));
        for n in 1..6 {
            let w = Matroid::uniform(1, n).unwrap().lattice().whitney();
            assert_eq!(w, WhitneyVector(vec![1, 1]));
        }
    }

    #[test]
    fn atoms_have_mobius_minus_one() {
        let l = Matroid::uniform(3, 5).unwrap().lattice().clone();
        let mu = l.mobius();
        for a in l.atoms() {
            assert_eq!(mu.get(a), -1);
        }
    }

    #[test]
    fn dominance() {
        let a = WhitneyVector(vec![1, 4, 6, 3]);
        let b = WhitneyVector(vec![1, 4, 5, 2]);
        assert!(a.dominates(&b));
        assert!(!b.dominates(&a));
    }
}
