//! Exact reduced homology over a field.
//!
//! Boundary matrices are reduced column by column (each column is cleared
//! against earlier columns with the same lowest nonzero row). Columns that
//! reduce to zero give cycles; a cycle whose index is not the lowest row of
//! a reduced boundary column from the next degree is a homology generator.
//! Together, the reduced boundary columns and the generators form an
//! echelon basis of the cycle space, which is what lets us write any cycle
//! in homology coordinates.
//!
//! The default field is the rationals ([`Rational`]); [`Fp`] is a prime
//! field used only as a cross-check in tests and benchmarks.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex};
use crate::simplicial_map::SimplicialMap;

pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse; callers never invert zero.
    fn inv(&self) -> Self;
}

pub type Rational = BigRational;

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

/// Integers modulo the prime `2^31 - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp(u64);

impl Fp {
    pub const P: u64 = 2_147_483_647;

    pub fn value(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(Self::P as i64) as u64)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Fp((self.0 + other.0) % Self::P)
    }
    fn sub(&self, other: &Self) -> Self {
        Fp((self.0 + Self::P - other.0) % Self::P)
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(self.0 * other.0 % Self::P)
    }
    fn inv(&self) -> Self {
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (self.0, Self::P - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % Self::P;
            }
            base = base * base % Self::P;
            exp >>= 1;
        }
        Fp(acc)
    }
}

/// Sparse vector with entries sorted by row.
pub type SparseVec<F> = Vec<(u32, F)>;

/// `a - factor * b`.
fn axpy<F: Field>(a: &[(u32, F)], factor: &F, b: &[(u32, F)]) -> SparseVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, F::zero().sub(&factor.mul(&b[j].1))));
            j += 1;
        } else {
            let v = a[i].1.sub(&factor.mul(&b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// A reduced chain complex with integer boundary coefficients.
///
/// `cells[0]` counts the degree `-1` cells (one for the augmentation);
/// `boundaries[k]` lists, for each cell of degree `k`, its boundary as
/// sparse integer combination of cells of degree `k - 1`.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    pub cells: Vec<usize>,
    pub boundaries: Vec<Vec<Vec<(u32, i64)>>>,
}

impl ChainComplex {
    fn degree_count(&self) -> usize {
        self.cells.len()
    }

    fn boundary<F: Field>(&self, k_idx: usize, col: usize) -> SparseVec<F> {
        if k_idx == 0 {
            return Vec::new();
        }
        let mut v: Vec<(u32, i64)> = self.boundaries[k_idx][col].clone();
        v.sort_by_key(|e| e.0);
        let mut out: SparseVec<F> = Vec::with_capacity(v.len());
        for (row, c) in v {
            match out.last_mut() {
                Some((r, acc)) if *r == row => *acc = acc.add(&F::from_i64(c)),
                _ => out.push((row, F::from_i64(c))),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        out
    }
}

#[derive(Debug, Clone)]
struct DegreeData<F> {
    /// Homology generators: cycle representatives, each with lowest row equal to its cell.
    generators: Vec<SparseVec<F>>,
    generator_by_low: HashMap<u32, usize>,
    /// Reduced boundary columns of the next degree, keyed by lowest row.
    boundary_by_low: HashMap<u32, SparseVec<F>>,
}

/// Reduced homology with explicit generator representatives.
#[derive(Debug, Clone)]
pub struct Homology<F> {
    degrees: Vec<DegreeData<F>>,
}

struct Reduction<F> {
    pivots: HashMap<u32, SparseVec<F>>,
    cycles: Vec<(u32, SparseVec<F>)>,
}

fn reduce<F: Field>(cc: &ChainComplex, k_idx: usize, track: bool) -> Reduction<F> {
    let n = cc.cells[k_idx];
    let mut pivot_cols: HashMap<u32, (SparseVec<F>, SparseVec<F>)> = HashMap::new();
    let mut cycles = Vec::new();
    for j in 0..n {
        let mut col: SparseVec<F> = cc.boundary(k_idx, j);
        let mut v: SparseVec<F> = if track { vec![(j as u32, F::one())] } else { Vec::new() };
        while let Some((low, val)) = col.last().cloned() {
            match pivot_cols.get(&low) {
                Some((r, rv)) => {
                    let factor = val.mul(&r.last().expect("pivot column is nonzero").1.inv());
                    col = axpy(&col, &factor, r);
                    if track {
                        v = axpy(&v, &factor, rv);
                    }
                }
                None => break,
            }
        }
        match col.last() {
            Some(&(low, _)) => {
                pivot_cols.insert(low, (col, v));
            }
            None => cycles.push((j as u32, v)),
        }
    }
    Reduction {
        pivots: pivot_cols.into_iter().map(|(low, (c, _))| (low, c)).collect(),
        cycles,
    }
}

impl<F: Field> Homology<F> {
    pub fn compute(cc: &ChainComplex) -> Self {
        let d = cc.degree_count();
        let reductions: Vec<Reduction<F>> = (0..d).map(|k| reduce::<F>(cc, k, true)).collect();
        let mut pivots_next: Vec<HashMap<u32, SparseVec<F>>> = vec![HashMap::new(); d];
        let mut cycles: Vec<Vec<(u32, SparseVec<F>)>> = Vec::with_capacity(d);
        for (k, red) in reductions.into_iter().enumerate() {
            if k > 0 {
                pivots_next[k - 1] = red.pivots;
            }
            cycles.push(red.cycles);
        }
        let degrees = cycles
            .into_iter()
            .zip(pivots_next)
            .map(|(cyc, boundary_by_low)| {
                let generators: Vec<SparseVec<F>> = cyc
                    .into_iter()
                    .filter(|(j, _)| !boundary_by_low.contains_key(j))
                    .map(|(_, v)| v)
                    .collect();
                let generator_by_low = generators
                    .iter()
                    .enumerate()
                    .map(|(i, g)| (g.last().expect("generator is nonzero").0, i))
                    .collect();
                DegreeData {
                    generators,
                    generator_by_low,
                    boundary_by_low,
                }
            })
            .collect();
        Homology { degrees }
    }

    /// Rank of `H̃_k`; degrees are `-1, 0, 1, ...`.
    pub fn rank(&self, k: i64) -> usize {
        self.degree(k).map_or(0, |d| d.generators.len())
    }

    fn degree(&self, k: i64) -> Option<&DegreeData<F>> {
        usize::try_from(k + 1).ok().and_then(|i| self.degrees.get(i))
    }

    pub fn betti(&self) -> BettiVector {
        BettiVector::from_values((0..self.degrees.len()).map(|i| self.degrees[i].generators.len()).collect())
    }

    pub fn generators(&self, k: i64) -> &[SparseVec<F>] {
        self.degree(k).map_or(&[], |d| &d.generators)
    }

    /// Coordinates of a degree-`k` cycle in the generator basis, or `None`
    /// if the chain is not a cycle.
    pub fn coordinates(&self, k: i64, cycle: &[(u32, F)]) -> Option<Vec<F>> {
        let Some(data) = self.degree(k) else {
            return if cycle.is_empty() { Some(Vec::new()) } else { None };
        };
        let mut coords = vec![F::zero(); data.generators.len()];
        let mut c: SparseVec<F> = cycle.to_vec();
        while let Some((low, val)) = c.last().cloned() {
            if let Some(b) = data.boundary_by_low.get(&low) {
                let factor = val.mul(&b.last().expect("nonzero").1.inv());
                c = axpy(&c, &factor, b);
            } else if let Some(&g) = data.generator_by_low.get(&low) {
                let gen = &data.generators[g];
                let factor = val.mul(&gen.last().expect("nonzero").1.inv());
                coords[g] = coords[g].add(&factor);
                c = axpy(&c, &factor, gen);
            } else {
                return None;
            }
        }
        Some(coords)
    }
}

/// Reduced Betti numbers `β̃_{-1}, β̃_0, ...`, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BettiVector {
    values: Vec<usize>,
}

impl BettiVector {
    /// `values[0]` is `β̃_{-1}`.
    pub fn from_values(mut values: Vec<usize>) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        BettiVector { values }
    }

    /// Builds a vector from `(degree, value)` pairs.
    pub fn from_degrees(pairs: &[(i64, usize)]) -> Self {
        let top = pairs.iter().map(|p| p.0).max().unwrap_or(-1);
        let mut values = vec![0; (top + 2).max(0) as usize];
        for &(k, v) in pairs {
            values[(k + 1) as usize] += v;
        }
        Self::from_values(values)
    }

    pub fn get(&self, k: i64) -> usize {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.values.get(i).copied())
            .unwrap_or(0)
    }

    /// Highest degree present, `-2` for the zero vector.
    pub fn top_degree(&self) -> i64 {
        self.values.len() as i64 - 2
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn nonzero(&self) -> Vec<(i64, usize)> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| (i as i64 - 1, v))
            .collect()
    }

    /// Wedge sum: reduced Betti numbers add.
    pub fn wedge(&self, other: &BettiVector) -> BettiVector {
        let n = self.values.len().max(other.values.len());
        Self::from_values((0..n).map(|i| self.values.get(i).unwrap_or(&0) + other.values.get(i).unwrap_or(&0)).collect())
    }

    pub fn scale(&self, m: usize) -> BettiVector {
        Self::from_values(self.values.iter().map(|v| v * m).collect())
    }

    /// Reduced Betti numbers of a join over a field:
    /// `β̃_k(A * B) = Σ_{i+j=k-1} β̃_i(A) β̃_j(B)`.
    pub fn join(&self, other: &BettiVector) -> BettiVector {
        let mut pairs = Vec::new();
        for (i, a) in self.nonzero() {
            for (j, b) in other.nonzero() {
                pairs.push((i + j + 1, a * b));
            }
        }
        Self::from_degrees(&pairs)
    }

    /// Alternating sum `Σ (-1)^k β̃_k` over `k >= -1`.
    pub fn alternating_sum(&self) -> i64 {
        self.nonzero()
            .iter()
            .map(|&(k, v)| if k.rem_euclid(2) == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nonzero().iter().map(|(k, v)| format!("b{k}={v}")).collect();
        if parts.is_empty() {
            write!(f, "(all zero)")
        } else {
            write!(f, "({})", parts.join(", "))
        }
    }
}

impl Serialize for BettiVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let nz = self.nonzero();
        let mut m = s.serialize_map(Some(nz.len()))?;
        for (k, v) in nz {
            m.serialize_entry(&k.to_string(), &v)?;
        }
        m.end()
    }
}

/// The simplices of a complex indexed per dimension, with the augmented
/// boundary chain complex.
#[derive(Debug, Clone)]
pub struct SimplicialChains {
    simplices: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, u32>>,
}

impl SimplicialChains {
    pub fn new(k: &SimplicialComplex) -> Self {
        let simplices = k.simplices_by_dim();
        let index = simplices
            .iter()
            .map(|list| list.iter().enumerate().map(|(i, s)| (s.clone(), i as u32)).collect())
            .collect();
        SimplicialChains { simplices, index }
    }

    /// Index of a sorted simplex within its dimension.
    pub fn index_of(&self, s: &[u32]) -> Option<u32> {
        if s.is_empty() {
            return Some(0);
        }
        self.index.get(s.len() - 1)?.get(s).copied()
    }

    pub fn simplices(&self, dim: usize) -> &[Simplex] {
        self.simplices.get(dim).map_or(&[], |v| v.as_slice())
    }

    pub fn chain_complex(&self) -> ChainComplex {
        let mut cells = vec![1usize];
        let mut boundaries = vec![Vec::new()];
        for (dim, list) in self.simplices.iter().enumerate() {
            cells.push(list.len());
            let cols = list
                .iter()
                .map(|s| {
                    if dim == 0 {
                        return vec![(0u32, 1i64)];
                    }
                    (0..s.len())
                        .map(|i| {
                            let face: Simplex =
                                s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                            let sign = if i % 2 == 0 { 1 } else { -1 };
                            (self.index[dim - 1][&face], sign)
                        })
                        .collect()
                })
                .collect();
            boundaries.push(cols);
        }
        ChainComplex { cells, boundaries }
    }
}

/// Homology of a simplicial complex together with its simplex indexing.
#[derive(Debug, Clone)]
pub struct SimplicialHomology<F> {
    pub chains: SimplicialChains,
    pub homology: Homology<F>,
}

impl<F: Field> SimplicialHomology<F> {
    pub fn new(k: &SimplicialComplex) -> Self {
        let chains = SimplicialChains::new(k);
        let homology = Homology::compute(&chains.chain_complex());
        SimplicialHomology { chains, homology }
    }

    pub fn betti(&self) -> BettiVector {
        self.homology.betti()
    }
}

/// Ranks only: the number of zero columns minus pivots of the next degree.
pub fn betti_over<F: Field>(cc: &ChainComplex) -> BettiVector {
    let d = cc.cells.len();
    let reds: Vec<Reduction<F>> = (0..d).map(|k| reduce::<F>(cc, k, false)).collect();
    let values = (0..d)
        .map(|k| {
            let zeros = reds[k].cycles.len();
            let killed = reds.get(k + 1).map_or(0, |r| r.pivots.len());
            zeros - killed
        })
        .collect();
    BettiVector::from_values(values)
}

/// Reduced Betti numbers over the rationals.
pub fn reduced_betti(k: &SimplicialComplex) -> BettiVector {
    betti_over::<Rational>(&SimplicialChains::new(k).chain_complex())
}

/// Reduced Betti numbers over `F_p`, `p = 2^31 - 1`.
pub fn reduced_betti_mod_p(k: &SimplicialComplex) -> BettiVector {
    betti_over::<Fp>(&SimplicialChains::new(k).chain_complex())
}

/// Dense matrix over a field.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    /// `None` when the inner dimensions disagree.
    pub fn mul(&self, other: &Matrix<F>) -> Option<Matrix<F>> {
        if self.cols != other.rows {
            return None;
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).add(&a.mul(other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Some(out)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !m[r * cols + c].is_zero()) else {
                continue;
            };
            for j in 0..cols {
                m.swap(rank * cols + j, p * cols + j);
            }
            let inv = m[rank * cols + c].inv();
            for r in 0..rows {
                if r == rank || m[r * cols + c].is_zero() {
                    continue;
                }
                let factor = m[r * cols + c].mul(&inv);
                for j in 0..cols {
                    let v = m[r * cols + j].sub(&factor.mul(&m[rank * cols + j]));
                    m[r * cols + j] = v;
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    /// Row-major entries rendered as strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).to_string()).collect())
            .collect()
    }
}

/// Matrices of an induced map on reduced homology, one per degree `-1, 0, 1, ...`.
#[derive(Debug, Clone, PartialEq)]
pub struct HomologyMap<F> {
    pub matrices: Vec<Matrix<F>>,
}

impl<F: Field> HomologyMap<F> {
    pub fn degree(&self, k: i64) -> Option<&Matrix<F>> {
        usize::try_from(k + 1).ok().and_then(|i| self.matrices.get(i))
    }

    pub fn is_surjective(&self) -> bool {
        self.matrices.iter().all(Matrix::is_surjective)
    }

    pub fn is_injective(&self) -> bool {
        self.matrices.iter().all(Matrix::is_injective)
    }

    /// `self ∘ first`, degreewise.
    pub fn after(&self, first: &HomologyMap<F>) -> Option<HomologyMap<F>> {
        let n = self.matrices.len().max(first.matrices.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            match (self.matrices.get(i), first.matrices.get(i)) {
                (Some(a), Some(b)) => out.push(a.mul(b)?),
                (Some(a), None) => out.push(Matrix::zeros(a.rows(), 0)),
                (None, Some(b)) => out.push(Matrix::zeros(0, b.cols())),
                (None, None) => unreachable!(),
            }
        }
        Some(HomologyMap { matrices: out })
    }
}

/// Image of an oriented simplex under a vertex map: the target simplex index
/// and orientation sign, or `None` when the simplex collapses.
fn push_simplex<F: Field>(
    f: &SimplicialMap,
    s: &[u32],
    target: &SimplicialChains,
) -> Option<(u32, F)> {
    let image: Vec<u32> = s.iter().map(|&v| f.image(v)).collect();
    let mut sorted = image.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    // parity of the sorting permutation via inversion count
    let mut inversions = 0;
    for i in 0..image.len() {
        for j in i + 1..image.len() {
            if image[i] > image[j] {
                inversions += 1;
            }
        }
    }
    let idx = target.index_of(&sorted).expect("simplicial map sends simplices to simplices");
    let sign = if inversions % 2 == 0 { F::one() } else { F::from_i64(-1) };
    Some((idx, sign))
}

/// The map induced on reduced homology, in the generator bases of `source`
/// and `target`.
pub fn homology_map<F: Field>(
    f: &SimplicialMap,
    source: &SimplicialHomology<F>,
    target: &SimplicialHomology<F>,
) -> HomologyMap<F> {
    let top = source.homology.degrees.len().max(target.homology.degrees.len());
    let mut matrices = Vec::with_capacity(top);
    for idx in 0..top {
        let k = idx as i64 - 1;
        let gens = source.homology.generators(k);
        let rows = target.homology.rank(k);
        let mut m = Matrix::zeros(rows, gens.len());
        for (col, g) in gens.iter().enumerate() {
            let mut image: HashMap<u32, F> = HashMap::new();
            for (cell, coeff) in g {
                let pushed = if k == -1 {
                    Some((0, F::one()))
                } else {
                    push_simplex::<F>(f, &source.chains.simplices(k as usize)[*cell as usize], &target.chains)
                };
                if let Some((t, sign)) = pushed {
                    let e = image.entry(t).or_insert_with(F::zero);
                    *e = e.add(&sign.mul(coeff));
                }
            }
            let mut chain: SparseVec<F> = image.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            chain.sort_by_key(|e| e.0);
            let coords = target
                .homology
                .coordinates(k, &chain)
                .expect("chain maps send cycles to cycles");
            for (row, v) in coords.into_iter().enumerate() {
                m.set(row, col, v);
            }
        }
        matrices.push(m);
    }
    HomologyMap { matrices }
}

/// Convenience: rational homology map, computing both homologies.
pub fn rational_homology_map(f: &SimplicialMap) -> HomologyMap<Rational> {
    let hs = SimplicialHomology::<Rational>::new(f.source());
    let ht = SimplicialHomology::<Rational>::new(f.target());
    homology_map(f, &hs, &ht)
}

pub fn rational_to_string(q: &Rational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else if q.is_negative() {
        format!("-{}/{}", q.numer().abs(), q.denom())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{sphere, two_triangles};

    #[test]
    fn betti_of_spheres() {
        assert_eq!(reduced_betti(&sphere(-1).unwrap()), BettiVector::from_degrees(&[(-1, 1)]));
        assert_eq!(reduced_betti(&sphere(0).unwrap()), BettiVector::from_degrees(&[(0, 1)]));
        assert_eq!(reduced_betti(&sphere(1).unwrap()), BettiVector::from_degrees(&[(1, 1)]));
        assert_eq!(reduced_betti(&sphere(3).unwrap()), BettiVector::from_degrees(&[(3, 1)]));
    }

    #[test]
    fn contractible_two_triangles() {
        assert!(reduced_betti(&two_triangles()).is_zero());
    }

    #[test]
    fn fp_inverse() {
        let a = Fp::from_i64(-5);
        assert_eq!(a.mul(&a.inv()), Fp::one());
    }

    #[test]
    fn betti_join_formula() {
        let s0 = BettiVector::from_degrees(&[(0, 1)]);
        let s1 = BettiVector::from_degrees(&[(1, 1)]);
        assert_eq!(s0.join(&s1), BettiVector::from_degrees(&[(2, 1)]));
        let empty = BettiVector::from_degrees(&[(-1, 1)]);
        assert_eq!(s1.join(&empty), s1);
    }

    #[test]
    fn coordinates_of_boundary_are_zero() {
        let h = SimplicialHomology::<Rational>::new(&sphere(1).unwrap());
        assert_eq!(h.homology.rank(1), 1);
        // A generator has coordinate one on itself.
        let g = h.homology.generators(1)[0].clone();
        assert_eq!(h.homology.coordinates(1, &g).unwrap(), vec![<Rational as Field>::one()]);
        // A non-cycle is rejected.
        assert!(h.homology.coordinates(1, &[(0, <Rational as Field>::one())]).is_none());
    }

    #[test]
    fn matrix_rank() {
        let mut m = Matrix::<Rational>::zeros(2, 3);
        m.set(0, 0, Rational::from_i64(1));
        m.set(0, 1, Rational::from_i64(2));
        m.set(1, 0, Rational::from_i64(2));
        m.set(1, 1, Rational::from_i64(4));
        assert_eq!(m.rank(), 1);
        m.set(1, 2, Rational::from_i64(1));
        assert_eq!(m.rank(), 2);
        assert!(m.is_surjective());
        assert!(!m.is_injective());
    }
}
