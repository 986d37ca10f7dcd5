//! Engström representations of matroids and the maps induced by weak maps.
//!
//! For a matroid `M` with a `ρ`-immersion `l` (a rank- and order-reversing
//! map from flats to subsets of `[ρ]`) and a complex `X`, the diagram
//! `𝒟_X(M, l)` puts the join of the copies `{i} × X`, `i ∈ l(p)`, over every
//! flat `p`. Its homotopy colimit over all flats is `Y`, over the flats
//! above an atom `a` it is the arrangement subcomplex `A_a`, and over all
//! flats except the bottom it is the representation `T = ⋃ A_a`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::bits::{self, Mask};
use crate::complex::{iterated_join, join_copies, suspension_iter, SimplicialComplex};
use crate::diagram::{induced_map, Diagram, DiagramError, DiagramMorphism, Hocolim};
use crate::homology::{homology_map, BettiVector, HomologyMap, Rational, SimplicialHomology};
use crate::label::Label;
use crate::lattice::GeometricLattice;
use crate::maps::{induced_flat_map, FlatMap, SetMap, SetMapError};
use crate::matroid::Matroid;
use crate::simplicial_map::{MapError, SimplicialMap};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EngstromError {
    #[error("ρ = {rho} is smaller than the rank {rank}")]
    RhoTooSmall { rho: usize, rank: usize },
    #[error("invalid immersion: {0}")]
    InvalidImmersion(ImmersionViolation),
    #[error("immersions use different ρ ({0} and {1})")]
    RhoMismatch(usize, usize),
    #[error("map is not admissible at flat {0}")]
    NotAdmissible(Label),
    #[error("no atom lies in the image of the nonzero flats")]
    NoAtomInImage,
    #[error("the complex X must be nonempty")]
    EmptyComplex,
    #[error("the two representations use different complexes; supply a map between them")]
    ComplexMismatch,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error(transparent)]
    SetMap(#[from] SetMapError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Map(#[from] MapError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ImmersionViolation {
    WrongLength { expected: usize, got: usize },
    OutOfRange { flat: Label, value: usize },
    RankReversal { flat: Label, size: usize, expected: usize },
    OrderReversal { lower: Label, upper: Label },
}

impl std::fmt::Display for ImmersionViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::WrongLength { expected, got } => write!(f, "{got} values for {expected} flats"),
            Self::OutOfRange { flat, value } => write!(f, "l({flat}) contains {value}, outside [ρ]"),
            Self::RankReversal { flat, size, expected } => {
                write!(f, "|l({flat})| = {size}, expected {expected}")
            }
            Self::OrderReversal { lower, upper } => {
                write!(f, "{lower} ≤ {upper} but l({lower}) does not contain l({upper})")
            }
        }
    }
}

/// A `ρ`-immersion, stored as one bitmask per flat (bit `i - 1` for `i ∈ [ρ]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Immersion {
    rho: usize,
    sets: Vec<u32>,
}

impl Immersion {
    /// `l̂(p) = {1, …, ρ - r(p)}`.
    pub fn canonical(lattice: &GeometricLattice, rho: usize) -> Result<Self, EngstromError> {
        if rho < lattice.rank() {
            return Err(EngstromError::RhoTooSmall { rho, rank: lattice.rank() });
        }
        let sets = (0..lattice.len())
            .map(|p| ((1u64 << (rho - lattice.rank_of(p))) - 1) as u32)
            .collect();
        Ok(Immersion { rho, sets })
    }

    /// An immersion from explicit subsets of `[ρ]`, one per flat in lattice order.
    pub fn from_sets(lattice: &GeometricLattice, rho: usize, sets: &[Vec<usize>]) -> Result<Self, EngstromError> {
        if rho < lattice.rank() {
            return Err(EngstromError::RhoTooSmall { rho, rank: lattice.rank() });
        }
        if sets.len() != lattice.len() {
            return Err(EngstromError::InvalidImmersion(ImmersionViolation::WrongLength {
                expected: lattice.len(),
                got: sets.len(),
            }));
        }
        let mut masks = Vec::with_capacity(sets.len());
        for (p, s) in sets.iter().enumerate() {
            let mut m = 0u32;
            for &i in s {
                if i == 0 || i > rho || i > 32 {
                    return Err(EngstromError::InvalidImmersion(ImmersionViolation::OutOfRange {
                        flat: lattice.label(p),
                        value: i,
                    }));
                }
                m |= 1 << (i - 1);
            }
            masks.push(m);
        }
        let im = Immersion { rho, sets: masks };
        match validate_immersion(lattice, &im) {
            Some(v) => Err(EngstromError::InvalidImmersion(v)),
            None => Ok(im),
        }
    }

    /// An immersion given as `(flat labels, subset of [ρ])` pairs covering every flat.
    pub fn from_flat_labels<S: AsRef<str>>(
        m: &Matroid,
        rho: usize,
        assignment: &[(Vec<S>, Vec<usize>)],
    ) -> Result<Self, EngstromError> {
        let lattice = m.lattice();
        let mut sets: Vec<Option<Vec<usize>>> = vec![None; lattice.len()];
        for (flat, values) in assignment {
            let mask = m.mask_of(flat).map_err(SetMapError::from)?;
            let p = lattice.index_of(mask).ok_or_else(|| {
                EngstromError::InvalidImmersion(ImmersionViolation::WrongLength {
                    expected: lattice.len(),
                    got: assignment.len(),
                })
            })?;
            sets[p] = Some(values.clone());
        }
        let sets: Option<Vec<Vec<usize>>> = sets.into_iter().collect();
        let sets = sets.ok_or(EngstromError::InvalidImmersion(ImmersionViolation::WrongLength {
            expected: lattice.len(),
            got: assignment.len(),
        }))?;
        Self::from_sets(lattice, rho, &sets)
    }

    pub fn rho(&self) -> usize {
        self.rho
    }

    pub fn mask(&self, p: usize) -> u32 {
        self.sets[p]
    }

    /// `l(p)` as a sorted list of indices in `[ρ]`.
    pub fn set(&self, p: usize) -> Vec<usize> {
        bits::members(self.sets[p]).map(|i| i + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// First violation of rank- or order-reversal, if any.
pub fn validate_immersion(lattice: &GeometricLattice, l: &Immersion) -> Option<ImmersionViolation> {
    if l.sets.len() != lattice.len() {
        return Some(ImmersionViolation::WrongLength { expected: lattice.len(), got: l.sets.len() });
    }
    for p in 0..lattice.len() {
        if let Some(bad) = bits::members(l.sets[p]).map(|i| i + 1).find(|&i| i > l.rho) {
            return Some(ImmersionViolation::OutOfRange { flat: lattice.label(p), value: bad });
        }
        let size = bits::count(l.sets[p]);
        if lattice.rank_of(p) > l.rho || size != l.rho - lattice.rank_of(p) {
            return Some(ImmersionViolation::RankReversal {
                flat: lattice.label(p),
                size,
                expected: l.rho.saturating_sub(lattice.rank_of(p)),
            });
        }
    }
    for p in 0..lattice.len() {
        for &q in lattice.upper_covers(p) {
            if !bits::is_subset(l.sets[q], l.sets[p]) {
                return Some(ImmersionViolation::OrderReversal { lower: lattice.label(p), upper: lattice.label(q) });
            }
        }
    }
    None
}

/// A matroid together with a valid immersion.
#[derive(Debug, Clone)]
pub struct ImmersedMatroid {
    matroid: Arc<Matroid>,
    immersion: Immersion,
}

impl ImmersedMatroid {
    pub fn new(matroid: Arc<Matroid>, immersion: Immersion) -> Result<Self, EngstromError> {
        if let Some(v) = validate_immersion(matroid.lattice(), &immersion) {
            return Err(EngstromError::InvalidImmersion(v));
        }
        Ok(ImmersedMatroid { matroid, immersion })
    }

    /// `(M, l̂)` at the given `ρ`.
    pub fn canonical(matroid: Arc<Matroid>, rho: usize) -> Result<Self, EngstromError> {
        let immersion = Immersion::canonical(matroid.lattice(), rho)?;
        Ok(ImmersedMatroid { matroid, immersion })
    }

    pub fn matroid(&self) -> &Arc<Matroid> {
        &self.matroid
    }

    pub fn immersion(&self) -> &Immersion {
        &self.immersion
    }

    pub fn lattice(&self) -> &Arc<GeometricLattice> {
        self.matroid.lattice()
    }

    pub fn rho(&self) -> usize {
        self.immersion.rho
    }
}

/// First flat `p` with `l(p) ⊄ l'(φ(p))`, if any.
pub fn admissibility_violation(phi: &FlatMap, l: &Immersion, l2: &Immersion) -> Option<usize> {
    (0..phi.source().len()).find(|&p| !bits::is_subset(l.mask(p), l2.mask(phi.get(p))))
}

/// Whether `l(p) ⊆ l'(τ^#(p))` for every flat `p`.
pub fn is_admissible(tau: &SetMap, l: &Immersion, l2: &Immersion) -> Result<bool, EngstromError> {
    if l.rho != l2.rho {
        return Err(EngstromError::RhoMismatch(l.rho, l2.rho));
    }
    let phi = induced_flat_map(tau)?;
    Ok(admissibility_violation(&phi, l, l2).is_none())
}

/// The diagram `𝒟_X(M, l)` with vertex labels `(i, v)` for `i ∈ [ρ]`, `v ∈ V(X)`.
pub fn build_diagram(im: &ImmersedMatroid, x: &SimplicialComplex) -> Result<Diagram, EngstromError> {
    if x.is_empty() {
        return Err(EngstromError::EmptyComplex);
    }
    let lattice = im.lattice();
    let spaces = (0..lattice.len())
        .map(|p| {
            let copies: Vec<i64> = im.immersion.set(p).into_iter().map(|i| i as i64).collect();
            join_copies(x, &copies)
        })
        .collect();
    Ok(Diagram::inclusion(lattice.to_poset(), spaces)?)
}

/// `Y`, the arrangement subcomplexes `A_a`, and `T = ⋃ A_a`.
#[derive(Debug)]
pub struct Representation {
    immersed: ImmersedMatroid,
    x: Arc<SimplicialComplex>,
    diagram: Arc<Diagram>,
    y: Hocolim,
    t: Hocolim,
    atoms: Vec<(usize, Arc<SimplicialComplex>)>,
    t_homology: OnceLock<SimplicialHomology<Rational>>,
}

pub fn build_representation(im: &ImmersedMatroid, x: &SimplicialComplex) -> Result<Representation, EngstromError> {
    let diagram = Arc::new(build_diagram(im, x)?);
    let lattice = im.lattice();
    let y = diagram.hocolim();
    let nonzero: Vec<usize> = (0..lattice.len()).filter(|&p| p != lattice.bottom()).collect();
    let t = diagram.hocolim_over(&nonzero);
    let atoms = lattice
        .atoms()
        .into_iter()
        .map(|a| (a, diagram.hocolim_over(&lattice.up_set(a)).complex().clone()))
        .collect();
    Ok(Representation {
        immersed: im.clone(),
        x: Arc::new(x.clone()),
        diagram,
        y,
        t,
        atoms,
        t_homology: OnceLock::new(),
    })
}

impl Representation {
    pub fn immersed(&self) -> &ImmersedMatroid {
        &self.immersed
    }

    pub fn x(&self) -> &Arc<SimplicialComplex> {
        &self.x
    }

    pub fn diagram(&self) -> &Arc<Diagram> {
        &self.diagram
    }

    pub fn y(&self) -> &Arc<SimplicialComplex> {
        self.y.complex()
    }

    pub fn t(&self) -> &Arc<SimplicialComplex> {
        self.t.complex()
    }

    pub fn y_hocolim(&self) -> &Hocolim {
        &self.y
    }

    pub fn t_hocolim(&self) -> &Hocolim {
        &self.t
    }

    /// `(atom flat index, A_a)` for every atom.
    pub fn atom_subcomplexes(&self) -> &[(usize, Arc<SimplicialComplex>)] {
        &self.atoms
    }

    /// The flat a vertex of `Y` lies over.
    pub fn provenance(&self, v: u32) -> usize {
        self.y.element_of(v)
    }

    pub fn t_homology(&self) -> &SimplicialHomology<Rational> {
        self.t_homology.get_or_init(|| SimplicialHomology::new(self.t()))
    }

    pub fn t_betti(&self) -> BettiVector {
        self.t_homology().betti()
    }

    /// Vertices of `Y` lying over flats above every atom of `atoms`
    /// (the vertex set of `⋂ A_a`; all of `Y` for the empty set).
    pub fn intersection_vertices(&self, atoms: &[usize]) -> Vec<bool> {
        let lattice = self.immersed.lattice();
        (0..self.y.num_vertices() as u32)
            .map(|v| {
                let p = self.provenance(v);
                atoms.iter().all(|&a| lattice.leq(a, p))
            })
            .collect()
    }

    /// The subcomplex of `Y` induced on a vertex set.
    pub fn induced(&self, keep: &[bool]) -> SimplicialComplex {
        self.y().induced(|v, _| keep[v as usize])
    }
}

/// `Y_i = 𝒮^{i-1}(X^{*(ρ - i)})`.
pub fn y_i(x: &SimplicialComplex, rho: usize, i: usize) -> SimplicialComplex {
    suspension_iter(&iterated_join(x, rho - i), i - 1)
}

/// `Σ_{i=1}^{r} w_i(M) β̃(Y_i)`.
pub fn expected_betti(im: &ImmersedMatroid, x: &SimplicialComplex) -> BettiVector {
    let w = im.lattice().whitney();
    let rho = im.rho();
    (1..=im.matroid().rank()).fold(BettiVector::default(), |acc, i| {
        let wi = w.get(i) as usize;
        if wi == 0 {
            return acc;
        }
        acc.wedge(&y_i(x, rho, i).reduced_betti().scale(wi))
    })
}

/// Flats of the arrangement `{A_a}` recovered from intersections alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrangementFlats {
    /// Each flat as a sorted list of atom flat indices.
    pub flats: Vec<Vec<usize>>,
    /// Whether the family equals `{atoms below F : F ∈ lat(M)}`.
    pub matches_lattice: bool,
}

pub fn arrangement_flats(rep: &Representation) -> ArrangementFlats {
    let lattice = rep.immersed.lattice();
    let atoms = lattice.atoms();
    let atom_sets: Vec<Vec<bool>> = atoms.iter().map(|&a| rep.intersection_vertices(&[a])).collect();
    let subset_of = |a: &[bool], b: &[bool]| a.iter().zip(b).all(|(&x, &y)| !x || y);
    let mut flats: Vec<Vec<usize>> = Vec::new();
    for mask in bits::subsets(((1u64 << atoms.len()) - 1) as Mask) {
        let chosen: Vec<usize> = bits::members(mask).collect();
        let mut v = vec![true; rep.y.num_vertices()];
        for &c in &chosen {
            for (x, &y) in v.iter_mut().zip(&atom_sets[c]) {
                *x &= y;
            }
        }
        let closed = (0..atoms.len())
            .filter(|b| !chosen.contains(b))
            .all(|b| !subset_of(&v, &atom_sets[b]));
        if closed {
            flats.push(chosen.iter().map(|&c| atoms[c]).collect());
        }
    }
    flats.sort();
    let mut expected: Vec<Vec<usize>> = (0..lattice.len()).map(|p| lattice.atoms_below(p)).collect();
    expected.sort();
    let matches_lattice = flats == expected;
    ArrangementFlats { flats, matches_lattice }
}

/// `τ_a`: `τ^#` with every annihilated atom sent to the smallest atom `a`
/// of the image of the nonzero flats, extended to all flats by joins over
/// the atoms below.
pub fn reroute_annihilating(tau: &SetMap) -> Result<FlatMap, EngstromError> {
    let phi = induced_flat_map(tau)?;
    let (lm, ln) = (phi.source().clone(), phi.target().clone());
    let a = (0..lm.len())
        .filter(|&p| p != lm.bottom())
        .map(|p| phi.get(p))
        .filter(|&q| ln.rank_of(q) == 1)
        .min()
        .ok_or(EngstromError::NoAtomInImage)?;
    let on_atom = |p: usize| {
        let q = phi.get(p);
        if q == ln.bottom() {
            a
        } else {
            q
        }
    };
    let table = (0..lm.len())
        .map(|p| ln.join_all(lm.atoms_below(p).into_iter().map(on_atom)))
        .collect();
    Ok(FlatMap::new(lm, ln, table))
}

/// Simplicial maps induced by a weak map on `Y` (via `τ^#`) and on `T`
/// (via `τ_a`, which equals `τ^#` for non-annihilating maps).
#[derive(Debug, Clone)]
pub struct InducedMap {
    pub flat_map: FlatMap,
    pub rerouted: FlatMap,
    pub on_y: SimplicialMap,
    pub on_t: SimplicialMap,
}

impl InducedMap {
    pub fn was_rerouted(&self) -> bool {
        self.flat_map != self.rerouted
    }
}

fn engstrom_morphism(
    phi: &FlatMap,
    source: &Representation,
    target: &Representation,
    f_x: &SimplicialMap,
) -> Result<DiagramMorphism, EngstromError> {
    Ok(DiagramMorphism::from_label_fns(
        source.diagram.clone(),
        target.diagram.clone(),
        phi.table().to_vec(),
        |_, v| match v {
            Label::Tuple(parts) if parts.len() == 2 => {
                let image = f_x.image_label(&parts[1])?.clone();
                Some(Label::pair(parts[0].clone(), image))
            }
            _ => None,
        },
    )?)
}

/// The maps `τ*: Y_M → Y_N` and `T_M → T_N` induced by a `ρ`-admissible weak
/// map and a simplicial map `f_X: X → X'` (the identity when `None`).
pub fn induced_representation_map(
    tau: &SetMap,
    source: &Representation,
    target: &Representation,
    f_x: Option<&SimplicialMap>,
) -> Result<InducedMap, EngstromError> {
    let (l, l2) = (source.immersed.immersion(), target.immersed.immersion());
    if l.rho != l2.rho {
        return Err(EngstromError::RhoMismatch(l.rho, l2.rho));
    }
    let identity;
    let f_x = match f_x {
        Some(f) => f,
        None => {
            if *source.x != *target.x {
                return Err(EngstromError::ComplexMismatch);
            }
            identity = SimplicialMap::identity(source.x.clone());
            &identity
        }
    };
    let phi = induced_flat_map(tau)?;
    if let Some(p) = admissibility_violation(&phi, l, l2) {
        return Err(EngstromError::NotAdmissible(phi.source().label(p)));
    }
    let rerouted = reroute_annihilating(tau)?;
    if let Some(p) = admissibility_violation(&rerouted, l, l2) {
        return Err(EngstromError::NotAdmissible(rerouted.source().label(p)));
    }
    let on_y = induced_map(&engstrom_morphism(&phi, source, target, f_x)?, &source.y, &target.y)?;
    let on_t = induced_map(&engstrom_morphism(&rerouted, source, target, f_x)?, &source.t, &target.t)?;
    Ok(InducedMap { flat_map: phi, rerouted, on_y, on_t })
}

/// The diagram morphism `(φ, inclusion)` behind an induced map, for
/// homotopy comparisons of different flat maps.
pub fn inclusion_morphism(
    phi: &FlatMap,
    source: &Representation,
    target: &Representation,
) -> Result<DiagramMorphism, EngstromError> {
    if let Some(p) = admissibility_violation(phi, source.immersed.immersion(), target.immersed.immersion()) {
        return Err(EngstromError::NotAdmissible(phi.source().label(p)));
    }
    let id = SimplicialMap::identity(source.x.clone());
    engstrom_morphism(phi, source, target, &id)
}

/// The map induced on `T` by a flat map (which must send nonzero flats to
/// nonzero flats), in the homology bases of both representations.
pub fn t_homology_map(
    phi: &FlatMap,
    source: &Representation,
    target: &Representation,
) -> Result<HomologyMap<Rational>, EngstromError> {
    let m = inclusion_morphism(phi, source, target)?;
    let f = induced_map(&m, &source.t, &target.t)?;
    Ok(homology_map(&f, source.t_homology(), target.t_homology()))
}

/// Matrices and ranks of the homology map of a surjective weak map on `T`.
#[derive(Debug, Clone)]
pub struct SurjectivityReport {
    pub source_betti: BettiVector,
    pub target_betti: BettiVector,
    /// `(degree, rows, cols, rank)` for every degree with a nonzero side.
    pub degrees: Vec<(i64, usize, usize, usize)>,
    pub full_row_rank: bool,
    pub betti_inequality: bool,
}

impl SurjectivityReport {
    pub fn holds(&self) -> bool {
        self.full_row_rank && self.betti_inequality
    }
}

pub fn verify_surjectivity(
    tau: &SetMap,
    source: &Representation,
    target: &Representation,
) -> Result<SurjectivityReport, EngstromError> {
    if let Some(t) = tau.missed_target() {
        return Err(SetMapError::NotSurjective(tau.target().elements()[t].clone()).into());
    }
    let induced = induced_representation_map(tau, source, target, None)?;
    let h = homology_map(&induced.on_t, source.t_homology(), target.t_homology());
    let degrees: Vec<(i64, usize, usize, usize)> = h
        .matrices
        .iter()
        .enumerate()
        .filter(|(_, m)| m.rows() + m.cols() > 0)
        .map(|(i, m)| (i as i64 - 1, m.rows(), m.cols(), m.rank()))
        .collect();
    let full_row_rank = degrees.iter().all(|&(_, rows, _, rank)| rank == rows);
    let (sb, tb) = (source.t_betti(), target.t_betti());
    let top = sb.top_degree().max(tb.top_degree());
    let betti_inequality = (-1..=top).all(|k| sb.get(k) >= tb.get(k));
    Ok(SurjectivityReport { source_betti: sb, target_betti: tb, degrees, full_row_rank, betti_inequality })
}

#[derive(Debug, Clone)]
pub struct StrictDecreaseReport {
    pub flagged_degrees: Vec<i64>,
    pub source_betti: BettiVector,
    pub target_betti: BettiVector,
    pub holds: bool,
}

/// Strict Betti decrease in every degree where some `Y_i` with
/// `r(N) < i ≤ r(M)` has homology.
pub fn verify_strict_decrease(
    tau: &SetMap,
    source: &Representation,
    target: &Representation,
) -> Result<StrictDecreaseReport, EngstromError> {
    let (rm, rn) = (tau.source().rank(), tau.target().rank());
    if rm <= rn {
        return Err(EngstromError::NotApplicable(format!("rank does not drop ({rm} to {rn})")));
    }
    let rho = source.immersed.rho();
    if rho != target.immersed.rho() {
        return Err(EngstromError::RhoMismatch(rho, target.immersed.rho()));
    }
    if let Some(t) = tau.missed_target() {
        return Err(SetMapError::NotSurjective(tau.target().elements()[t].clone()).into());
    }
    if !is_admissible(tau, source.immersed.immersion(), target.immersed.immersion())? {
        return Err(EngstromError::NotApplicable("map is not admissible".into()));
    }
    let mut flagged: Vec<i64> = (rn + 1..=rm)
        .flat_map(|i| y_i(&source.x, rho, i).reduced_betti().nonzero().into_iter().map(|(k, _)| k))
        .collect();
    flagged.sort_unstable();
    flagged.dedup();
    let (sb, tb) = (source.t_betti(), target.t_betti());
    let holds = flagged.iter().all(|&k| sb.get(k) > tb.get(k));
    Ok(StrictDecreaseReport { flagged_degrees: flagged, source_betti: sb, target_betti: tb, holds })
}

#[derive(Debug, Clone)]
pub struct StabilityReport {
    pub at_rho: BettiVector,
    pub at_rank: BettiVector,
    pub join_factor: BettiVector,
    pub predicted: BettiVector,
    pub holds: bool,
}

/// `β̃(T_X(M, l)) = β̃(X^{*(ρ-r)} * T_X(M))`, the right side computed from
/// the join formula.
pub fn verify_stability(im: &ImmersedMatroid, x: &SimplicialComplex) -> Result<StabilityReport, EngstromError> {
    let r = im.matroid().rank();
    let at_rho = build_representation(im, x)?.t_betti();
    let base = ImmersedMatroid::canonical(im.matroid().clone(), r)?;
    let at_rank = build_representation(&base, x)?.t_betti();
    let join_factor = iterated_join(x, im.rho() - r).reduced_betti();
    let predicted = join_factor.join(&at_rank);
    Ok(StabilityReport { holds: predicted == at_rho, at_rho, at_rank, join_factor, predicted })
}

/// Per-condition outcome of the X-arrangement check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XArrangementReport {
    pub d: usize,
    /// `Y` matches `X^{*d}` in Betti numbers and dimension.
    pub condition1: bool,
    /// Every `A` matches `X^{*(d-1)}`.
    pub condition2: bool,
    /// Every intersection matches some `X^{*e}`; the exponents found, keyed
    /// by the atom set of the intersection's flat.
    pub condition3: bool,
    pub intersection_exponents: Vec<(Vec<usize>, Option<usize>)>,
    /// `A ∩ B ≃ X^{*(e-1)}` whenever `A ⊉ B`.
    pub condition5: bool,
    /// The intersection of all arrangement subcomplexes is empty.
    pub top_intersection_empty: bool,
}

impl XArrangementReport {
    pub fn all_pass(&self) -> bool {
        self.condition1 && self.condition2 && self.condition3 && self.condition5
    }
}

fn join_power_profile(x: &SimplicialComplex, e: usize) -> (BettiVector, i64) {
    let bx = x.reduced_betti();
    let b = (0..e).fold(BettiVector::from_degrees(&[(-1, 1)]), |acc, _| acc.join(&bx));
    (b, e as i64 * (x.dim() + 1) - 1)
}

pub fn verify_xarrangement(rep: &Representation) -> XArrangementReport {
    let x = &rep.x;
    let d = rep.immersed.rho();
    let profile = |k: &SimplicialComplex| (k.reduced_betti(), k.dim());
    let matches = |k: &SimplicialComplex, e: usize| profile(k) == join_power_profile(x, e);
    let exponent = |k: &SimplicialComplex| {
        let p = profile(k);
        (0..=d).find(|&e| join_power_profile(x, e) == p)
    };

    let condition1 = matches(rep.y(), d);
    let condition2 = rep.atoms.iter().all(|(_, a)| d >= 1 && matches(a, d - 1));

    let lattice = rep.immersed.lattice();
    let atoms = lattice.atoms();
    let atom_sets: Vec<Vec<bool>> = atoms.iter().map(|&a| rep.intersection_vertices(&[a])).collect();
    let mut seen: HashMap<Vec<bool>, Vec<usize>> = HashMap::new();
    for mask in bits::subsets(((1u64 << atoms.len()) - 1) as Mask) {
        if mask == 0 {
            continue;
        }
        let chosen: Vec<usize> = bits::members(mask).map(|i| atoms[i]).collect();
        let v = rep.intersection_vertices(&chosen);
        let flat = lattice.join_all(chosen.iter().copied());
        seen.entry(v).or_insert_with(|| lattice.atoms_below(flat));
    }
    let mut intersections: Vec<(Vec<usize>, Vec<bool>)> = seen.into_iter().map(|(v, s)| (s, v)).collect();
    intersections.sort();

    let mut exponents = Vec::new();
    let mut condition5 = true;
    for (key, v) in &intersections {
        let b = rep.induced(v);
        let e = exponent(&b);
        exponents.push((key.clone(), e));
        for a_set in &atom_sets {
            let contains = v.iter().zip(a_set).all(|(&x, &y)| !x || y);
            if contains {
                continue;
            }
            let both: Vec<bool> = v.iter().zip(a_set).map(|(&x, &y)| x && y).collect();
            let ok = match e {
                Some(e) if e >= 1 => matches(&rep.induced(&both), e - 1),
                _ => false,
            };
            condition5 &= ok;
        }
    }
    let condition3 = exponents.iter().all(|(_, e)| e.is_some());
    let top_intersection_empty = !rep.intersection_vertices(&atoms).iter().any(|&b| b);
    XArrangementReport {
        d,
        condition1,
        condition2,
        condition3,
        intersection_exponents: exponents,
        condition5,
        top_intersection_empty,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::sphere;

    fn rep(r: usize, n: usize, rho: usize, d: i64) -> Representation {
        let m = Arc::new(Matroid::uniform(r, n).unwrap());
        let im = ImmersedMatroid::canonical(m, rho).unwrap();
        build_representation(&im, &sphere(d).unwrap()).unwrap()
    }

    #[test]
    fn canonical_immersion_values() {
        let m = Matroid::uniform(2, 3).unwrap();
        let l = Immersion::canonical(m.lattice(), 2).unwrap();
        let lat = m.lattice();
        assert_eq!(l.set(lat.bottom()), vec![1, 2]);
        assert_eq!(l.set(lat.atoms()[0]), vec![1]);
        assert!(l.set(lat.top()).is_empty());
        assert!(Immersion::canonical(lat, 1).is_err());
    }

    #[test]
    fn u23_s1_three_circles() {
        let r = rep(2, 3, 2, 1);
        assert_eq!(r.t_betti(), BettiVector::from_degrees(&[(0, 2), (1, 3)]));
        assert_eq!(r.y().reduced_betti(), BettiVector::from_degrees(&[(3, 1)]));
    }

    #[test]
    fn u24_s0_seven_points() {
        let r = rep(2, 4, 2, 0);
        assert_eq!(r.t_betti(), BettiVector::from_degrees(&[(0, 7)]));
        assert_eq!(r.t_betti(), expected_betti(r.immersed(), &sphere(0).unwrap()));
    }

    #[test]
    fn atom_subcomplexes_union_is_t() {
        let r = rep(2, 3, 2, 0);
        let union = r
            .atom_subcomplexes()
            .iter()
            .fold(SimplicialComplex::empty(), |acc, (_, a)| acc.union(a));
        assert_eq!(&union, r.t().as_ref());
        for (a, sub) in r.atom_subcomplexes() {
            assert!(sub.is_subcomplex_of(r.y()));
            let keep = r.intersection_vertices(&[*a]);
            assert_eq!(&r.induced(&keep), sub.as_ref());
        }
    }

    #[test]
    fn reroute_deletion() {
        let m = Arc::new(Matroid::uniform(2, 3).unwrap());
        let tau = SetMap::from_labels(m.clone(), m.clone(), &[("1", "1"), ("2", "2"), ("3", "o")]).unwrap();
        let ta = reroute_annihilating(&tau).unwrap();
        let lat = m.lattice();
        let three = lat.index_of(m.mask_of(&["3"]).unwrap()).unwrap();
        let one = lat.index_of(m.mask_of(&["1"]).unwrap()).unwrap();
        assert_eq!(ta.get(three), one);
        assert!(ta.is_non_annihilating());
        assert!(ta.is_order_preserving());
    }

    #[test]
    fn reroute_requires_an_atom() {
        let m = Arc::new(Matroid::uniform(2, 3).unwrap());
        let tau = SetMap::from_labels(m.clone(), m, &[("1", "o"), ("2", "o"), ("3", "o")]).unwrap();
        assert_eq!(reroute_annihilating(&tau), Err(EngstromError::NoAtomInImage));
    }

    #[test]
    fn identity_induces_identity() {
        let r = rep(2, 3, 2, 0);
        let m = r.immersed().matroid().clone();
        let id = SetMap::identity_on_labels(m.clone(), m).unwrap();
        let f = induced_representation_map(&id, &r, &r, None).unwrap();
        let n = r.t().num_vertices() as u32;
        assert_eq!(f.on_t.vertex_map(), (0..n).collect::<Vec<_>>().as_slice());
    }

    #[test]
    fn xarrangement_u23() {
        let r = rep(2, 3, 2, 0);
        let report = verify_xarrangement(&r);
        assert!(report.all_pass(), "{report:?}");
        assert!(report.top_intersection_empty);
    }
}
