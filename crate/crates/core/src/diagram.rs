//! Diagrams of simplicial complexes over finite posets, their colimits and
//! homotopy colimits, and morphisms of diagrams.
//!
//! A [`Diagram`] assigns a complex `D(p)` to every element `p` and a vertex
//! map `d_{pq}: D(p) → D(q)` to every pair `p ≥ q`. Structure maps are given
//! on covering pairs; a missing map means "inclusion by vertex label", so an
//! inclusion diagram needs no maps at all.
//!
//! The homotopy colimit is modelled by the order complex of the Grothendieck
//! poset: pairs `(p, σ)` with `σ` a nonempty simplex of `D(p)`, ordered by
//! `(p, σ) ≤ (q, τ)` iff `p ≤ q` and `σ ⊆ d_{qp}(τ)`. By Thomason's theorem
//! this order complex is homotopy equivalent to the homotopy colimit.
//!
//! The colimit is computed as a quotient of simplicial sets: simplices are
//! identified along structure maps, and a simplex whose image under some
//! structure map collapses becomes degenerate. Its homology is the homology
//! of the normalized chain complex of that quotient.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::complex::{simplex, Simplex, SimplicialComplex};
use crate::homology::{betti_over, BettiVector, ChainComplex, Rational};
use crate::label::Label;
use crate::poset::FinitePoset;
use crate::simplicial_map::{MapError, SimplicialMap};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("expected {expected} spaces, got {got}")]
    WrongSpaceCount { expected: usize, got: usize },
    #[error("{upper} ≥ {lower} but D({upper}) is not contained in D({lower}) (missing {missing:?})")]
    NotInclusionDiagram { upper: Label, lower: Label, missing: Vec<Label> },
    #[error("{upper} ⋗ {lower} is not a covering pair")]
    NotCoveringPair { upper: Label, lower: Label },
    #[error("structure map {upper} → {lower} has {got} entries, expected {expected}")]
    WrongMapLength { upper: Label, lower: Label, expected: usize, got: usize },
    #[error("structure map {upper} → {lower} is not simplicial")]
    NotSimplicial { upper: Label, lower: Label },
    #[error("structure map {upper} → {lower} does not preserve vertex order")]
    NotMonotone { upper: Label, lower: Label },
    #[error("composites of structure maps from {upper} to {lower} disagree")]
    InconsistentComposition { upper: Label, lower: Label },
    #[error("poset map does not preserve order on {0} ≤ {1}")]
    NotOrderPreserving(Label, Label),
    #[error("component at {0} is not a simplicial map")]
    ComponentNotSimplicial(Label),
    #[error("naturality fails on {upper} ≥ {lower} at vertex {vertex}")]
    NaturalityFailure { upper: Label, lower: Label, vertex: Label },
    #[error("morphisms are not composable")]
    NotComposable,
    #[error("vertex ({element}, {simplex:?}) has no image in the target homotopy colimit")]
    ImageOutsideTarget { element: Label, simplex: Vec<Label> },
    #[error(transparent)]
    Map(#[from] MapError),
}

/// A diagram of simplicial complexes over a finite poset.
#[derive(Debug, Clone)]
pub struct Diagram {
    poset: FinitePoset,
    spaces: Vec<Arc<SimplicialComplex>>,
    /// `maps[p][q]` is `d_{pq}` for `q ≤ p`.
    maps: Vec<Vec<Option<Vec<u32>>>>,
    inclusion: bool,
}

fn label_inclusion(from: &SimplicialComplex, to: &SimplicialComplex) -> Option<Vec<u32>> {
    from.vertices().iter().map(|v| to.vertex_index(v)).collect()
}

fn apply(map: &[u32], s: &[u32]) -> Simplex {
    let mut out: Simplex = s.iter().map(|&v| map[v as usize]).collect();
    out.sort_unstable();
    out.dedup();
    out
}

impl Diagram {
    /// An inclusion diagram: `D(p) ⊆ D(q)` by vertex labels whenever `p ≥ q`.
    pub fn inclusion(poset: FinitePoset, spaces: Vec<SimplicialComplex>) -> Result<Self, DiagramError> {
        Self::with_maps(poset, spaces, HashMap::new())
    }

    /// A diagram with explicit structure maps on some covering pairs
    /// `(upper, lower)`, as vertex index vectors `D(upper) → D(lower)`.
    /// Covering pairs without an entry are inclusions by label.
    pub fn with_maps(
        poset: FinitePoset,
        spaces: Vec<SimplicialComplex>,
        cover_maps: HashMap<(usize, usize), Vec<u32>>,
    ) -> Result<Self, DiagramError> {
        let n = poset.len();
        if spaces.len() != n {
            return Err(DiagramError::WrongSpaceCount { expected: n, got: spaces.len() });
        }
        let spaces: Vec<Arc<SimplicialComplex>> = spaces.into_iter().map(Arc::new).collect();
        let lab = |i: usize| poset.label(i).clone();
        for &(upper, lower) in cover_maps.keys() {
            if !poset.lower_covers(upper).contains(&lower) {
                return Err(DiagramError::NotCoveringPair { upper: lab(upper), lower: lab(lower) });
            }
        }
        let inclusion = cover_maps.is_empty();

        let mut cover: HashMap<(usize, usize), Vec<u32>> = HashMap::new();
        for p in 0..n {
            for &q in poset.lower_covers(p) {
                let map = match cover_maps.get(&(p, q)) {
                    Some(m) => {
                        if m.len() != spaces[p].num_vertices() {
                            return Err(DiagramError::WrongMapLength {
                                upper: lab(p),
                                lower: lab(q),
                                expected: spaces[p].num_vertices(),
                                got: m.len(),
                            });
                        }
                        if m.iter().any(|&v| v as usize >= spaces[q].num_vertices()) {
                            return Err(DiagramError::NotSimplicial { upper: lab(p), lower: lab(q) });
                        }
                        m.clone()
                    }
                    None => label_inclusion(&spaces[p], &spaces[q]).ok_or_else(|| {
                        DiagramError::NotInclusionDiagram {
                            upper: lab(p),
                            lower: lab(q),
                            missing: spaces[p]
                                .vertices()
                                .iter()
                                .filter(|v| spaces[q].vertex_index(v).is_none())
                                .cloned()
                                .collect(),
                        }
                    })?,
                };
                for f in spaces[p].facets() {
                    let image = apply(&map, f);
                    if !spaces[q].contains(&image) {
                        return Err(if cover_maps.contains_key(&(p, q)) {
                            DiagramError::NotSimplicial { upper: lab(p), lower: lab(q) }
                        } else {
                            DiagramError::NotInclusionDiagram {
                                upper: lab(p),
                                lower: lab(q),
                                missing: spaces[p].labels_of(f),
                            }
                        });
                    }
                }
                if map.windows(2).any(|w| w[0] > w[1]) {
                    return Err(DiagramError::NotMonotone { upper: lab(p), lower: lab(q) });
                }
                cover.insert((p, q), map);
            }
        }

        // All composites, elements processed by height so lower ones are done first.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&p| poset.height(p));
        let mut maps: Vec<Vec<Option<Vec<u32>>>> = vec![vec![None; n]; n];
        for &p in &order {
            maps[p][p] = Some((0..spaces[p].num_vertices() as u32).collect());
            for q in 0..n {
                if q == p || !poset.leq(q, p) {
                    continue;
                }
                let mut result: Option<Vec<u32>> = None;
                for &c in poset.lower_covers(p) {
                    if !poset.leq(q, c) {
                        continue;
                    }
                    let first = &cover[&(p, c)];
                    let rest = maps[c][q].as_ref().expect("lower elements are processed first");
                    let candidate: Vec<u32> = first.iter().map(|&v| rest[v as usize]).collect();
                    match &result {
                        Some(r) if *r != candidate => {
                            return Err(DiagramError::InconsistentComposition { upper: lab(p), lower: lab(q) })
                        }
                        _ => result = Some(candidate),
                    }
                }
                maps[p][q] = result;
            }
        }
        Ok(Diagram { poset, spaces, maps, inclusion })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn space(&self, p: usize) -> &Arc<SimplicialComplex> {
        &self.spaces[p]
    }

    /// Whether every structure map is an inclusion by label.
    pub fn is_inclusion(&self) -> bool {
        self.inclusion
    }

    /// `d_{pq}` as a vertex index vector, for `q ≤ p`.
    pub fn structure_map(&self, p: usize, q: usize) -> Option<&[u32]> {
        self.maps[p][q].as_deref()
    }

    /// The sub-diagram on `subset`, with the induced order.
    pub fn restrict(&self, subset: &[usize]) -> Diagram {
        let poset = self.poset.induced(subset);
        let spaces = subset.iter().map(|&p| self.spaces[p].clone()).collect();
        let maps = subset
            .iter()
            .map(|&p| subset.iter().map(|&q| self.maps[p][q].clone()).collect())
            .collect();
        Diagram { poset, spaces, maps, inclusion: self.inclusion }
    }

    /// Covering relation of the order induced on `subset`.
    fn induced_lower_covers(&self, subset: &[usize]) -> HashMap<usize, Vec<usize>> {
        let mut out = HashMap::new();
        for &q in subset {
            let below: Vec<usize> = subset
                .iter()
                .copied()
                .filter(|&p| self.poset.lt(p, q))
                .filter(|&p| !subset.iter().any(|&r| self.poset.lt(p, r) && self.poset.lt(r, q)))
                .collect();
            out.insert(q, below);
        }
        out
    }

    pub fn hocolim(&self) -> Hocolim {
        let all: Vec<usize> = (0..self.len()).collect();
        self.hocolim_over(&all)
    }

    /// Homotopy colimit of the sub-diagram on `subset`, keeping this
    /// diagram's element indices in the provenance.
    pub fn hocolim_over(&self, subset: &[usize]) -> Hocolim {
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();

        let mut cells: Vec<(usize, Simplex)> = Vec::new();
        let mut lookup: HashMap<(usize, Simplex), usize> = HashMap::new();
        for &p in &subset {
            for s in self.spaces[p].simplices_by_dim().into_iter().flatten() {
                lookup.insert((p, s.clone()), cells.len());
                cells.push((p, s));
            }
        }

        // Upward edges containing every covering relation of the Grothendieck poset.
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); cells.len()];
        let mut has_lower = vec![false; cells.len()];
        for (j, (p, tau)) in cells.iter().enumerate() {
            if tau.len() > 1 {
                for skip in 0..tau.len() {
                    let face: Simplex =
                        tau.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                    let i = lookup[&(*p, face)];
                    up[i].push(j);
                    has_lower[j] = true;
                }
            }
        }
        let lower_covers = self.induced_lower_covers(&subset);
        for (j, (q, tau)) in cells.iter().enumerate() {
            for &p in &lower_covers[q] {
                let map = self.maps[*q][p].as_ref().expect("comparable pair has a map");
                let i = lookup[&(p, apply(map, tau))];
                up[i].push(j);
                has_lower[j] = true;
            }
        }

        let mut chains: Vec<Vec<u32>> = Vec::new();
        let mut stack: Vec<u32> = Vec::new();
        fn extend(up: &[Vec<usize>], stack: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            let top = *stack.last().expect("nonempty chain") as usize;
            if up[top].is_empty() {
                out.push(stack.clone());
                return;
            }
            for &next in &up[top] {
                stack.push(next as u32);
                extend(up, stack, out);
                stack.pop();
            }
        }
        for start in (0..cells.len()).filter(|&i| !has_lower[i]) {
            stack.push(start as u32);
            extend(&up, &mut stack, &mut chains);
            stack.pop();
        }

        let labels: Vec<Label> = cells
            .iter()
            .map(|(p, s)| {
                Label::Tuple(vec![
                    self.poset.label(*p).clone(),
                    Label::set(self.spaces[*p].labels_of(s)),
                ])
            })
            .collect();
        let complex = SimplicialComplex::from_indexed_facets(labels.clone(), chains)
            .expect("cell labels are distinct");
        let mut by_vertex: Vec<(usize, Simplex)> = vec![(0, Vec::new()); cells.len()];
        let mut vertex_lookup = HashMap::with_capacity(cells.len());
        for (i, cell) in cells.into_iter().enumerate() {
            let v = complex.vertex_index(&labels[i]).expect("every cell is a vertex");
            vertex_lookup.insert(cell.clone(), v);
            by_vertex[v as usize] = cell;
        }
        Hocolim {
            complex: Arc::new(complex),
            cells: by_vertex,
            lookup: vertex_lookup,
        }
    }

    /// The colimit of an inclusion diagram: the union of all spaces.
    /// For diagrams with other structure maps use [`Diagram::colim_cells`].
    pub fn colim(&self) -> Option<SimplicialComplex> {
        if !self.inclusion {
            return None;
        }
        Some(
            self.spaces
                .iter()
                .fold(SimplicialComplex::empty(), |acc, s| acc.union(s)),
        )
    }

    /// The colimit as a quotient of simplicial sets.
    pub fn colim_cells(&self) -> ColimitCells {
        let mut cells: Vec<(usize, Simplex)> = Vec::new();
        let mut lookup: HashMap<(usize, Simplex), usize> = HashMap::new();
        for p in 0..self.len() {
            for s in self.spaces[p].simplices_by_dim().into_iter().flatten() {
                lookup.insert((p, s.clone()), cells.len());
                cells.push((p, s));
            }
        }
        let mut parent: Vec<usize> = (0..cells.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut degenerate = vec![false; cells.len()];
        for (i, (p, s)) in cells.iter().enumerate() {
            for q in 0..self.len() {
                if q == *p || !self.poset.leq(q, *p) {
                    continue;
                }
                let image = apply(self.maps[*p][q].as_ref().expect("comparable"), s);
                if image.len() < s.len() {
                    degenerate[i] = true;
                } else {
                    let j = lookup[&(q, image)];
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        let mut class_degenerate: HashMap<usize, bool> = HashMap::new();
        for i in 0..cells.len() {
            let r = find(&mut parent, i);
            *class_degenerate.entry(r).or_insert(false) |= degenerate[i];
        }
        // One representative per nondegenerate class, grouped by dimension.
        let mut reps: Vec<Vec<usize>> = Vec::new();
        let mut class_index: HashMap<usize, (usize, u32)> = HashMap::new();
        for i in 0..cells.len() {
            let r = find(&mut parent, i);
            if class_degenerate[&r] || class_index.contains_key(&r) {
                continue;
            }
            let dim = cells[i].1.len() - 1;
            if reps.len() <= dim {
                reps.resize(dim + 1, Vec::new());
            }
            class_index.insert(r, (dim, reps[dim].len() as u32));
            reps[dim].push(i);
        }
        let mut chain = ChainComplex { cells: vec![1], boundaries: vec![Vec::new()] };
        for (dim, list) in reps.iter().enumerate() {
            chain.cells.push(list.len());
            let cols = list
                .iter()
                .map(|&i| {
                    let (p, s) = &cells[i];
                    if dim == 0 {
                        return vec![(0u32, 1i64)];
                    }
                    let mut col = Vec::new();
                    for skip in 0..s.len() {
                        let face: Simplex =
                            s.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &v)| v).collect();
                        let r = find(&mut parent, lookup[&(*p, face)]);
                        if let Some(&(_, idx)) = class_index.get(&r) {
                            col.push((idx, if skip % 2 == 0 { 1 } else { -1 }));
                        }
                    }
                    col
                })
                .collect();
            chain.boundaries.push(cols);
        }
        ColimitCells {
            cell_counts: reps.iter().map(Vec::len).collect(),
            chain,
        }
    }

    /// The morphism `(id, id)` from this diagram to itself.
    pub fn identity_morphism(self: &Arc<Self>) -> DiagramMorphism {
        DiagramMorphism {
            source: self.clone(),
            target: self.clone(),
            poset_map: (0..self.len()).collect(),
            components: (0..self.len())
                .map(|p| (0..self.spaces[p].num_vertices() as u32).collect())
                .collect(),
        }
    }
}

/// The realized homotopy colimit with the provenance of every vertex.
#[derive(Debug, Clone)]
pub struct Hocolim {
    complex: Arc<SimplicialComplex>,
    cells: Vec<(usize, Simplex)>,
    lookup: HashMap<(usize, Simplex), u32>,
}

impl Hocolim {
    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    /// The diagram element and simplex behind a vertex.
    pub fn cell(&self, v: u32) -> (usize, &[u32]) {
        let (p, s) = &self.cells[v as usize];
        (*p, s)
    }

    /// The diagram element a vertex lies over.
    pub fn element_of(&self, v: u32) -> usize {
        self.cells[v as usize].0
    }

    pub fn vertex_of(&self, p: usize, s: &[u32]) -> Option<u32> {
        self.lookup.get(&(p, s.to_vec())).copied()
    }

    pub fn num_vertices(&self) -> usize {
        self.cells.len()
    }
}

/// Normalized chain data of a colimit computed as a simplicial-set quotient.
#[derive(Debug, Clone)]
pub struct ColimitCells {
    cell_counts: Vec<usize>,
    chain: ChainComplex,
}

impl ColimitCells {
    /// Number of nondegenerate simplices per dimension.
    pub fn cell_counts(&self) -> &[usize] {
        &self.cell_counts
    }

    pub fn chain_complex(&self) -> &ChainComplex {
        &self.chain
    }

    pub fn reduced_betti(&self) -> BettiVector {
        betti_over::<Rational>(&self.chain)
    }
}

/// A morphism of diagrams `(f, α)`: a poset map `f` and vertex maps
/// `α_p: D(p) → E(f(p))` that commute with the structure maps.
#[derive(Debug, Clone)]
pub struct DiagramMorphism {
    source: Arc<Diagram>,
    target: Arc<Diagram>,
    poset_map: Vec<usize>,
    components: Vec<Vec<u32>>,
}

impl DiagramMorphism {
    pub fn new(
        source: Arc<Diagram>,
        target: Arc<Diagram>,
        poset_map: Vec<usize>,
        components: Vec<Vec<u32>>,
    ) -> Result<Self, DiagramError> {
        let (sp, tp) = (source.poset(), target.poset());
        for a in 0..sp.len() {
            for b in 0..sp.len() {
                if sp.leq(a, b) && !tp.leq(poset_map[a], poset_map[b]) {
                    return Err(DiagramError::NotOrderPreserving(sp.label(a).clone(), sp.label(b).clone()));
                }
            }
        }
        for p in 0..sp.len() {
            let (from, to) = (source.space(p), target.space(poset_map[p]));
            let alpha = &components[p];
            if alpha.len() != from.num_vertices()
                || alpha.iter().any(|&v| v as usize >= to.num_vertices())
                || from.facets().iter().any(|f| !to.contains(&apply(alpha, f)))
            {
                return Err(DiagramError::ComponentNotSimplicial(sp.label(p).clone()));
            }
        }
        for p in 0..sp.len() {
            for &q in sp.lower_covers(p) {
                let d = source.structure_map(p, q).expect("comparable");
                let e = target.structure_map(poset_map[p], poset_map[q]).expect("f preserves order");
                for v in 0..source.space(p).num_vertices() {
                    let right = e[components[p][v] as usize];
                    let down = components[q][d[v] as usize];
                    if right != down {
                        return Err(DiagramError::NaturalityFailure {
                            upper: sp.label(p).clone(),
                            lower: sp.label(q).clone(),
                            vertex: source.space(p).vertices()[v].clone(),
                        });
                    }
                }
            }
        }
        Ok(DiagramMorphism { source, target, poset_map, components })
    }

    /// Builds components from a label function on each space.
    pub fn from_label_fns(
        source: Arc<Diagram>,
        target: Arc<Diagram>,
        poset_map: Vec<usize>,
        component: impl Fn(usize, &Label) -> Option<Label>,
    ) -> Result<Self, DiagramError> {
        let mut components = Vec::with_capacity(source.len());
        for p in 0..source.len() {
            let to = target.space(poset_map[p]);
            let mut alpha = Vec::with_capacity(source.space(p).num_vertices());
            for v in source.space(p).vertices() {
                let idx = component(p, v)
                    .and_then(|l| to.vertex_index(&l))
                    .ok_or_else(|| DiagramError::ComponentNotSimplicial(source.poset().label(p).clone()))?;
                alpha.push(idx);
            }
            components.push(alpha);
        }
        Self::new(source, target, poset_map, components)
    }

    pub fn source(&self) -> &Arc<Diagram> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Diagram> {
        &self.target
    }

    pub fn poset_map(&self) -> &[usize] {
        &self.poset_map
    }

    pub fn component(&self, p: usize) -> &[u32] {
        &self.components[p]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &DiagramMorphism) -> Result<DiagramMorphism, DiagramError> {
        if !Arc::ptr_eq(&self.target, &next.source) {
            return Err(DiagramError::NotComposable);
        }
        let poset_map = self.poset_map.iter().map(|&q| next.poset_map[q]).collect();
        let components = (0..self.source.len())
            .map(|p| {
                let second = &next.components[self.poset_map[p]];
                self.components[p].iter().map(|&v| second[v as usize]).collect()
            })
            .collect();
        Ok(DiagramMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            poset_map,
            components,
        })
    }

    /// Whether every component keeps vertex labels unchanged.
    pub fn components_are_inclusions(&self) -> bool {
        (0..self.source.len()).all(|p| {
            let (from, to) = (self.source.space(p), self.target.space(self.poset_map[p]));
            self.components[p]
                .iter()
                .enumerate()
                .all(|(v, &w)| from.vertices()[v] == to.vertices()[w as usize])
        })
    }
}

/// The simplicial map `(p, σ) ↦ (f(p), α_p(σ))` between realized homotopy
/// colimits of the source and target of `m`.
pub fn induced_map(m: &DiagramMorphism, source: &Hocolim, target: &Hocolim) -> Result<SimplicialMap, DiagramError> {
    let mut vertex_map = Vec::with_capacity(source.num_vertices());
    for v in 0..source.num_vertices() as u32 {
        let (p, s) = source.cell(v);
        let q = m.poset_map[p];
        let image = apply(&m.components[p], s);
        let w = target.vertex_of(q, &image).ok_or_else(|| DiagramError::ImageOutsideTarget {
            element: m.source.poset().label(p).clone(),
            simplex: m.source.space(p).labels_of(s),
        })?;
        vertex_map.push(w);
    }
    Ok(SimplicialMap::new(source.complex().clone(), target.complex().clone(), vertex_map)?)
}

/// Whether the two morphisms have inclusion components and pointwise
/// comparable poset maps (`f(p) ≥ g(p)` for all `p`, or the reverse), so
/// that their induced maps are homotopic.
pub fn homotopic_pair_check(m1: &DiagramMorphism, m2: &DiagramMorphism) -> bool {
    if !Arc::ptr_eq(&m1.source, &m2.source) || !Arc::ptr_eq(&m1.target, &m2.target) {
        return false;
    }
    if !m1.components_are_inclusions() || !m2.components_are_inclusions() {
        return false;
    }
    let tp = m1.target.poset();
    let pairs = m1.poset_map.iter().zip(&m2.poset_map);
    pairs.clone().all(|(&f, &g)| tp.leq(g, f)) || pairs.clone().all(|(&f, &g)| tp.leq(f, g))
}

fn names(ls: &[&str]) -> Vec<Label> {
    ls.iter().map(|&s| Label::name(s)).collect()
}

fn appendix_poset() -> FinitePoset {
    let l = names(&["p", "q", "q'"]);
    FinitePoset::from_relations(l.clone(), &[(l[1].clone(), l[0].clone()), (l[2].clone(), l[0].clone())])
        .expect("valid relations")
}

fn triangle_boundary() -> SimplicialComplex {
    SimplicialComplex::from_facets([names(&["a", "b"]), names(&["b", "c"]), names(&["a", "c"])])
}

/// The appendix diagram `𝒟`: a circle over `p`, mapped constantly to a point
/// over `q` and included as the boundary of a disk over `q'`.
pub fn appendix_d() -> Diagram {
    let spaces = vec![
        triangle_boundary(),
        simplex(names(&["x"])),
        simplex(names(&["a", "b", "c"])),
    ];
    let mut maps = HashMap::new();
    maps.insert((0, 1), vec![0, 0, 0]);
    Diagram::with_maps(appendix_poset(), spaces, maps).expect("appendix diagram is valid")
}

/// The appendix diagram `ℰ`: as `𝒟` but with the disk replaced by a point,
/// so every structure map is constant.
pub fn appendix_e() -> Diagram {
    let spaces = vec![triangle_boundary(), simplex(names(&["x"])), simplex(names(&["y"]))];
    let mut maps = HashMap::new();
    maps.insert((0, 1), vec![0, 0, 0]);
    maps.insert((0, 2), vec![0, 0, 0]);
    Diagram::with_maps(appendix_poset(), spaces, maps).expect("appendix diagram is valid")
}

/// The natural homotopy equivalence `𝒟 → ℰ` collapsing the disk to a point.
pub fn appendix_morphism(d: Arc<Diagram>, e: Arc<Diagram>) -> DiagramMorphism {
    let components = vec![vec![0, 1, 2], vec![0], vec![0, 0, 0]];
    DiagramMorphism::new(d, e, vec![0, 1, 2], components).expect("appendix morphism is natural")
}

/// The face poset of a complex under reverse inclusion, carrying each face
/// as a full simplex; its colimit is the complex itself.
pub fn face_poset_diagram(k: &SimplicialComplex) -> Diagram {
    let faces: Vec<Simplex> = k.simplices_by_dim().into_iter().flatten().collect();
    let labels: Vec<Label> = faces.iter().map(|f| Label::set(k.labels_of(f))).collect();
    let subset = |a: &Simplex, b: &Simplex| a.iter().all(|v| b.contains(v));
    let poset = FinitePoset::from_leq(labels, |a, b| subset(&faces[b], &faces[a]))
        .expect("reverse inclusion is a partial order");
    let spaces = faces.iter().map(|f| simplex(k.labels_of(f))).collect();
    Diagram::inclusion(poset, spaces).expect("faces of faces are included")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{sphere, two_triangles};

    #[test]
    fn point_poset_hocolim() {
        let p = FinitePoset::from_leq(vec![Label::Int(0)], |_, _| true).unwrap();
        let d = Diagram::inclusion(p, vec![sphere(1).unwrap()]).unwrap();
        assert_eq!(d.hocolim().complex().reduced_betti(), sphere(1).unwrap().reduced_betti());
    }

    #[test]
    fn appendix_contrast() {
        let s2 = BettiVector::from_degrees(&[(2, 1)]);
        assert_eq!(appendix_d().colim_cells().reduced_betti(), s2);
        assert!(appendix_e().colim_cells().reduced_betti().is_zero());
        assert_eq!(appendix_d().hocolim().complex().reduced_betti(), s2);
        assert_eq!(appendix_e().hocolim().complex().reduced_betti(), s2);
    }

    #[test]
    fn face_poset_colim_is_complex() {
        let k = two_triangles();
        let d = face_poset_diagram(&k);
        assert_eq!(d.colim().unwrap(), k);
        assert!(d.colim_cells().reduced_betti().is_zero());
        assert!(d.hocolim().complex().reduced_betti().is_zero());
    }

    #[test]
    fn rejects_non_inclusion() {
        let p = appendix_poset();
        let spaces = vec![sphere(1).unwrap(), simplex(names(&["x"])), simplex(names(&["y"]))];
        assert!(matches!(Diagram::inclusion(p, spaces), Err(DiagramError::NotInclusionDiagram { .. })));
    }

    #[test]
    fn empty_diagram_has_empty_hocolim() {
        let d = appendix_d();
        let h = d.hocolim_over(&[]);
        assert!(h.complex().is_empty());
    }
}
