//! Topological representations of matroids.
//!
//! The crate builds matroids and their lattices of flats, realizes
//! Engström's diagrams of joins as simplicial complexes via homotopy
//! colimits, computes exact reduced Betti numbers over the rationals, and
//! turns weak maps of matroids into simplicial maps between the resulting
//! representations.

pub mod action;
pub mod bits;
pub mod catalog;
pub mod complex;
pub mod diagram;
pub mod engstrom;
pub mod export;
pub mod homology;
pub mod label;
pub mod lattice;
pub mod maps;
pub mod matroid;
pub mod poset;
pub mod simplicial_map;

pub use action::GroupAction;
pub use complex::SimplicialComplex;
pub use engstrom::{ImmersedMatroid, Immersion, Representation};
pub use homology::BettiVector;
pub use label::Label;
pub use lattice::{GeometricLattice, MobiusTable, WhitneyVector};
pub use maps::{FlatMap, SetMap};
pub use matroid::Matroid;
pub use poset::FinitePoset;
pub use simplicial_map::SimplicialMap;
