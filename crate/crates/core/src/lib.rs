//! Subgroup-generating bipartite graphs of finite groups.
//!
//! `B(G)` joins every ordered pair `(a, b) ∈ G × G` to the subgroup it
//! generates. This crate builds it from a Cayley table, computes its
//! adjacency, Laplacian, signless Laplacian and common-neighborhood spectra
//! exactly (as radicals) and numerically (Jacobi), derives the four graph
//! energies, and checks closed-form predictions for the dihedral and
//! dicyclic families against the brute-force pipeline.

pub mod bitset;
pub mod closed_form;
pub mod eigen;
pub mod energy;
pub mod error;
pub mod group;
pub mod lattice;
pub mod matrix;
pub mod par;
pub mod pipeline;
pub mod radical;
pub mod sgb;
pub mod spectrum;
pub mod verify;

pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupElement, GroupSpec};
pub use lattice::{enumerate_subgroups, generated_subgroup, Subgroup, SubgroupLattice};
pub use par::Execution;
pub use radical::{RadicalScalar, RadicalSum, Rational};
pub use sgb::{build_sgb, decompose_components, ComponentSummary, SgbGraph};
pub use spectrum::{MatrixKind, SpectrumMultiset};
