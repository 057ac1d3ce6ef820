//! Exact computations in the stable module category of a finite p-group.
//!
//! Everything is done over a prime field F_p with dense exact linear algebra:
//! groups are validated Cayley tables, kG-modules are explicit matrix actions,
//! and the higher layers compute radical filtrations and Jennings data,
//! projective covers and syzygies, stable hom-sets and Tate cohomology, and
//! finally ghost maps (maps invisible to Tate cohomology) together with
//! machine-checkable certificates for their existence or absence.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`] — dense matrices, RREF, kernels, solving, subspaces over F_p
//! * [`group`] — finite p-groups as validated Cayley tables, the fixed zoo
//! * [`algebra`] — the group algebra kG, radical powers, dimension subgroups
//! * [`modules`] — kG-modules, intertwiners, duals, free-summand stripping
//! * [`homological`] — covers, syzygies, stable homs, iso and
//!   indecomposability tests, periodicity, mapping cones
//! * [`ghost`] — ghost subspaces, universal ghosts, existence certificates
//! * [`suite`] — orchestrated verification of the structural theorems over
//!   the zoo, with JSON-serialisable reports
//! * [`report`] — the versioned report envelope shared with the CLI

pub mod algebra;
pub mod ghost;
pub mod group;
pub mod homological;
pub mod linalg;
pub mod modules;
pub mod report;
pub mod suite;

pub use algebra::{GroupAlgebra, JenningsReport, RadicalFiltration};
pub use ghost::{GhostCertificate, GhostConfig, GhostEngine, GhostFinding, GhostLevel};
pub use group::{build_group, group_zoo, min_generators, zoo_group, Group, GroupSpec, ZOO_NAMES};
pub use homological::{
    cofiber, hom_space, is_indecomposable, is_stably_trivial, iso_test, periodicity,
    projective_cover, projective_homs, stable_hom, syzygy, tate_cohomology, CoverData,
    Indecomposability, IsoOutcome, SearchParams, StableHom, SyzygyTable,
};
pub use linalg::{FieldPrime, PrimeFieldMatrix, Subspace};
pub use modules::{direct_sum, DirectSum, KGModule, ModuleMap};
