//! Comodule algebras over the lifted Hopf algebras.
//!
//! A module-category datum `(Y, F, ψ, ξ)` — an invariant subrack, a
//! subgroup with a 2-cocycle, and deformation scalars on the quadratic
//! classes — presents an algebra `A(Y, F, ψ, ξ)`: the smash product of
//! the free algebra on `Y` with the twisted group algebra `k_ψ F`, cut by
//! the deformed relations `ϑ_C = ξ_C e_{g_C}`. This module validates the
//! scalar compatibility conditions, builds the algebras and their
//! subalgebras `B(Z, F, ψ, ξ)`, equips them with the coactions that make
//! them comodule algebras (left over the bosonization, right over a
//! lifting), and certifies the structural claims: Galois bijectivity of
//! the canonical map, the coradical filtration, an explicit matrix
//! representation, and non-nullity of every algebra in the catalogue.

mod algebra;
mod coaction;
mod datum;
mod galois;
mod matrix;

pub use algebra::{build_a, build_b, ComoduleAlgebra, SubalgebraReport};
pub use coaction::{
    verify_bigalois, verify_coaction, BasisTerm, BigaloisReport, CoactionMap, CoactionReport,
    PairTensor,
};
pub use datum::{check_compatible, parse_scalar, transport_class, CompatReport, ModuleDatum};
pub use galois::{canonical_map_rank, loewy_dims, GaloisReport};
pub use matrix::{
    appendix_rep, nonnull_certificates, partition_projection, rep_from_json, verify_matrix_rep,
    Mat, MatrixRep, MatrixReport, NonnullReport,
};
