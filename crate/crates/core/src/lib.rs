//! Exact computer algebra for racks, quadratic Nichols algebras, their
//! pointed liftings over symmetric groups, and the comodule algebras that
//! realise module categories over those liftings.
//!
//! The library is organised bottom-up:
//!
//! * [`ncpoly`] — free associative polynomials over an exact parametric
//!   scalar field, degree-lexicographic rewriting and completion.
//! * [`grp`] — small symmetric groups: permutations, subgroup lattices,
//!   group 2-cocycles, Yetter–Drinfeld realizations.
//! * [`rack`] — finite racks, rack 2-cocycles, the pair-equivalence classes
//!   that control the quadratic relations, and the quadratic elements
//!   `phi_C` / `vartheta_{C,Y}`.
//! * [`algebra`] — smash products `B # kG`, quadratic Nichols algebras,
//!   graded subalgebra closures and the coideal-subalgebra tables.
//! * [`hopf`] — lifting data (ql-data), the lifted Hopf algebras `H(Q)`,
//!   coproducts and Hopf 2-cocycle verification.
//! * [`comodule`] — the comodule algebras `A(Y, F, psi, xi)` and
//!   `B(Z, F, psi, xi)`, coaction/bi-Galois verification, canonical-map
//!   ranks, Loewy series and explicit matrix representations.
//! * [`classify`] — enumeration of module-category data up to conjugation
//!   and the duality cross-checks.
//!
//! All scalar arithmetic is exact: rationals from [`num_rational`], with
//! formal parameters adjoined (see [`ncpoly::ParamScalar`]). Nothing in the
//! crate uses floating point.

pub mod algebra;
pub mod classify;
pub mod comodule;
pub mod grp;
pub mod hopf;
pub mod ncpoly;
pub mod rack;
pub mod report;

mod error;

pub use error::{Error, Result};

#[cfg(doctest)]
mod booktests {
    macro_rules! book_chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    book_chapter!(ch01_racks, "../../../book/src/racks.md");
    book_chapter!(ch02_rewriting, "../../../book/src/rewriting.md");
    book_chapter!(ch03_nichols, "../../../book/src/nichols.md");
    book_chapter!(ch04_coideals, "../../../book/src/coideals.md");
    book_chapter!(ch05_liftings, "../../../book/src/liftings.md");
    book_chapter!(ch06_comodule_algebras, "../../../book/src/comodule-algebras.md");
    book_chapter!(ch07_classification, "../../../book/src/classification.md");
}
