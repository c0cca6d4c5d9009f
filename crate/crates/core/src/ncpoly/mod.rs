//! Free associative polynomials over exact parametric scalars, and
//! rewriting/completion for finitely presented algebras.
//!
//! The pieces:
//!
//! * [`ParamScalar`] — the coefficient field `Q[params]` (units are nonzero
//!   rationals; rule orientation divides only by units).
//! * [`Word`], [`MonomialOrder`] — free-monoid words under deglex with a
//!   configurable generator precedence.
//! * [`NCPoly`] — free associative polynomials.
//! * [`RewriteSystem`] — monic rewrite rules, critical-pair completion in
//!   ascending superposition degree, normal words, Hilbert series.
//! * [`text`] — a plain-text relation format (one relation per line,
//!   parameters spelled `$name`).

mod poly;
mod rewrite;
mod scalar;
pub mod text;
mod word;

pub use poly::NCPoly;
pub use rewrite::{Rule, RewriteSystem, DEFAULT_DEGREE_CAP};
pub use scalar::{ParamMonomial, ParamScalar};
pub use word::{MonomialOrder, Word};
