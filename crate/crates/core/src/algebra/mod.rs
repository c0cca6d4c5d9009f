//! Finite-dimensional quotients and subalgebras built on the
//! noncommutative rewriting engine: Nichols algebras of racks, their
//! coideal subalgebras, and smash products with group algebras.

pub mod linalg;
pub mod nichols;
pub mod smash;

pub use linalg::{rank_mod_p, ratio_mod_p, RatSpan};
pub use nichols::{
    build_ly, check_presentation, coideal_table, item_for_dim, item_relation_templates,
    item_relations, ly_relations_global, nichols_relations, CoidealRow, LYAlgebra,
    NicholsAlgebra, PresentationReport, SubalgebraBasis, ITEM_DIMS, ITEM_REPRESENTATIVES,
    ITEM_STAB_ORDERS,
};
pub use smash::{
    bosonize, quotient_map_check, QuotientMapReport, SmashAlgebra, SmashContext, SmashElement,
    SmashRule,
};
