//! Pointed Hopf algebras over the symmetric groups: quadratic lifting
//! data, the coproduct and tensor-square arithmetic, and extension of
//! group 2-cocycles to Hopf 2-cocycles.

pub mod cocycle;
pub mod datum;
pub mod tensor;

pub use cocycle::{
    extend_group_cocycle, verify_hopf_cocycle, HopfCocycleReport, HopfCocycleTable, TripleMode,
};
pub use datum::{lifted_algebra, ql_datum, translate_class, QlDatum};
pub use tensor::{coproduct, coproduct_elem, counit, Tensor3, TensorElement};
