//! Symmetric groups, their subgroups, group 2-cocycles, and Yetter–Drinfeld
//! realizations of racks.

mod cocycle;
mod perm;
mod realization;
mod subgroup;

pub use cocycle::GroupCocycle2;
pub use perm::{Perm, SymGroup};
pub use realization::YDRealization;
pub use subgroup::{subgroup_conjugacy_classes, subgroups, Subgroup};
