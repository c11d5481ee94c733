//! Finite permutation groups and the operations the rest of the crate
//! computes with: homomorphisms, actions, transversals, quotients,
//! products and abelian invariants.

mod abelian;
mod action;
mod group;
mod hom;
mod permutation;
mod product;
mod quotient;
mod transversal;

pub use abelian::{abelian_invariants_of_abelian, abelianization, smith_diagonal};
pub use action::GroupAction;
pub use group::{
    all_subgroups, commutator_subgroup, derived_series_orders, derived_subgroup, normal_closure,
    reduce_generating_set, PermGroup, DEFAULT_ELEMENT_BUDGET,
};
pub use hom::{GroupHom, PAIRWISE_CHECK_BUDGET};
pub use permutation::Permutation;
pub use product::{
    direct_product, displacement_subgroup, semidirect_product, DirectProduct, SemidirectProduct,
};
pub use quotient::quotient_group;
pub use transversal::Transversal;
