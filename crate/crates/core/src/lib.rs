//! Computational 2-dimensional group theory over finite permutation groups.
//!
//! The crate is organised around five layers:
//!
//! * [`perm`] — permutation groups, homomorphisms, transversals, quotients
//!   and products; every concrete group in the crate lives here.
//! * [`fpres`] — free-group words, finite presentations, Tietze
//!   simplification with generator tracking, and Todd–Coxeter coset
//!   enumeration.
//! * [`xmod`] / [`cat1`] — crossed modules and cat¹-groups, their axioms,
//!   and the equivalence between the two formats.
//! * [`induced`] — induced crossed modules along a group morphism, via the
//!   surjection/inclusion factorisation and the copower + Peiffer-relator
//!   pipeline, with independent oracles for the classical special cases.
//! * [`ident`] — named group families, structural fingerprints,
//!   isomorphism testing and automorphism groups, used to put labels on
//!   computed groups.

pub mod cat1;
pub mod error;
pub mod fpres;
pub mod ident;
pub mod induced;
pub mod perm;
pub mod xmod;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
