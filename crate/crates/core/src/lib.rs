//! Finite permutation groups with fully enumerated subgroup lattices,
//! coprime automorphism actions, and a verifier for the structure of groups
//! in which every maximal invariant subgroup of order divisible by a prime
//! `p` is nilpotent.
//!
//! The usual entry point is [`theorem::Instance`]: build a [`PermGroup`],
//! an action on it, and query [`theorem::hypothesis_holds`],
//! [`theorem::classify`] or [`theorem::cross_validate`].

pub mod action;
pub mod catalog;
mod error;
pub mod lattice;
pub mod perm_core;
pub mod structure;
pub mod theorem;

pub use action::{build_action, build_automorphism, Automorphism, CoprimeAction};
pub use error::{Error, PermError, Result};
pub use lattice::{all_subgroups, ElementSet, LatticeIndex, Subgroup};
pub use perm_core::{generate_group, PermGroup, Permutation};
pub use structure::PrimeFactorization;
pub use theorem::{
    classify, cross_validate, hypothesis_holds, Case, CaseReport, CrossValidation,
    HypothesisVerdict, Instance,
};
