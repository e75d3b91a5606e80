//! Finite permutation groups, conjugacy-class algebra, exact character tables
//! and the coprime-multiplicativity predicates built on them.

pub mod chartab;
pub mod classes;
pub mod corpus;
pub mod group;
pub mod perm;
pub mod predicates;
pub mod primes;
pub mod report;

pub use group::{Group, GroupError, Subgroup};
pub use perm::Permutation;
