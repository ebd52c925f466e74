//! Kernel-of-product group constructions and the abelian-group arithmetic
//! behind Galois-closure fundamental-group calculations.
//!
//! - [`abelian`]: Smith normal form, finitely generated abelian groups, kernels and cokernels.
//! - [`perm`]: permutations and enumerated permutation groups.
//! - [`words`]: free-group words, presentations and the `S_n(d)` relators.
//! - [`kernel`]: `K(G,n)`, the semidirect product with `S_n`, `K̃(G,n)` descriptors.
//! - [`galois`]: closed-form group structures for surface families.

use std::fmt::Debug;
use std::hash::Hash;

pub mod abelian;
pub mod error;
pub mod galois;
pub mod kernel;
pub mod perm;
pub mod serde_int;
pub mod words;

pub use error::{AbelianError, ConstructionError, GroupError};

/// Minimal group-element interface shared by permutations and free words.
pub trait GroupElement: Clone + Eq + Hash + Debug {
    fn op(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn is_identity(&self) -> bool;
}
