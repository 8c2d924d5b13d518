//! The middle order on permutations.
//!
//! Permutations of size `n` are compared through their inversion sequences,
//! coordinate by coordinate. The resulting poset is a distributive lattice
//! (isomorphic to the product of chains `[0,0] x [0,1] x ... x [0,n-1]`)
//! that sits between the weak order and the Bruhat order.
//!
//! Alongside the order itself the crate carries interval and boolean-interval
//! counting, Moebius functions (on the whole lattice and on the subposet of
//! involutions), the Euler characteristic, the Heyting algebra operations and a
//! lattice of parking functions. Every closed form is meant to be checked
//! against [`poset::FinitePoset`], a generic brute-force poset engine.

pub mod enumeration;
mod error;
pub mod export;
pub mod heyting;
pub mod involutions;
pub mod limits;
pub mod orders;
pub mod parking;
pub mod perm;
pub mod poset;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{InversionSequence, MeshPattern, Permutation};
pub use poset::FinitePoset;
