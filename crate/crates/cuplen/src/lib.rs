//! Exact mod-2 invariants of symmetric products of non-orientable surfaces.
//!
//! The crate computes zero-divisor cup lengths of `SP^n(N_g)` in the k-fold
//! tensor power of its cohomology ring, the complementary gaps, bounds and
//! exact values for sequential topological complexity, and the generating
//! polynomial of the TC sequence — all by closed form, and all re-checkable
//! against an independent brute-force search over zero-divisor products.

pub mod closed_forms;
pub mod combinatorics;
pub mod error;
pub mod ring;
pub mod search;
pub mod tc;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
