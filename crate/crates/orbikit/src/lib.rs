//! Exact computation with multiplicity-free modular fusion categories.
//!
//! The crate provides, in dependency order:
//!
//! - [`cyclotomic`]: arithmetic in cyclotomic fields Q(zeta_n) over exact
//!   rationals, including numeric embeddings into `Complex<f64>`.
//! - [`fusion`]: category data (fusion rules, F/G-symbols, braiding, twists,
//!   quantum dimensions) with structural checks such as the pentagon
//!   identity and F/G-inverse verification.
//! - [`ising`]: the sixteen Ising-type categories, fully populated.
//! - [`orbifold`]: orbifold datum candidates over a category, the eight
//!   polynomial constraints that characterise genuine orbifold data, gauge
//!   action, and unital normalisation.
//! - [`invariants`]: derived quantities of a verified datum: the simplicity
//!   scalar, the global dimension of the orbifold category, and its rank
//!   extracted from a three-torus partition sum.
//! - [`fib`]: the two-element (Fibonacci-type) solution family inside the
//!   Ising categories, its sign classification, and exhaustive branch
//!   search.
//! - [`bimodule`]: counting matrices for induced bimodules, integer Gram
//!   factorisation (peeling), quantum dimensions of summands, and tensor
//!   products on the level of decomposition grids.
//! - [`jsonio`]: serde-facing document types for categories and data.

pub mod bimodule;
pub mod cyclotomic;
pub mod fib;
pub mod fusion;
pub mod invariants;
pub mod ising;
pub mod jsonio;
pub mod orbifold;
