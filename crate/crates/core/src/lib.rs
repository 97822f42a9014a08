//! Exact computation with monomial ideals and Stanley decompositions.
//!
//! The crate provides:
//!
//! - [`monomial`] / [`ideal`]: exact arithmetic on exponent vectors and
//!   minimally generated monomial ideals (colon, intersection, saturation,
//!   restriction, slicing, powers).
//! - [`decomp`]: Stanley decompositions as lists of slabs `m*K[Z]`, with an
//!   exact finite verifier.
//! - [`construct`]: algorithms that build verified decompositions meeting
//!   combinatorial depth bounds (Janet-style splitting, gcd transfer,
//!   three-generator and saturated three-variable recursions).
//! - [`oracle`]: ground truth. Exhaustive Stanley depth via interval
//!   partitions of the characteristic poset, and exact depth via upper
//!   Koszul simplicial homology with fraction-free integer elimination.
//! - [`harness`]: seeded random-ideal campaigns that machine-check the
//!   structural properties tying all of the above together.
//! - [`text`]: the shared text grammar (`n=3; x1^3, x2^2*x3^2, ...`) and
//!   the decomposition file format.
//!
//! Everything is integer-exact; no floating point is used anywhere.

pub mod construct;
pub mod decomp;
pub mod error;
pub mod harness;
pub mod ideal;
pub mod monomial;
pub mod oracle;
pub mod text;

pub use decomp::{Slab, StanleyDecomposition, Target, VerifyReport, Violation};
pub use error::{Error, Result};
pub use ideal::{IdealStats, MonomialIdeal};
pub use monomial::{lattice_ops, Monomial};
