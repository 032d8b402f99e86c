//! Exact computations around periodic points of quadratic polynomials.
//!
//! The crate is split by subsystem:
//!
//! * [`arith`]: rationals, sparse multivariate polynomials, resultants and
//!   discriminants, rational functions, a quadratic function-field
//!   extension and polynomials over prime fields.
//! * [`perm`]: permutations, stabilizer chains, centralizers of products of
//!   disjoint cycles and conjugacy classes of subgroups of small groups.
//! * [`algorithm1`]: the subgroup search that constrains Galois groups of
//!   dynatomic polynomials when the strong local-global principle fails.
//! * [`dynatomic`]: dynatomic polynomials and the identities they satisfy.
//! * [`curves`]: the explicit curves attached to periods 4 and 5.
//! * [`density`]: exact and sampled densities of sets of primes.

pub mod algorithm1;
pub mod arith;
pub mod check;
pub mod curves;
pub mod density;
pub mod dynatomic;
pub mod error;
pub mod fixtures;
pub mod perm;

pub use arith::{MPoly, ModPoly, QuadExtElem, Rational, RationalFunction};
pub use error::{Error, Result};
pub use perm::{Perm, PermGroup};
