//! Exact scalar and polynomial arithmetic.

mod modpoly;
mod mpoly;
mod parse;
mod quadext;
mod ratfunc;
mod rational;
mod resultant;
mod upoly;

pub use modpoly::{is_prime_u64, modpoly_root_exists, ModPoly, MAX_MODULUS};
pub use mpoly::{Monomial, MPoly};
pub use quadext::QuadExtElem;
pub use ratfunc::RationalFunction;
pub use rational::{bit_height, format_rational, int, parse_rational, rat, Rational};
pub use resultant::{
    discriminant, resultant, resultant_interpolation, resultant_subresultant, ResultantStrategy,
};
pub use upoly::{ExactRing, QPoly, UPoly};
