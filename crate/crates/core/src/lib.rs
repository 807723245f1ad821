//! Exact-arithmetic verification workbench for GIT stability and
//! divisor-class computations on moduli of low-genus curves.
//!
//! Everything runs over arbitrary-precision rationals: Gröbner bases,
//! weighted Hilbert functions, Hilbert–Mumford indices, versal
//! deformation weights, and tautological divisor-class identities, plus
//! a batch runner with a built-in regression suite.

pub mod curves;
pub mod divisors;
pub mod error;
pub mod poly;
pub mod rational;
pub mod report;
pub mod scenario;
pub mod stability;
pub mod suite;
pub mod unipoly;

pub use error::{Error, Result};
pub use rational::Rat;
