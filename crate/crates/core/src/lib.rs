//! Generalized good integers and their use in deciding, counting and
//! constructing self-dual negacyclic codes over finite fields of odd
//! characteristic.
//!
//! Module map:
//! - [`arith`]: factorization, totients, multiplicative orders.
//! - [`goodint`]: `2^beta`-good, oddly-good and evenly-good integers.
//! - [`gf`]: finite fields and polynomials over them.
//! - [`negacyclic`]: factoring `x^n + 1` and building self-dual codes.
//! - [`census`]: closed-form existence tests and code counts.
//! - [`oracle`]: brute-force cross-checks that share no logic with the above.

pub mod arith;
pub mod census;
pub mod error;
pub mod gf;
pub mod goodint;
pub mod negacyclic;
pub mod oracle;

pub use error::{Error, Result};
