//! Same-form prime factorizations of `Φ₃(x) = x^2 + x + 1`.
//!
//! Solutions of `Φ₃(x) = Φ₃(a_1) ... Φ₃(a_n)` with every `Φ₃(a_i)` prime are
//! found by factoring `x + w` in the Eisenstein integers. This crate provides
//! the ring arithmetic, the resulting families for `n = 2, 3, 4`, a brute-force
//! oracle that checks them, and searches for "threats" where `x` and every
//! `a_i` are prime as well.

pub mod claims;
pub mod eisenstein;
pub mod error;
pub mod families;
pub mod oracle;
pub mod primality;
pub mod report;
pub mod threats;

pub use error::{Error, Result};
