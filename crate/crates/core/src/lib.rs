//! Exact residue-class binomial sums, their linear recurrences and
//! characteristic polynomials, and the prime congruences they feed into.
//!
//! Everything is computed with arbitrary-precision integers and reduced
//! rationals; there is no floating point anywhere in the crate.

pub mod arith;
pub mod bernoulli;
pub mod coeffs;
pub mod error;
pub mod identities;
pub mod poly;
pub mod report;
pub mod sums;
pub mod uv;

pub use arith::{BigInt, BigRat, SecondOrder, Valuation};
pub use bernoulli::RatPoly;
pub use coeffs::{CoeffKind, CoeffRow, Table};
pub use error::{Error, Result};
pub use poly::IntPoly;
pub use report::{CheckReport, Counterexample};
pub use sums::{SumQuery, Thm12Variant, Variant};
pub use uv::{Family, UVParams, UVSeq};
