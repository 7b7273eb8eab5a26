//! Exact and empirical machinery for Frobenius fields of abelian varieties:
//! maximal-torus censuses and bounding-set volumes in finite reductive
//! groups, Frobenius-field scans of curves over Q, and the Selberg-sieve /
//! effective-Chebotarev bound evaluator.

pub mod algebra;
pub mod census;
pub mod error;
pub mod frobenius;
pub mod sieve;

pub use error::{Error, Result};
