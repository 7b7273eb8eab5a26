//! Exact arithmetic substrate shared by every other module.

pub mod arith;
pub mod field;
pub mod matrix;
pub mod padic;
pub mod poly;
pub mod polymod;
pub mod rational;

pub use arith::{legendre_symbol, primes_up_to, squarefree_kernel};
pub use field::{GaloisField, PrimeFieldElement, QuadExtElement, QuadraticExtension};
pub use poly::IntPolynomial;
pub use polymod::{factor_degrees_mod, PolyModP};
