//! Frobenius data of elliptic and genus-2 curves over Q at good primes,
//! Frobenius-field keys, and per-field prime counts up to X.

pub mod count;
pub mod curve;
pub mod key;
pub mod scan;
pub mod weil;

pub use count::{ec_trace, genus2_lpoly};
pub use curve::{CurveKind, CurveSpec};
pub use key::{field_key_of_target, fingerprint_of, frobenius_field_key, FieldKey};
pub use scan::{density_series, scan, DensitySeries, ScanReport};
pub use weil::WeilPolynomial;
