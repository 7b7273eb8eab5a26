//! Analytic bound shapes: Li, effective Chebotarev error terms, the Selberg
//! sieve on a concrete configuration, and the exponent optimisation.

pub mod analytic;
pub mod exponent;
pub mod selberg;

pub use analytic::{chebotarev_error_ahc, chebotarev_error_grh, li, m_lk, ChebotarevInput};
pub use exponent::{
    bound_exponent, corollary_check, exponent_report, grid_optimal_beta, CorollaryCheck, ExponentReport,
};
pub use selberg::{
    closed_form_error, exact_error_sum, multi_prime_bound, multi_prime_cap_holds, pi_split, selberg_bound,
    squarefree_products, ErrorMethod, ErrorModel, SieveBoundReport, SieveConfig, EXACT_PAIR_LIMIT, SHAPE_LABEL,
};
