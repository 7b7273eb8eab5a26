//! The counting exponent 1 − 1/(3d + r + 6) and the z = X^β trade-off
//! behind it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::algebra::rational;
use crate::error::{input, Result};

pub const GRID_POINTS: usize = 4000;
pub const GRID_MIN: f64 = 1e-4;
pub const GRID_MAX: f64 = 0.5;

/// Generic-case denominators for an abelian variety of dimension g, whose
/// Mumford–Tate group is GSp_2g (semisimple part of dim g(2g+1), rank g).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryCheck {
    pub g: u64,
    pub dim: u64,
    pub rank: u64,
    /// 3·dim + rank + 6 = 6g² + 4g + 6.
    pub theorem_denominator: u64,
    /// 6g² + 2g + 6 as stated for the generic case.
    pub corollary_denominator: u64,
    pub difference: i64,
    pub discrepancy: bool,
}

pub fn corollary_check(g: u64) -> Result<CorollaryCheck> {
    if g == 0 {
        return input("g must be >= 1");
    }
    let dim = g * (2 * g + 1);
    let theorem = 3 * dim + g + 6;
    let corollary = 6 * g * g + 2 * g + 6;
    let difference = theorem as i64 - corollary as i64;
    Ok(CorollaryCheck {
        g,
        dim,
        rank: g,
        theorem_denominator: theorem,
        corollary_denominator: corollary,
        difference,
        discrepancy: difference != 0,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExponentReport {
    pub dim: u64,
    pub rank: u64,
    pub epsilon: f64,
    /// γ = (3·dim + rank)/4.
    #[serde(with = "rational")]
    pub gamma: BigRational,
    /// β = 1/(4γ + 6).
    #[serde(with = "rational")]
    pub beta: BigRational,
    /// 1 − β, before ε.
    #[serde(with = "rational")]
    pub exponent_base: BigRational,
    pub exponent: f64,
    /// 4γ + 6 == 3·dim + rank + 6, checked in exact arithmetic.
    pub consistent: bool,
    /// Minimiser of max(1 − β, (2γ + 2)β + ½) on a log-spaced grid.
    pub grid_beta: f64,
    /// Spacing of the grid at `grid_beta`.
    pub grid_step: f64,
    pub corollary: Option<CorollaryCheck>,
}

/// X-exponent of the sieve bound for z = X^β: the larger of the main term
/// X^(1−β) and the error term X^((2γ+2)β + ½).
pub fn bound_exponent(gamma: f64, beta: f64) -> f64 {
    (1.0 - beta).max((2.0 * gamma + 2.0) * beta + 0.5)
}

/// Grid minimiser of `bound_exponent` in β, with the local grid spacing.
pub fn grid_optimal_beta(gamma: f64) -> (f64, f64) {
    let ratio = (GRID_MAX / GRID_MIN).powf(1.0 / (GRID_POINTS - 1) as f64);
    let at = |i: usize| GRID_MIN * ratio.powi(i as i32);
    let best = (0..GRID_POINTS)
        .min_by(|&a, &b| bound_exponent(gamma, at(a)).total_cmp(&bound_exponent(gamma, at(b))))
        .unwrap();
    let b = at(best);
    (b, b * (ratio - 1.0))
}

pub fn exponent_report(dim: u64, rank: u64, epsilon: f64, g: Option<u64>) -> Result<ExponentReport> {
    if rank < 1 || rank > dim {
        return input(format!("need dim >= rank >= 1, got dim = {dim}, rank = {rank}"));
    }
    if !(epsilon >= 0.0) || !epsilon.is_finite() {
        return input("epsilon must be finite and >= 0");
    }
    let int = |n: u64| BigRational::from_integer(BigInt::from(n));
    let gamma = (int(3) * int(dim) + int(rank)) / int(4);
    let denom = int(4) * &gamma + int(6);
    let consistent = denom == int(3 * dim + rank + 6);
    let beta = denom.recip();
    let exponent_base = int(1) - &beta;
    let (grid_beta, grid_step) = grid_optimal_beta(gamma.to_f64().unwrap_or(f64::INFINITY));
    Ok(ExponentReport {
        dim,
        rank,
        epsilon,
        exponent: exponent_base.to_f64().unwrap_or(1.0) + epsilon,
        gamma,
        beta,
        exponent_base,
        consistent,
        grid_beta,
        grid_step,
        corollary: g.map(corollary_check).transpose()?,
    })
}
