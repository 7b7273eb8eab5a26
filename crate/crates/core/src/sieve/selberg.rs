//! Selberg upper-bound sieve evaluated on a concrete configuration.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::analytic::li;
use crate::algebra::arith::is_prime;
use crate::algebra::poly::IntPolynomial;
use crate::algebra::polymod::factor_degrees_mod;
use crate::algebra::rational;
use crate::error::{input, Error, Result};

/// Above this many (d₁, d₂) pairs the closed-form overestimate replaces the
/// exact double sum.
pub const EXACT_PAIR_LIMIT: u64 = 1_000_000;

pub const SHAPE_LABEL: &str = "shape evaluation";

/// R_d = constant · d^γ̃ · √X · (log X + log d).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorModel {
    pub gamma_tilde: f64,
    pub constant: f64,
}

impl ErrorModel {
    pub fn r_d(&self, d: f64, x: f64) -> f64 {
        self.constant * d.powf(self.gamma_tilde) * x.sqrt() * (x.ln() + d.ln())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SieveConfig {
    #[serde(with = "rational::map", default)]
    pub beta_per_prime: BTreeMap<u64, BigRational>,
    #[serde(with = "rational")]
    pub beta_floor: BigRational,
    pub main_constant: f64,
    #[serde(rename = "X")]
    pub x: f64,
    pub z: f64,
    pub sieving_primes: Vec<u64>,
    pub error_model: ErrorModel,
    /// |ℐ|: the number of identical coset sieves summed. Scales all terms.
    #[serde(default = "one_f64")]
    pub coset_multiplier: f64,
}

fn one_f64() -> f64 {
    1.0
}

impl SieveConfig {
    pub fn validate(&self) -> Result<()> {
        let b = &self.beta_floor;
        if !b.is_positive() || b > &BigRational::one() {
            return input(format!("beta_floor must lie in (0,1], got {b}"));
        }
        for (p, bp) in &self.beta_per_prime {
            if bp < b || bp > &BigRational::one() {
                return input(format!("beta_p for p = {p} is {bp}; need beta_floor <= beta_p <= 1"));
            }
        }
        if !(self.z >= 2.0) || !self.z.is_finite() {
            return input(format!("z must be >= 2, got {}", self.z));
        }
        if !(self.x >= self.z) || !self.x.is_finite() {
            return input(format!("X must be >= z, got X = {} and z = {}", self.x, self.z));
        }
        if !(self.main_constant >= 0.0) || !(self.coset_multiplier >= 0.0) {
            return input("main_constant and coset_multiplier must be nonnegative");
        }
        if !(self.error_model.gamma_tilde >= 0.0) || !(self.error_model.constant >= 0.0) {
            return input("error_model gamma_tilde and constant must be nonnegative");
        }
        for w in self.sieving_primes.windows(2) {
            if w[0] >= w[1] {
                return input("sieving_primes must be strictly increasing");
            }
        }
        if let Some(&q) = self.sieving_primes.iter().find(|&&q| !is_prime(q)) {
            return input(format!("sieving prime {q} is not prime"));
        }
        Ok(())
    }

    /// Sieving primes ≤ z.
    pub fn active_primes(&self) -> Vec<u64> {
        self.sieving_primes.iter().copied().filter(|&q| (q as f64) <= self.z).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorMethod {
    ExactSum,
    ClosedForm,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SieveBoundReport {
    pub label: String,
    pub main_term: f64,
    pub error_term: f64,
    pub total: f64,
    pub z: f64,
    pub pi_p_z: u64,
    pub li_x: f64,
    pub error_method: ErrorMethod,
    /// Number of (d₁, d₂) pairs; saturates at u64::MAX.
    pub pair_count: u64,
    pub closed_form_error: f64,
    /// log z / log X: the β realised by this z.
    pub z_exponent: f64,
    /// X-exponents of the main and error shapes at that β.
    pub main_exponent: f64,
    pub error_exponent: f64,
}

/// Squarefree products of `primes` that are ≤ z, including 1, ascending.
pub fn squarefree_products(primes: &[u64], z: f64) -> Vec<u64> {
    let mut out = vec![1u64];
    for &q in primes {
        let fresh: Vec<u64> = out
            .iter()
            .filter_map(|&d| d.checked_mul(q).filter(|&m| (m as f64) <= z))
            .collect();
        out.extend(fresh);
    }
    out.sort_unstable();
    out
}

/// Σ_{d₁,d₂} R_{[d₁,d₂]} over squarefree products ≤ z, or None if there
/// are more than `limit` pairs.
pub fn exact_error_sum(cfg: &SieveConfig, limit: u64) -> Option<f64> {
    let ds = squarefree_products(&cfg.active_primes(), cfg.z);
    let n = ds.len() as u64;
    if n.checked_mul(n).map_or(true, |pairs| pairs > limit) {
        return None;
    }
    let mut sum = 0.0;
    for &a in &ds {
        for &b in &ds {
            let l = (a / num_integer::gcd(a, b)) as f64 * b as f64;
            sum += cfg.error_model.r_d(l, cfg.x);
        }
    }
    Some(sum)
}

/// constant · z^(2γ̃+2) · √X · (log X + 2 log z).
pub fn closed_form_error(cfg: &SieveConfig) -> f64 {
    let m = &cfg.error_model;
    m.constant * cfg.z.powf(2.0 * m.gamma_tilde + 2.0) * cfg.x.sqrt() * (cfg.x.ln() + 2.0 * cfg.z.ln())
}

pub fn selberg_bound(cfg: &SieveConfig) -> Result<SieveBoundReport> {
    cfg.validate()?;
    let active = cfg.active_primes();
    if active.is_empty() {
        return Err(Error::EmptySievingSet(cfg.z));
    }
    let pi = active.len() as u64;
    let beta = cfg
        .beta_floor
        .to_f64()
        .ok_or_else(|| Error::Input("beta_floor not representable".into()))?;
    let li_x = li(cfg.x)?;
    let main = if cfg.beta_floor.is_one() {
        0.0
    } else {
        (1.0 - beta) / beta * cfg.main_constant * li_x / pi as f64
    };
    let closed = closed_form_error(cfg);
    let (error, method) = match exact_error_sum(cfg, EXACT_PAIR_LIMIT) {
        Some(e) => (e, ErrorMethod::ExactSum),
        None => (closed, ErrorMethod::ClosedForm),
    };
    let n = squarefree_products(&active, cfg.z).len() as u64;
    let main = main * cfg.coset_multiplier;
    let error = error * cfg.coset_multiplier;
    let zb = cfg.z.ln() / cfg.x.ln();
    Ok(SieveBoundReport {
        label: SHAPE_LABEL.into(),
        main_term: main,
        error_term: error,
        total: main + error,
        z: cfg.z,
        pi_p_z: pi,
        li_x,
        error_method: method,
        pair_count: n.saturating_mul(n),
        closed_form_error: closed * cfg.coset_multiplier,
        z_exponent: zb,
        main_exponent: 1.0 - zb,
        error_exponent: (2.0 * cfg.error_model.gamma_tilde + 2.0) * zb + 0.5,
    })
}

/// Product of per-prime volume ratios, each in [0,1].
pub fn multi_prime_bound(ratios: &[BigRational]) -> Result<BigRational> {
    let mut acc = BigRational::one();
    for r in ratios {
        if r.is_negative() || r > &BigRational::one() {
            return input(format!("volume ratio {r} outside [0,1]"));
        }
        acc *= r;
    }
    Ok(acc)
}

/// Whether the product respects (3/4)^k; meaningful when every ratio < 3/4.
pub fn multi_prime_cap_holds(ratios: &[BigRational]) -> Result<bool> {
    let cap = BigRational::new(BigInt::from(3), BigInt::from(4));
    let k = i32::try_from(ratios.len()).map_err(|_| Error::Resource("too many ratios".into()))?;
    Ok(multi_prime_bound(ratios)? <= num_traits::pow::Pow::pow(cap, k))
}

/// Primes ℓ with lower_cut < ℓ ≤ z, ℓ ∤ disc(m), and m split into linear
/// factors mod ℓ.
pub fn pi_split(z: f64, m: &IntPolynomial, lower_cut: u64) -> Result<u64> {
    let deg = match m.degree() {
        Some(d) if d >= 1 => d,
        _ => return input("pi_split needs a polynomial of positive degree"),
    };
    if !m.is_monic() {
        return input("pi_split needs a monic polynomial");
    }
    if lower_cut < 2 {
        return input("lower_cut must be >= 2");
    }
    if !(z >= 0.0) || !z.is_finite() {
        return input(format!("bad z {z}"));
    }
    let disc = if deg >= 2 { m.discriminant()? } else { BigInt::one() };
    let primes = crate::algebra::arith::primes_up_to(z.floor() as u64)?;
    let mut count = 0;
    for &l in primes.iter().filter(|&&l| l > lower_cut) {
        if (&disc % BigInt::from(l)).is_zero() {
            continue;
        }
        if factor_degrees_mod(m, l)?.iter().all(|&d| d == 1) {
            count += 1;
        }
    }
    Ok(count)
}
