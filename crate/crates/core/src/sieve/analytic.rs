//! The logarithmic integral and the effective Chebotarev error shapes.

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};

/// Li(X) = ∫₂^X dt / log t.
///
/// Integrated in u = log t (integrand e^u / u, smooth on [log 2, log X])
/// by double-exponential quadrature.
pub fn li(x: f64) -> Result<f64> {
    if !(x >= 2.0) || !x.is_finite() {
        return input(format!("Li(X) needs a finite X >= 2, got {x}"));
    }
    if x == 2.0 {
        return Ok(0.0);
    }
    let r = quadrature::double_exponential::integrate(|u: f64| u.exp() / u, 2f64.ln(), x.ln(), 1e-14);
    Ok(r.integral)
}

/// M(l/k) = |G| · Δ_k^(1/n_k) · Π_{p ramified} p.
pub fn m_lk(g_size: f64, delta_k: f64, n_k: u32, ramified_primes: &[u64]) -> Result<f64> {
    if !(g_size > 0.0) || !(delta_k > 0.0) || n_k == 0 {
        return input("M(l/k) needs positive |G|, |Δ_k| and n_k");
    }
    let prod: f64 = ramified_primes.iter().map(|&p| p as f64).product();
    Ok(g_size * delta_k.powf(1.0 / n_k as f64) * prod)
}

/// Inputs to the Chebotarev error shapes. `multiplier` stands in for the
/// unspecified implied constant.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChebotarevInput {
    pub c_size: f64,
    pub g_size: f64,
    pub h_index: f64,
    pub n_k: u32,
    #[serde(rename = "X")]
    pub x: f64,
    pub m_lk: f64,
    #[serde(default = "one")]
    pub multiplier: f64,
}

fn one() -> f64 {
    1.0
}

impl ChebotarevInput {
    pub fn new(c_size: f64, g_size: f64, h_index: f64, n_k: u32, x: f64, m_lk: f64) -> Self {
        ChebotarevInput {
            c_size,
            g_size,
            h_index,
            n_k,
            x,
            m_lk,
            multiplier: 1.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [self.c_size, self.g_size, self.h_index, self.x, self.m_lk, self.multiplier];
        if positive.iter().any(|v| !(*v > 0.0) || !v.is_finite()) || self.n_k == 0 {
            return input("Chebotarev inputs must be positive and finite");
        }
        if self.c_size > self.g_size {
            return input("|C| cannot exceed |G|");
        }
        if self.h_index < 1.0 {
            return input("[G:H] must be >= 1");
        }
        Ok(())
    }

    fn tail(&self) -> f64 {
        self.n_k as f64 * self.x.sqrt() * (self.x.ln() + self.m_lk.ln())
    }
}

/// |C| · n_k · √X · (log X + log M), under GRH.
pub fn chebotarev_error_grh(inp: &ChebotarevInput) -> Result<f64> {
    inp.validate()?;
    Ok(inp.multiplier * inp.c_size * inp.tail())
}

/// |C|^½ · [G:H]^½ · n_k · √X · (log X + log M), under GRH and AHC for H.
pub fn chebotarev_error_ahc(inp: &ChebotarevInput) -> Result<f64> {
    inp.validate()?;
    Ok(inp.multiplier * (inp.c_size * inp.h_index).sqrt() * inp.tail())
}
