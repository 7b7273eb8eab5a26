use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::poly::IntPolynomial;
use crate::error::{input, Result};

/// Characteristic polynomial of Frobenius at q for a curve of genus g.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeilPolynomial {
    pub coefficients: IntPolynomial,
    pub q: u64,
    pub genus: usize,
}

impl WeilPolynomial {
    /// T² − aT + q.
    pub fn elliptic(a: i64, q: u64) -> Self {
        WeilPolynomial {
            coefficients: IntPolynomial::from_i64(&[q as i64, -a, 1]),
            q,
            genus: 1,
        }
    }

    /// T⁴ − a₁T³ + a₂T² − q·a₁T + q².
    pub fn genus2(a1: i64, a2: i64, q: u64) -> Self {
        let q = q as i64;
        WeilPolynomial {
            coefficients: IntPolynomial::from_i64(&[q * q, -q * a1, a2, -a1, 1]),
            q: q as u64,
            genus: 2,
        }
    }

    /// Validates the shape (monic, degree 2g, constant term q^g) and builds.
    pub fn from_coefficients(coefficients: IntPolynomial, q: u64) -> Result<Self> {
        let deg = coefficients.degree().unwrap_or(0);
        if deg == 0 || deg % 2 == 1 || !coefficients.is_monic() {
            return input("a Weil polynomial is monic of positive even degree");
        }
        let genus = deg / 2;
        if coefficients.coeff(0) != BigInt::from(q).pow(genus as u32) {
            return input("constant term must be q^g");
        }
        Ok(WeilPolynomial {
            coefficients,
            q,
            genus,
        })
    }

    fn c(&self, i: usize) -> i64 {
        i64::try_from(self.coefficients.coeff(i)).expect("Weil coefficients fit in i64")
    }

    /// Trace a₁ (a_p in genus 1).
    pub fn a1(&self) -> i64 {
        -self.c(2 * self.genus - 1)
    }

    pub fn a2(&self) -> Option<i64> {
        (self.genus == 2).then(|| self.c(2))
    }

    /// coef(2g − i) · q^(g − i) = coef(i) for i < g, and coef(0) = q^g.
    pub fn satisfies_functional_equation(&self) -> bool {
        let g = self.genus;
        let q = BigInt::from(self.q);
        (0..g).all(|i| self.coefficients.coeff(i) == self.coefficients.coeff(2 * g - i) * q.pow((g - i) as u32))
            && self.coefficients.coeff(0) == q.pow(g as u32)
    }

    /// All complex roots have absolute value √q (exact integer tests).
    pub fn satisfies_weil_bound(&self) -> bool {
        let q = self.q as i128;
        let a1 = self.a1() as i128;
        match self.genus {
            1 => a1 * a1 <= 4 * q,
            2 => {
                // T⁴P(...) = T²·h(T + q/T) with h(y) = y² − a₁y + (a₂ − 2q);
                // roots on the circle iff both roots of h are real in [−2√q, 2√q]
                let a2 = self.a2().unwrap() as i128;
                let disc = a1 * a1 - 4 * (a2 - 2 * q);
                let s = a2 + 2 * q;
                a1 * a1 <= 16 * q && disc >= 0 && s >= 0 && s * s >= 4 * q * a1 * a1
            }
            _ => false,
        }
    }

    /// Power sums Σ α_i^k for k = 1..=n by Newton's identities.
    pub fn power_sums(&self, n: usize) -> Vec<BigInt> {
        let d = 2 * self.genus;
        // P = Π (T − α_i) = Σ_j (−1)^j e_j T^(d−j)
        let e: Vec<BigInt> = (0..=d)
            .map(|j| {
                let c = self.coefficients.coeff(d - j);
                if j % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect();
        let mut s: Vec<BigInt> = Vec::with_capacity(n + 1);
        s.push(BigInt::from(d));
        for k in 1..=n {
            let mut acc = BigInt::from(0);
            for i in 1..k {
                if i <= d {
                    let term = &e[i] * &s[k - i];
                    if i % 2 == 1 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
            }
            if k <= d {
                let term = BigInt::from(k) * &e[k];
                if k % 2 == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            s.push(acc);
        }
        s.remove(0);
        s
    }
}
