use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::arith::{is_prime, TRIAL_BOUND};
use crate::algebra::poly::IntPolynomial;
use crate::error::{input, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    Elliptic,
    Genus2,
}

/// A curve over Q: y² = x³ + ax + b (coefficients [a, b]) or y² = f(x)
/// with f of degree 5 or 6 (coefficients of f, lowest first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CurveRepr", into = "CurveRepr")]
pub struct CurveSpec {
    kind: CurveKind,
    coefficients: Vec<i64>,
    discriminant: BigInt,
}

#[derive(Serialize, Deserialize)]
struct CurveRepr {
    kind: CurveKind,
    coefficients: Vec<i64>,
}

impl TryFrom<CurveRepr> for CurveSpec {
    type Error = Error;
    fn try_from(r: CurveRepr) -> Result<Self> {
        CurveSpec::new(r.kind, r.coefficients)
    }
}

impl From<CurveSpec> for CurveRepr {
    fn from(c: CurveSpec) -> Self {
        CurveRepr {
            kind: c.kind,
            coefficients: c.coefficients,
        }
    }
}

impl CurveSpec {
    pub fn new(kind: CurveKind, coefficients: Vec<i64>) -> Result<Self> {
        let discriminant = match kind {
            CurveKind::Elliptic => {
                let [a, b] = coefficients[..] else {
                    return input("elliptic curves take exactly two coefficients a, b");
                };
                let (a, b) = (BigInt::from(a), BigInt::from(b));
                BigInt::from(-16) * (BigInt::from(4) * &a * &a * &a + BigInt::from(27) * &b * &b)
            }
            CurveKind::Genus2 => {
                let f = IntPolynomial::from_i64(&coefficients);
                if !matches!(f.degree(), Some(5 | 6)) {
                    return input("genus-2 curves need f of degree 5 or 6");
                }
                if coefficients.len() != f.degree().unwrap() + 1 {
                    return input("trailing zero coefficients in f");
                }
                f.discriminant()?
            }
        };
        if discriminant.is_zero() {
            return input("singular model: discriminant is 0");
        }
        Ok(CurveSpec {
            kind,
            coefficients,
            discriminant,
        })
    }

    pub fn elliptic(a: i64, b: i64) -> Result<Self> {
        Self::new(CurveKind::Elliptic, vec![a, b])
    }

    pub fn genus2(f: &[i64]) -> Result<Self> {
        Self::new(CurveKind::Genus2, f.to_vec())
    }

    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn genus(&self) -> usize {
        match self.kind {
            CurveKind::Elliptic => 1,
            CurveKind::Genus2 => 2,
        }
    }

    /// Discriminant of the model (of the cubic with the usual -16 factor,
    /// or of f).
    pub fn discriminant(&self) -> &BigInt {
        &self.discriminant
    }

    fn leading(&self) -> i64 {
        match self.kind {
            CurveKind::Elliptic => 1,
            CurveKind::Genus2 => *self.coefficients.last().unwrap(),
        }
    }

    /// Good reduction of the model at p: p ≥ 5, p ∤ disc, p ∤ leading coefficient.
    pub fn is_good(&self, p: u64) -> bool {
        p >= 5 && !self.discriminant.is_multiple_of(&BigInt::from(p)) && self.leading() % p as i64 != 0
    }

    /// Primes dividing 2·3·disc·lc, by trial division.
    pub fn bad_primes(&self) -> Result<Vec<u64>> {
        let mut n = (&self.discriminant * BigInt::from(6) * BigInt::from(self.leading())).abs();
        let mut out = Vec::new();
        let mut d = 2u64;
        while d <= TRIAL_BOUND {
            if BigInt::from(d) * BigInt::from(d) > n {
                break;
            }
            if n.is_multiple_of(&BigInt::from(d)) {
                out.push(d);
                while n.is_multiple_of(&BigInt::from(d)) {
                    n /= d;
                }
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if n > BigInt::from(1) {
            match n.to_u64() {
                Some(q) if is_prime(q) => out.push(q),
                _ if BigInt::from(TRIAL_BOUND) * BigInt::from(TRIAL_BOUND) > n => {
                    out.push(n.to_u64().expect("below TRIAL_BOUND^2"))
                }
                _ => return Err(Error::IncompleteFactorization(n.to_string())),
            }
        }
        Ok(out)
    }

    /// Coefficients reduced mod p as residues.
    pub fn reduced(&self, p: u64) -> Vec<u64> {
        self.coefficients
            .iter()
            .map(|&c| c.rem_euclid(p as i64) as u64)
            .collect()
    }
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            CurveKind::Elliptic => write!(f, "elliptic a={} b={}", self.coefficients[0], self.coefficients[1]),
            CurveKind::Genus2 => {
                let c: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
                write!(f, "genus2 f={}", c.join(","))
            }
        }
    }
}

/// Parses `elliptic a=1 b=1` or `genus2 f=1,0,0,0,0,1` (lowest first).
impl FromStr for CurveSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split_whitespace();
        let kind = parts.next().unwrap_or("");
        let mut fields = std::collections::BTreeMap::new();
        for part in parts {
            let Some((k, v)) = part.split_once('=') else {
                return input(format!("expected key=value, got '{part}'"));
            };
            if fields.insert(k.to_string(), v.to_string()).is_some() {
                return input(format!("duplicate field '{k}'"));
            }
        }
        let int = |v: &str| {
            v.trim()
                .parse::<i64>()
                .map_err(|_| Error::Input(format!("'{v}' is not an integer")))
        };
        match kind {
            "elliptic" => {
                let a = int(fields.remove("a").as_deref().unwrap_or("0"))?;
                let b = int(fields.remove("b").as_deref().unwrap_or("0"))?;
                if let Some(k) = fields.keys().next() {
                    return input(format!("unknown field '{k}' for an elliptic curve"));
                }
                CurveSpec::elliptic(a, b)
            }
            "genus2" => {
                let Some(f) = fields.remove("f") else {
                    return input("genus2 curves need f=c0,c1,...");
                };
                if let Some(k) = fields.keys().next() {
                    return input(format!("unknown field '{k}' for a genus-2 curve"));
                }
                let coeffs = f.split(',').map(int).collect::<Result<Vec<_>>>()?;
                CurveSpec::genus2(&coeffs)
            }
            other => input(format!("unknown curve kind '{other}' (expected elliptic or genus2)")),
        }
    }
}
