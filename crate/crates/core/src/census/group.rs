use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::arith::is_prime;
use crate::error::{input, Error, Result};

/// Split classical group families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Gl,
    Sl,
    Pgl,
    Sp,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(Family::Gl),
            "sl" => Ok(Family::Sl),
            "pgl" => Ok(Family::Pgl),
            "sp" | "gsp" => Ok(Family::Sp),
            other => input(format!("unknown group family '{other}' (expected gl, sl, pgl or sp)")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Gl => "GL",
            Family::Sl => "SL",
            Family::Pgl => "PGL",
            Family::Sp => "Sp",
        })
    }
}

/// A split group G over F_p: family, matrix size n (n = 2g for Sp) and p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: Family,
    pub n: usize,
    pub p: u64,
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}(F_{})", self.family, self.n, self.p)
    }
}

impl GroupSpec {
    pub fn new(family: Family, n: usize, p: u64) -> Result<Self> {
        let spec = GroupSpec { family, n, p };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !is_prime(self.p) {
            return input(format!("{} is not prime", self.p));
        }
        if self.n == 0 {
            return input("matrix size must be >= 1");
        }
        if self.family == Family::Sp && self.n % 2 == 1 {
            return input(format!("Sp needs an even matrix size, got {}", self.n));
        }
        Ok(())
    }

    /// Dimension of the maximal torus.
    pub fn rank(&self) -> usize {
        match self.family {
            Family::Gl => self.n,
            Family::Sl | Family::Pgl => self.n - 1,
            Family::Sp => self.n / 2,
        }
    }

    /// Size of the Weyl-group permutation domain (n for type A, g for Sp).
    pub fn weyl_degree(&self) -> usize {
        match self.family {
            Family::Sp => self.n / 2,
            _ => self.n,
        }
    }

    pub fn is_abelian(&self) -> bool {
        match self.family {
            Family::Gl | Family::Sl | Family::Pgl => self.n == 1,
            Family::Sp => false,
        }
    }

    /// |G(F_p)| from the classical order formulas.
    pub fn order(&self) -> Result<u128> {
        let p = self.p as u128;
        let n = self.n as u32;
        let of = || Error::Resource(format!("order of {self} overflows 128 bits"));
        let gl = || -> Option<u128> {
            let pn = p.checked_pow(n)?;
            (0..n).try_fold(1u128, |acc, i| acc.checked_mul(pn - p.pow(i)))
        };
        match self.family {
            Family::Gl => gl().ok_or_else(of),
            Family::Sl | Family::Pgl => gl().map(|o| o / (p - 1)).ok_or_else(of),
            Family::Sp => {
                let g = n / 2;
                (1..=g)
                    .try_fold(p.checked_pow(g * g).ok_or_else(of)?, |acc, i| {
                        acc.checked_mul(p.checked_pow(2 * i)? - 1)
                    })
                    .ok_or_else(of)
            }
        }
    }

    /// Order of the F_p-points of a Borel subgroup.
    pub fn borel_order(&self) -> Result<u128> {
        let p = self.p as u128;
        let n = self.n as u32;
        let of = || Error::Resource(format!("Borel order of {self} overflows 128 bits"));
        match self.family {
            Family::Gl | Family::Sl | Family::Pgl => {
                let torus_rank = if self.family == Family::Gl { n } else { n - 1 };
                let unip = p.checked_pow(n * (n - 1) / 2).ok_or_else(of)?;
                (p - 1)
                    .checked_pow(torus_rank)
                    .and_then(|t| t.checked_mul(unip))
                    .ok_or_else(of)
            }
            Family::Sp => {
                let g = n / 2;
                (p - 1)
                    .checked_pow(g)
                    .and_then(|t| t.checked_mul(p.checked_pow(g * g)?))
                    .ok_or_else(of)
            }
        }
    }
}
