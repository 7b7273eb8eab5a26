//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, stored lowest degree first.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{input, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<BigInt>", into = "Vec<BigInt>")]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl TryFrom<Vec<BigInt>> for IntPolynomial {
    type Error = std::convert::Infallible;
    fn try_from(v: Vec<BigInt>) -> std::result::Result<Self, Self::Error> {
        Ok(IntPolynomial::new(v))
    }
}

impl From<IntPolynomial> for Vec<BigInt> {
    fn from(p: IntPolynomial) -> Self {
        p.coeffs
    }
}

impl IntPolynomial {
    /// Builds a polynomial, trimming high zero coefficients.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// f(-x), multiplied by (-1)^deg so a monic input stays monic.
    pub fn negate_variable(&self) -> Self {
        let deg = self.coeffs.len().saturating_sub(1);
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if (deg - i) % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder of `self` by `d`: lc(d)^(deg self - deg d + 1) * self mod d.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("nonzero divisor");
        let lc = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let top = r.last().unwrap().clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[shift + i] -= &top * dc;
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Primitive greatest common divisor over Z[x] (positive leading coefficient).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// Exact division; `None` when `d` does not divide `self` over Z.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() < dd + 1 {
            return if self.is_zero() { Some(Self::zero()) } else { None };
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let (quot, rem) = r[k + dd].div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] -= &quot * dc;
            }
            q[k] = quot;
        }
        if r.iter().all(|c| c.is_zero()) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Squarefree part f / gcd(f, f'), normalized primitive.
    pub fn radical(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.primitive_part();
        }
        self.primitive_part()
            .div_exact(&g)
            .expect("gcd divides its argument")
            .primitive_part()
    }

    /// Discriminant, via the resultant of f and f' computed as a
    /// fraction-free determinant of the Sylvester matrix.
    pub fn discriminant(&self) -> Result<BigInt> {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => return input("discriminant needs degree >= 1"),
        };
        if n == 1 {
            return Ok(BigInt::one());
        }
        let res = resultant(self, &self.derivative());
        let lc = self.leading().unwrap();
        let d = res / lc;
        Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
    }

    /// Coefficients reduced into [0, m).
    pub fn reduce_mod(&self, m: u64) -> Vec<u64> {
        let mb = BigInt::from(m);
        let mut v: Vec<u64> = self
            .coeffs
            .iter()
            .map(|c| c.mod_floor(&mb).to_u64().unwrap())
            .collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }
}

/// Resultant of two nonzero polynomials (Sylvester determinant).
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    let m = f.degree().expect("nonzero");
    let n = g.degree().expect("nonzero");
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for row in 0..n {
        for (i, c) in f.coeffs.iter().rev().enumerate() {
            mat[row][row + i] = c.clone();
        }
    }
    for row in 0..m {
        for (i, c) in g.coeffs.iter().rev().enumerate() {
            mat[n + row][row + i] = c.clone();
        }
    }
    bareiss_determinant(mat)
}

/// Fraction-free Gaussian elimination determinant.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn trims_and_degree() {
        let f = p(&[1, 2, 0, 0]);
        assert_eq!(f.degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!(p(&[]).is_zero());
    }

    #[test]
    fn discriminants() {
        // x^2 + 1 -> -4 ; x^2 - 2 -> 8 ; x^4 + 1 -> 256
        assert_eq!(p(&[1, 0, 1]).discriminant().unwrap(), BigInt::from(-4));
        assert_eq!(p(&[-2, 0, 1]).discriminant().unwrap(), BigInt::from(8));
        assert_eq!(p(&[1, 0, 0, 0, 1]).discriminant().unwrap(), BigInt::from(256));
        // x^3 + a x + b -> -4a^3 - 27b^2
        assert_eq!(p(&[1, 1, 0, 1]).discriminant().unwrap(), BigInt::from(-31));
        // x^5 + 1 -> 5^5
        assert_eq!(p(&[1, 0, 0, 0, 0, 1]).discriminant().unwrap(), BigInt::from(3125));
        // repeated root
        assert!(p(&[1, 2, 1]).discriminant().unwrap().is_zero());
        // non-monic: 2x^2 + 3x + 1 -> 9 - 8
        assert_eq!(p(&[1, 3, 2]).discriminant().unwrap(), BigInt::from(1));
    }

    #[test]
    fn gcd_and_radical() {
        let a = p(&[1, 0, 1]); // x^2+1
        let b = p(&[-1, 1]); // x-1
        let f = a.mul(&a).mul(&b);
        assert_eq!(f.gcd(&f.derivative()), a);
        assert_eq!(f.radical(), a.mul(&b));
        assert_eq!(p(&[3, 0, 3]).primitive_part(), a);
        assert_eq!(f.div_exact(&a), Some(a.mul(&b)));
        assert_eq!(f.div_exact(&p(&[1, 1])), None);
    }

    #[test]
    fn negate_variable_keeps_monic() {
        let f = p(&[5, 3, 1]); // x^2 + 3x + 5
        assert_eq!(f.negate_variable(), p(&[5, -3, 1]));
        let g = p(&[2, 1, 0, 1]); // x^3 + x + 2 -> x^3 + x - 2
        assert_eq!(g.negate_variable(), p(&[-2, 1, 0, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[5, -3, 1]).to_string(), "x^2 - 3x + 5");
        assert_eq!(p(&[-1]).to_string(), "-1");
    }
}
