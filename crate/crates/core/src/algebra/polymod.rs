//! Polynomials over a prime field F_l with small modulus (l < 2^32),
//! coefficients lowest first, and distinct-degree factorization.

use super::arith::{inv_mod_prime, is_prime};
use super::poly::IntPolynomial;
use crate::error::{input, Error, Result};

/// A polynomial over F_l, trimmed (no trailing zeros).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyModP {
    pub p: u64,
    pub c: Vec<u64>,
}

impl PolyModP {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        debug_assert!(p < (1 << 32));
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyModP { p, c }
    }

    pub fn from_int(f: &IntPolynomial, p: u64) -> Self {
        PolyModP { p, c: f.reduce_mod(p) }
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    fn lc(&self) -> u64 {
        *self.c.last().expect("nonzero polynomial")
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod_prime(self.lc(), self.p).unwrap();
        Self::new(self.p, self.c.iter().map(|&a| a * inv % self.p).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| self.c.get(i).copied().unwrap_or(0) + o.c.get(i).copied().unwrap_or(0))
            .collect();
        Self::new(self.p, v)
    }

    pub fn scale(&self, a: u64) -> Self {
        Self::new(self.p, self.c.iter().map(|&x| x * (a % self.p) % self.p).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let p = self.p;
        let v = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = o.c.get(i).copied().unwrap_or(0);
                (a + p - b) % p
            })
            .collect();
        Self::new(p, v)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::new(self.p, vec![]);
        }
        let p = self.p;
        let mut out = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % p;
            }
        }
        Self::new(p, out)
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let p = self.p;
        let dd = d.degree().expect("division by zero polynomial");
        let inv = inv_mod_prime(d.lc(), p).unwrap();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::new(p, vec![]), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let t = r[k + dd] * inv % p;
            q[k] = t;
            if t == 0 {
                continue;
            }
            for (i, &dc) in d.c.iter().enumerate() {
                r[k + i] = (r[k + i] + p - t * dc % p) % p;
            }
        }
        r.truncate(dd);
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(
            p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &a)| (i as u64 % p) * a % p)
                .collect(),
        )
    }

    pub fn mul_mod(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem(m)
    }

    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::new(self.p, vec![1]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            base = base.mul_mod(&base, m);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        self.c.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).is_constant(),
        }
    }

    /// Degrees of the irreducible factors of a squarefree polynomial.
    ///
    /// Caller guarantees squarefreeness; the result is sorted ascending.
    pub fn distinct_degree_degrees(&self) -> Vec<usize> {
        let p = self.p;
        let mut f = self.monic();
        let mut out = Vec::new();
        let x = Self::x(p);
        let mut h = x.clone();
        let mut d = 0usize;
        while let Some(deg) = f.degree() {
            if deg == 0 {
                break;
            }
            d += 1;
            if 2 * d > deg {
                out.push(deg);
                break;
            }
            h = h.pow_mod(p, &f);
            let g = f.gcd(&h.sub(&x));
            let gd = g.degree().unwrap();
            if gd > 0 {
                out.extend(std::iter::repeat(d).take(gd / d));
                f = f.div_rem(&g).0;
                h = h.rem(&f);
            }
        }
        out.sort_unstable();
        out
    }

    /// True when the polynomial is squarefree and a product of linear factors.
    pub fn splits_completely(&self) -> bool {
        let Some(deg) = self.degree() else { return false };
        if deg == 0 {
            return true;
        }
        if !self.is_squarefree() {
            return false;
        }
        let x = Self::x(self.p);
        x.pow_mod(self.p, self).sub(&x).rem(self).is_zero()
    }
}

/// Multiset of degrees of the irreducible factors of `f` modulo `l`.
pub fn factor_degrees_mod(f: &IntPolynomial, l: u64) -> Result<Vec<usize>> {
    if !is_prime(l) || l >= 1 << 32 {
        return input(format!("modulus {l} must be a prime below 2^32"));
    }
    let fp = PolyModP::from_int(f, l);
    if fp.is_zero() {
        return input(format!("polynomial vanishes modulo {l}"));
    }
    if !fp.is_squarefree() {
        return Err(Error::RamifiedPrime(l));
    }
    Ok(fp.distinct_degree_degrees())
}

/// Lexicographically first monic irreducible polynomial of degree `k` over F_p.
pub fn first_irreducible(p: u64, k: usize) -> PolyModP {
    assert!(k >= 1);
    let total = (p as u128).pow(k as u32);
    for idx in 0..total {
        let mut c = Vec::with_capacity(k + 1);
        let mut rest = idx;
        for _ in 0..k {
            c.push((rest % p as u128) as u64);
            rest /= p as u128;
        }
        c.push(1);
        let f = PolyModP::new(p, c);
        if k == 1 || (f.c[0] != 0 && f.is_squarefree() && f.distinct_degree_degrees() == vec![k]) {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}
