//! Finite field elements: F_p, the quadratic extension F_{p^2} = F_p(sqrt(n))
//! with n the least non-residue, and general F_{p^k} for the small k used
//! by the torus models and the point-count oracles.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::arith::{inv_mod_prime, is_prime, least_nonresidue, pow_mod};
use super::polymod::{first_irreducible, PolyModP};
use crate::error::{input, Result};

/// A residue modulo a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeFieldElement {
    residue: u64,
    modulus: u64,
}

impl PrimeFieldElement {
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        if !is_prime(modulus) || modulus >= 1 << 32 {
            return input(format!("{modulus} is not a prime below 2^32"));
        }
        Ok(Self {
            residue: value.rem_euclid(modulus as i64) as u64,
            modulus,
        })
    }

    pub fn residue(self) -> u64 {
        self.residue
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    pub fn pow(self, e: u64) -> Self {
        Self {
            residue: pow_mod(self.residue, e, self.modulus),
            ..self
        }
    }

    pub fn inverse(self) -> Option<Self> {
        inv_mod_prime(self.residue, self.modulus).map(|r| Self { residue: r, ..self })
    }

    fn same_field(self, o: Self) {
        assert_eq!(self.modulus, o.modulus, "mixed moduli");
    }
}

impl Add for PrimeFieldElement {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.same_field(o);
        Self {
            residue: (self.residue + o.residue) % self.modulus,
            ..self
        }
    }
}

impl Sub for PrimeFieldElement {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.same_field(o);
        Self {
            residue: (self.residue + self.modulus - o.residue) % self.modulus,
            ..self
        }
    }
}

impl Mul for PrimeFieldElement {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.same_field(o);
        Self {
            residue: self.residue * o.residue % self.modulus,
            ..self
        }
    }
}

impl Neg for PrimeFieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            residue: (self.modulus - self.residue) % self.modulus,
            ..self
        }
    }
}

/// F_{p^2} presented as F_p[t]/(t^2 - n), n the least quadratic non-residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadraticExtension {
    pub p: u64,
    pub nonresidue: u64,
}

/// a + b·t in a [`QuadraticExtension`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadExtElement {
    pub a: u64,
    pub b: u64,
}

impl QuadraticExtension {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return input(format!("{p} too large for the quadratic extension"));
        }
        Ok(Self {
            p,
            nonresidue: least_nonresidue(p)?,
        })
    }

    pub fn elem(&self, a: u64, b: u64) -> QuadExtElement {
        QuadExtElement {
            a: a % self.p,
            b: b % self.p,
        }
    }

    pub fn zero(&self) -> QuadExtElement {
        QuadExtElement { a: 0, b: 0 }
    }

    pub fn one(&self) -> QuadExtElement {
        QuadExtElement { a: 1, b: 0 }
    }

    #[inline]
    pub fn add(&self, x: QuadExtElement, y: QuadExtElement) -> QuadExtElement {
        let p = self.p;
        QuadExtElement {
            a: (x.a + y.a) % p,
            b: (x.b + y.b) % p,
        }
    }

    #[inline]
    pub fn sub(&self, x: QuadExtElement, y: QuadExtElement) -> QuadExtElement {
        let p = self.p;
        QuadExtElement {
            a: (x.a + p - y.a) % p,
            b: (x.b + p - y.b) % p,
        }
    }

    #[inline]
    pub fn mul(&self, x: QuadExtElement, y: QuadExtElement) -> QuadExtElement {
        let p = self.p;
        let bb = x.b * y.b % p * self.nonresidue % p;
        QuadExtElement {
            a: (x.a * y.a + bb) % p,
            b: (x.a * y.b + x.b * y.a) % p,
        }
    }

    /// Norm to F_p: a^2 - n b^2.
    #[inline]
    pub fn norm(&self, x: QuadExtElement) -> u64 {
        let p = self.p;
        (x.a * x.a % p + p - x.b * x.b % p * self.nonresidue % p) % p
    }

    pub fn pow(&self, mut x: QuadExtElement, mut e: u128) -> QuadExtElement {
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, x);
            }
            x = self.mul(x, x);
            e >>= 1;
        }
        acc
    }

    pub fn inverse(&self, x: QuadExtElement) -> Option<QuadExtElement> {
        let n = self.norm(x);
        let ni = inv_mod_prime(n, self.p)?;
        let p = self.p;
        Some(QuadExtElement {
            a: x.a * ni % p,
            b: (p - x.b) % p * ni % p,
        })
    }

    /// Frobenius x -> x^p, i.e. conjugation a + bt -> a - bt.
    pub fn frobenius(&self, x: QuadExtElement) -> QuadExtElement {
        QuadExtElement {
            a: x.a,
            b: (self.p - x.b) % self.p,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = QuadExtElement> + '_ {
        (0..self.p).flat_map(move |a| (0..self.p).map(move |b| QuadExtElement { a, b }))
    }
}

/// F_{p^k} as F_p[t]/(m(t)) with m the first monic irreducible of degree k.
#[derive(Clone, Debug)]
pub struct GaloisField {
    pub p: u64,
    pub k: usize,
    modulus: PolyModP,
}

/// Coefficient vector of length k, lowest first.
pub type GfElement = Vec<u64>;

impl GaloisField {
    pub fn new(p: u64, k: usize) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return input(format!("{p} is not a usable prime"));
        }
        if k == 0 {
            return input("extension degree must be >= 1");
        }
        Ok(Self {
            p,
            k,
            modulus: first_irreducible(p, k),
        })
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.k as u32)
    }

    pub fn modulus(&self) -> &PolyModP {
        &self.modulus
    }

    fn pad(&self, mut v: Vec<u64>) -> GfElement {
        v.resize(self.k, 0);
        v
    }

    pub fn from_base(&self, a: u64) -> GfElement {
        self.pad(vec![a % self.p])
    }

    pub fn one(&self) -> GfElement {
        self.from_base(1)
    }

    pub fn is_zero(&self, x: &GfElement) -> bool {
        x.iter().all(|&c| c == 0)
    }

    /// Element number `idx` in base-p digit order.
    pub fn element(&self, mut idx: u128) -> GfElement {
        let mut v = Vec::with_capacity(self.k);
        for _ in 0..self.k {
            v.push((idx % self.p as u128) as u64);
            idx /= self.p as u128;
        }
        v
    }

    pub fn add(&self, x: &GfElement, y: &GfElement) -> GfElement {
        x.iter().zip(y).map(|(a, b)| (a + b) % self.p).collect()
    }

    pub fn mul(&self, x: &GfElement, y: &GfElement) -> GfElement {
        let prod = PolyModP::new(self.p, x.clone()).mul(&PolyModP::new(self.p, y.clone()));
        self.pad(prod.rem(&self.modulus).c)
    }

    pub fn pow(&self, x: &GfElement, mut e: u128) -> GfElement {
        let mut acc = self.one();
        let mut base = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inverse(&self, x: &GfElement) -> Option<GfElement> {
        if self.is_zero(x) {
            None
        } else {
            Some(self.pow(x, self.order() - 2))
        }
    }

    /// Matrix of multiplication by `x` in the power basis (column j = x·t^j).
    pub fn multiplication_matrix(&self, x: &GfElement) -> Vec<Vec<u64>> {
        let mut m = vec![vec![0u64; self.k]; self.k];
        for j in 0..self.k {
            let mut basis = vec![0u64; self.k];
            basis[j] = 1;
            let col = self.mul(x, &basis);
            for i in 0..self.k {
                m[i][j] = col[i];
            }
        }
        m
    }

    /// Evaluates a polynomial with F_p coefficients at `x`.
    pub fn eval_base_poly(&self, f: &[u64], x: &GfElement) -> GfElement {
        let mut acc = vec![0u64; self.k];
        for &c in f.iter().rev() {
            acc = self.mul(&acc, x);
            acc[0] = (acc[0] + c) % self.p;
        }
        acc
    }

    /// Quadratic character: x^((q-1)/2) mapped to {-1, 0, 1}.
    pub fn quadratic_character(&self, x: &GfElement) -> i8 {
        if self.is_zero(x) {
            return 0;
        }
        let r = self.pow(x, (self.order() - 1) / 2);
        if r == self.one() {
            1
        } else {
            -1
        }
    }
}
