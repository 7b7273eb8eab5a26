//! Naive point counting by quadratic-character sums.
//!
//! Values of a polynomial at x = 0, 1, ..., p−1 are produced by forward
//! differences, so each step costs deg additions and one table lookup.

use super::curve::{CurveKind, CurveSpec};
use super::weil::WeilPolynomial;
use crate::error::{input, Error, Result};

/// χ(v) for v in [0, p) as −1, 0, 1.
pub fn character_table(p: u64) -> Vec<i8> {
    let mut chi = vec![-1i8; p as usize];
    chi[0] = 0;
    for x in 1..=p / 2 {
        chi[(x * x % p) as usize] = 1;
    }
    chi
}

fn eval(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

/// Forward-difference walker over g(0), g(1), ... for a polynomial of
/// degree < `width` given by its first `width` values.
struct Differences {
    d: Vec<u64>,
    p: u64,
}

impl Differences {
    fn new(mut values: Vec<u64>, p: u64) -> Self {
        let n = values.len();
        for k in 1..n {
            for i in (k..n).rev() {
                values[i] = (values[i] + p - values[i - 1]) % p;
            }
        }
        Differences { d: values, p }
    }

    #[inline]
    fn current(&self) -> u64 {
        self.d[0]
    }

    #[inline]
    fn step(&mut self) {
        let n = self.d.len();
        for i in 0..n - 1 {
            let v = self.d[i] + self.d[i + 1];
            self.d[i] = if v >= self.p { v - self.p } else { v };
        }
    }
}

/// Σ_{x ∈ F_p} χ(f(x)).
fn character_sum(f: &[u64], p: u64, chi: &[i8]) -> i64 {
    let width = f.len().max(1);
    let mut w = Differences::new((0..width as u64).map(|x| eval(f, x, p)).collect(), p);
    let mut sum = 0i64;
    for _ in 0..p {
        sum += chi[w.current() as usize] as i64;
        w.step();
    }
    sum
}

fn require_good(curve: &CurveSpec, p: u64) -> Result<()> {
    if !curve.is_good(p) {
        return input(format!("{p} is a bad prime for {curve} (or below 5)"));
    }
    Ok(())
}

/// a_p of y² = x³ + ax + b at a good prime p ≥ 5, with a precomputed
/// character table.
pub fn ec_trace_with(curve: &CurveSpec, p: u64, chi: &[i8]) -> i64 {
    let c = curve.reduced(p);
    let f = [c[1], c[0], 0, 1];
    -character_sum(&f, p, chi)
}

/// a_p = p + 1 − #E(F_p).
pub fn ec_trace(curve: &CurveSpec, p: u64) -> Result<i64> {
    if curve.kind() != CurveKind::Elliptic {
        return input("ec_trace needs an elliptic curve");
    }
    require_good(curve, p)?;
    let a = ec_trace_with(curve, p, &character_table(p));
    if (a as i128).pow(2) > 4 * p as i128 {
        return Err(Error::Consistency(format!("a_{p} = {a} violates the Weil bound")));
    }
    Ok(a)
}

/// (#C(F_p), #C(F_{p²})) for y² = f(x) of degree 5 or 6, points at
/// infinity of the smooth model included.
pub fn genus2_counts_with(curve: &CurveSpec, p: u64, chi: &[i8]) -> (u64, u64) {
    let f = curve.reduced(p);
    let deg = f.len() - 1;
    let (inf1, inf2) = if deg == 5 {
        (1, 1)
    } else {
        // two points over any field where the leading coefficient is a square
        ((1 + chi[f[6] as usize] as i64) as u64, 2)
    };

    // F_p points, and F_p-rational x over F_{p²}
    let mut w = Differences::new((0..7).map(|x| eval(&f, x, p)).collect(), p);
    let mut affine1 = 0i64;
    let mut affine2_rational = 0u64;
    for _ in 0..p {
        let v = w.current();
        affine1 += 1 + chi[v as usize] as i64;
        affine2_rational += if v == 0 { 1 } else { 2 };
        w.step();
    }

    // x ∉ F_p: x is a root of t² − st + n with s² − 4n a non-residue.
    // Write f(x) = A + Bx modulo t² − st + n; then
    // Norm f(x) = A² + sAB + nB², a polynomial of degree ≤ 6 in n.
    let norm_at = |s: u64, n: u64| -> u64 {
        let (mut u, mut v) = (0u64, 1u64); // x^k = u x + v
        let (mut a, mut b) = (0u64, 0u64);
        for &c in &f {
            a = (a + c * v) % p;
            b = (b + c * u) % p;
            let nu = (s * u + v) % p;
            let nv = (p - n * u % p) % p;
            u = nu;
            v = nv;
        }
        (a * a % p + s * a % p * b % p + n * b % p * b % p) % p
    };
    let mut affine2_irrational = 0u64;
    let four = 4 % p;
    for s in 0..p {
        let mut norms = Differences::new((0..7).map(|n| norm_at(s, n)).collect(), p);
        let mut disc = s * s % p; // s² − 4n, decreasing by 4 per step
        for _ in 0..p {
            if chi[disc as usize] == -1 {
                affine2_irrational += (2 + 2 * chi[norms.current() as usize] as i64) as u64;
            }
            norms.step();
            disc = (disc + p - four) % p;
        }
    }
    (
        affine1 as u64 + inf1,
        affine2_rational + affine2_irrational + inf2,
    )
}

/// L-polynomial T⁴ − a₁T³ + a₂T² − p·a₁T + p² at a good odd prime, from
/// s_k = p^k + 1 − #C(F_{p^k}), a₁ = s₁ and a₂ = (s₁² − s₂)/2.
pub fn genus2_lpoly_with(curve: &CurveSpec, p: u64, chi: &[i8]) -> Result<WeilPolynomial> {
    let (n1, n2) = genus2_counts_with(curve, p, chi);
    let pi = p as i64;
    let s1 = pi + 1 - n1 as i64;
    let s2 = pi * pi + 1 - n2 as i64;
    if (s1 * s1 - s2) % 2 != 0 {
        return Err(Error::Consistency(format!(
            "odd s1² − s2 at p = {p} ({n1}, {n2} points)"
        )));
    }
    let w = WeilPolynomial::genus2(s1, (s1 * s1 - s2) / 2, p);
    if !w.satisfies_weil_bound() {
        return Err(Error::Consistency(format!(
            "L-polynomial at p = {p} violates the Weil bound: {}",
            w.coefficients
        )));
    }
    Ok(w)
}

pub fn genus2_lpoly(curve: &CurveSpec, p: u64) -> Result<WeilPolynomial> {
    if curve.kind() != CurveKind::Genus2 {
        return input("genus2_lpoly needs a genus-2 curve");
    }
    require_good(curve, p)?;
    genus2_lpoly_with(curve, p, &character_table(p))
}

/// Frobenius polynomial of any supported curve at a good prime.
pub fn frobenius_polynomial(curve: &CurveSpec, p: u64, chi: &[i8]) -> Result<WeilPolynomial> {
    match curve.kind() {
        CurveKind::Elliptic => {
            let a = ec_trace_with(curve, p, chi);
            let w = WeilPolynomial::elliptic(a, p);
            if !w.satisfies_weil_bound() {
                return Err(Error::Consistency(format!("a_{p} = {a} violates the Weil bound")));
            }
            Ok(w)
        }
        CurveKind::Genus2 => genus2_lpoly_with(curve, p, chi),
    }
}
