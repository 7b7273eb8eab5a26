//! Counting roots of integer polynomials in the ℓ-adic integers.
//!
//! Used for splitting questions at primes dividing a discriminant, where
//! reduction modulo ℓ alone cannot tell ramification from an index divisor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::poly::IntPolynomial;

/// f(r + ℓx) as a coefficient vector.
fn shift_scale(f: &[BigInt], r: u64, l: u64) -> Vec<BigInt> {
    // Taylor shift by r, then scale x -> ℓx
    let mut c = f.to_vec();
    let n = c.len();
    let r = BigInt::from(r);
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = &c[j + 1] * &r;
            c[j] += t;
        }
    }
    let lb = BigInt::from(l);
    let mut pw = BigInt::from(1);
    for coef in c.iter_mut() {
        *coef *= &pw;
        pw *= &lb;
    }
    c
}

fn strip_content(mut f: Vec<BigInt>, l: u64) -> Vec<BigInt> {
    let lb = BigInt::from(l);
    loop {
        if f.iter().all(|c| c.is_multiple_of(&lb)) && f.iter().any(|c| !c.is_zero()) {
            for c in f.iter_mut() {
                *c /= &lb;
            }
        } else {
            return f;
        }
    }
}

fn eval_mod(f: &[BigInt], x: u64, l: u64) -> u64 {
    let lb = BigInt::from(l);
    f.iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(&lb))
        .to_u64()
        .unwrap()
}

fn derivative_mod(f: &[BigInt], x: u64, l: u64) -> u64 {
    let d: Vec<BigInt> = f.iter().enumerate().skip(1).map(|(i, c)| c * i).collect();
    eval_mod(&d, x, l)
}

fn count(f: Vec<BigInt>, l: u64, depth: usize) -> usize {
    let f = strip_content(f, l);
    // squarefree input guarantees termination; the depth cap is a backstop
    assert!(depth < 4096, "root refinement did not terminate; input not squarefree?");
    let mut total = 0;
    for r in 0..l {
        if eval_mod(&f, r, l) != 0 {
            continue;
        }
        if derivative_mod(&f, r, l) != 0 {
            total += 1;
        } else {
            total += count(shift_scale(&f, r, l), l, depth + 1);
        }
    }
    total
}

/// Number of roots of a squarefree nonzero polynomial in Z_ℓ.
pub fn count_roots_in_zl(f: &IntPolynomial, l: u64) -> usize {
    assert!(!f.is_zero());
    count(f.coeffs().to_vec(), l, 0)
}

/// True when a squarefree monic polynomial splits into linear factors over Q_ℓ.
pub fn splits_completely_over_ql(f: &IntPolynomial, l: u64) -> bool {
    Some(count_roots_in_zl(f, l)) == f.degree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::polymod::PolyModP;

    #[test]
    fn unramified_agrees_with_reduction() {
        for l in [101u64, 103, 113, 137] {
            for f in [
                IntPolynomial::from_i64(&[1, 0, 0, 0, 1]),
                IntPolynomial::from_i64(&[-2, 0, 1]),
                IntPolynomial::from_i64(&[5, -3, 0, 1]),
            ] {
                let fp = PolyModP::from_int(&f, l);
                if !fp.is_squarefree() {
                    continue;
                }
                let roots = (0..l).filter(|&x| fp.eval(x) == 0).count();
                assert_eq!(count_roots_in_zl(&f, l), roots);
            }
        }
    }

    #[test]
    fn index_divisor_still_splits() {
        // x^2 - 2·7^2 generates Q(√2); 7 divides the discriminant but is
        // unramified, and 2 = 3^2 mod 7
        let f = IntPolynomial::from_i64(&[-2 * 49, 0, 1]);
        assert!(splits_completely_over_ql(&f, 7));
        let g = IntPolynomial::from_i64(&[-3 * 49, 0, 1]);
        assert!(!splits_completely_over_ql(&g, 7));
    }

    #[test]
    fn ramified_prime_does_not_split() {
        // x^2 - 7 is Eisenstein at 7
        assert_eq!(count_roots_in_zl(&IntPolynomial::from_i64(&[-7, 0, 1]), 7), 0);
        // x^2 - 49·7: still ramified
        assert_eq!(count_roots_in_zl(&IntPolynomial::from_i64(&[-343, 0, 1]), 7), 0);
    }
}
