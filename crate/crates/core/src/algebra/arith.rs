//! Integer helpers: primality, modular powers, the quadratic residue symbol,
//! squarefree kernels and the prime sieve.

use crate::error::{input, Error, Result};

/// Largest bound accepted by [`primes_up_to`].
pub const PRIME_SIEVE_GUARD: u64 = 100_000_000;

/// Trial division stops here. Any cofactor below `TRIAL_BOUND^3 > 2^64` is
/// then fully classified, so every 64-bit input gets an exact answer.
pub const TRIAL_BOUND: u64 = 1 << 22;

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Modular inverse for a prime modulus (Fermat).
pub fn inv_mod_prime(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

/// Deterministic Miller-Rabin for all 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn require_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return input(format!("{p} is not an odd prime"));
    }
    Ok(())
}

/// Quadratic residue symbol (a/p) for an odd prime p, via the Jacobi
/// reciprocity algorithm.
pub fn legendre_symbol(a: i64, p: u64) -> Result<i8> {
    require_odd_prime(p)?;
    let r = a.rem_euclid(p as i64) as u64;
    Ok(jacobi(r, p))
}

/// Jacobi symbol (a/n) for odd n, a already reduced. No validation.
pub fn jacobi(mut a: u64, mut n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    a %= n;
    let mut sign = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// Least positive quadratic non-residue modulo an odd prime.
pub fn least_nonresidue(p: u64) -> Result<u64> {
    require_odd_prime(p)?;
    Ok((2..p).find(|&n| jacobi(n, p) == -1).expect("odd primes have non-residues"))
}

pub fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

pub fn isqrt(n: u64) -> u64 {
    isqrt_u128(n as u128) as u64
}

/// The squarefree d with n = d·m² and sign(d) = sign(n).
///
/// Refuses (rather than guessing) when a cofactor above `TRIAL_BOUND^3`
/// survives trial division and is not a perfect square.
pub fn squarefree_kernel(n: i128) -> Result<i128> {
    if n == 0 {
        return input("squarefree kernel of 0 is undefined");
    }
    let sign = n.signum();
    let mut rest = n.unsigned_abs();
    let mut kernel: u128 = 1;

    let mut strip = |d: u128, rest: &mut u128| {
        let mut e = 0u32;
        while *rest % d == 0 {
            *rest /= d;
            e += 1;
        }
        if e % 2 == 1 {
            kernel *= d;
        }
    };
    strip(2, &mut rest);
    let mut d: u128 = 3;
    while d <= TRIAL_BOUND as u128 && d * d <= rest {
        if rest % d == 0 {
            strip(d, &mut rest);
        }
        d += 2;
    }

    if rest > 1 {
        let bound = TRIAL_BOUND as u128;
        if d * d > rest {
            // rest is prime
            kernel *= rest;
        } else {
            // every prime factor of rest exceeds the trial bound
            let s = isqrt_u128(rest);
            if s * s == rest {
                // p^2 with p prime, or (pq)^2: contributes nothing either way
            } else if rest / bound / bound < bound {
                // rest < bound^3: p or p*q with p != q, both squarefree
                kernel *= rest;
            } else {
                return Err(Error::IncompleteFactorization(rest.to_string()));
            }
        }
    }
    Ok(sign * kernel as i128)
}

/// All primes up to and including `x`, ascending.
pub fn primes_up_to(x: u64) -> Result<Vec<u64>> {
    if x > PRIME_SIEVE_GUARD {
        return Err(Error::Resource(format!(
            "prime sieve bound {x} exceeds {PRIME_SIEVE_GUARD}"
        )));
    }
    if x < 2 {
        return input(format!("prime sieve bound must be >= 2, got {x}"));
    }
    let n = x as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::with_capacity(estimate_pi(x));
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    Ok(out)
}

fn estimate_pi(x: u64) -> usize {
    let xf = x as f64;
    (1.26 * xf / xf.ln().max(1.0)) as usize + 8
}

/// Primes in `[lo, hi]`, by trial primality (for short ranges far out).
pub fn primes_between(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo..=hi).filter(|&n| is_prime(n))
}
