//! Canonical identifiers for Frobenius splitting fields.
//!
//! Quadratic fields are identified exactly by the squarefree d of Q(√d).
//! Higher-degree splitting fields are Galois, hence determined by their
//! set of completely split primes; they are keyed by that set sampled on
//! a fixed list of 64 auxiliary primes. Each bit is the exact answer for
//! its prime, including primes dividing the polynomial discriminant (which
//! are settled by counting ℓ-adic roots), so isomorphic fields always get
//! the same key. Distinct fields collide only if they agree on all 64.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::weil::WeilPolynomial;
use crate::algebra::arith::{is_prime, squarefree_kernel};
use crate::algebra::padic::splits_completely_over_ql;
use crate::algebra::poly::IntPolynomial;
use crate::algebra::polymod::PolyModP;
use crate::error::{input, Error, Result};

pub const FINGERPRINT_LEN: usize = 64;
pub const FINGERPRINT_START: u64 = 101;

/// The first 64 primes ≥ 101, ascending.
pub fn fingerprint_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        (FINGERPRINT_START..)
            .filter(|&n| is_prime(n))
            .take(FINGERPRINT_LEN)
            .collect()
    })
}

/// Serialized as its display string (`quad:-11`, `fp:<hex>`).
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum FieldKey {
    /// Q(√d), d squarefree and ≠ 1.
    Quadratic { d: i64 },
    /// Bit i set iff the i-th auxiliary prime splits completely.
    /// `degree_hint` is the degree of the polynomial the key came from; it
    /// is informational and ignored by comparisons.
    Fingerprint { degree_hint: u8, bits: u64 },
}

impl FieldKey {
    fn rank(&self) -> (u8, i128) {
        match *self {
            FieldKey::Quadratic { d } => (0, d as i128),
            FieldKey::Fingerprint { bits, .. } => (1, bits as i128),
        }
    }

    pub fn is_quadratic(&self) -> bool {
        matches!(self, FieldKey::Quadratic { .. })
    }
}

impl PartialEq for FieldKey {
    fn eq(&self, o: &Self) -> bool {
        self.rank() == o.rank()
    }
}

impl Eq for FieldKey {}

impl Hash for FieldKey {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.rank().hash(h)
    }
}

impl PartialOrd for FieldKey {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for FieldKey {
    fn cmp(&self, o: &Self) -> Ordering {
        self.rank().cmp(&o.rank())
    }
}

impl fmt::Display for FieldKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKey::Quadratic { d } => write!(f, "quad:{d}"),
            FieldKey::Fingerprint { bits, .. } => write!(f, "fp:{bits:016x}"),
        }
    }
}

impl From<FieldKey> for String {
    fn from(k: FieldKey) -> String {
        k.to_string()
    }
}

impl TryFrom<String> for FieldKey {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Parses `quad:<d>` or `fp:<16 hex digits>`.
impl FromStr for FieldKey {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if let Some(d) = s.strip_prefix("quad:") {
            let d: i64 = d.parse().map_err(|_| Error::Input(format!("bad quadratic key '{s}'")))?;
            if d == 1 || squarefree_kernel(d as i128)? != d as i128 {
                return input(format!("'{d}' is not a squarefree integer other than 1"));
            }
            Ok(FieldKey::Quadratic { d })
        } else if let Some(h) = s.strip_prefix("fp:") {
            let bits = u64::from_str_radix(h, 16).map_err(|_| Error::Input(format!("bad fingerprint key '{s}'")))?;
            Ok(FieldKey::Fingerprint { degree_hint: 0, bits })
        } else {
            input(format!("unrecognized field key '{s}' (expected quad:<d> or fp:<hex>)"))
        }
    }
}

/// Fingerprint of the splitting field of a nonzero polynomial of degree ≥ 1.
pub fn fingerprint_of(m: &IntPolynomial) -> Result<FieldKey> {
    if !matches!(m.degree(), Some(d) if d >= 1) {
        return input("fingerprint needs a polynomial of degree >= 1");
    }
    let r = m.radical();
    let r = if r.leading().is_some_and(|c| c < &BigInt::zero()) {
        IntPolynomial::new(r.coeffs().iter().map(|c| -c).collect())
    } else {
        r
    };
    let rdeg = r.degree().unwrap();
    let disc = if rdeg >= 2 { r.discriminant()? } else { BigInt::from(1) };
    let lc = r.leading().unwrap().clone();
    let mut bits = 0u64;
    for (i, &l) in fingerprint_primes().iter().enumerate() {
        let lb = BigInt::from(l);
        let split = if (&disc % &lb).is_zero() || (&lc % &lb).is_zero() {
            splits_completely_over_ql(&r, l)
        } else {
            PolyModP::from_int(&r, l).splits_completely()
        };
        if split {
            bits |= 1 << i;
        }
    }
    Ok(FieldKey::Fingerprint {
        degree_hint: rdeg.min(u8::MAX as usize) as u8,
        bits,
    })
}

fn quadratic_key(disc: &BigInt) -> Result<FieldKey> {
    let n = disc
        .to_i128()
        .ok_or_else(|| Error::Resource(format!("discriminant {disc} exceeds 128 bits")))?;
    if n == 0 {
        return input("degenerate quadratic: zero discriminant");
    }
    let d = squarefree_kernel(n)?;
    if d == 1 {
        return Err(Error::Unsupported(
            "quadratic polynomial splits over Q; its splitting field is Q".into(),
        ));
    }
    Ok(FieldKey::Quadratic {
        d: i64::try_from(d).map_err(|_| Error::Resource(format!("kernel {d} exceeds 64 bits")))?,
    })
}

/// Key of the splitting field of a Frobenius polynomial: exact quadratic
/// for genus 1, fingerprint otherwise.
pub fn frobenius_field_key(w: &WeilPolynomial) -> Result<FieldKey> {
    match w.genus {
        1 => {
            let a = BigInt::from(w.a1());
            let q = BigInt::from(w.q);
            let disc = &a * &a - BigInt::from(4) * q;
            if disc.is_zero() {
                return Err(Error::Unsupported(format!(
                    "a² = 4q at q = {}: repeated Frobenius eigenvalue",
                    w.q
                )));
            }
            quadratic_key(&disc)
        }
        _ => fingerprint_of(&w.coefficients),
    }
}

/// Key of the splitting field of a monic target polynomial m.
pub fn field_key_of_target(m: &IntPolynomial) -> Result<FieldKey> {
    match m.degree() {
        None | Some(0) => input("target polynomial must have positive degree"),
        Some(1) => Err(Error::Unsupported(
            "Frobenius fields of non-CM abelian varieties here are never Q at good ordinary primes; \
             comparison with Q unsupported"
                .into(),
        )),
        Some(d) => {
            if !m.is_monic() {
                return input("target polynomial must be monic");
            }
            if d == 2 {
                let b = m.coeff(1);
                let c = m.coeff(0);
                quadratic_key(&(&b * &b - BigInt::from(4) * c))
            } else {
                fingerprint_of(m)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::polymod::factor_degrees_mod;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn canonical_list() {
        let l = fingerprint_primes();
        assert_eq!(l.len(), 64);
        assert_eq!(l[0], 101);
        assert_eq!(l[1], 103);
        assert!(l.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn elliptic_keys() {
        let k = |a, p| frobenius_field_key(&WeilPolynomial::elliptic(a, p)).unwrap();
        assert_eq!(k(-3, 5), FieldKey::Quadratic { d: -11 });
        assert_eq!(k(2, 5), FieldKey::Quadratic { d: -1 });
        assert_eq!(k(0, 7), FieldKey::Quadratic { d: -7 });
    }

    #[test]
    fn target_keys() {
        assert_eq!(field_key_of_target(&poly(&[1, 0, 1])).unwrap(), FieldKey::Quadratic { d: -1 });
        assert_eq!(field_key_of_target(&poly(&[44, 0, 1])).unwrap(), FieldKey::Quadratic { d: -11 });
        assert!(matches!(field_key_of_target(&poly(&[-3, 1])), Err(Error::Unsupported(_))));
        assert!(field_key_of_target(&poly(&[1, 0, 2])).is_err());
        let FieldKey::Fingerprint { bits, .. } = field_key_of_target(&poly(&[1, 0, 0, 0, 1])).unwrap() else {
            panic!("quartic target should fingerprint");
        };
        for (i, &l) in fingerprint_primes().iter().enumerate() {
            let degs = factor_degrees_mod(&poly(&[1, 0, 0, 0, 1]), l).unwrap();
            assert_eq!(bits >> i & 1 == 1, degs.iter().all(|&d| d == 1));
            assert_eq!(bits >> i & 1 == 1, l % 8 == 1);
        }
    }

    #[test]
    fn fingerprints_separate_gaussian_and_root_minus_two() {
        let i = fingerprint_of(&poly(&[1, 0, 1])).unwrap();
        let m2 = fingerprint_of(&poly(&[2, 0, 1])).unwrap();
        assert_ne!(i, m2);
    }

    #[test]
    fn fingerprint_is_a_field_invariant() {
        // x⁴ + 1 and (x² + 1)(x² − 2) both have splitting field Q(ζ₈)
        let a = fingerprint_of(&poly(&[1, 0, 0, 0, 1])).unwrap();
        let b = fingerprint_of(&poly(&[1, 0, 1]).mul(&poly(&[-2, 0, 1]))).unwrap();
        assert_eq!(a, b);
        // T → −T leaves the splitting field unchanged
        let w = WeilPolynomial::genus2(3, 5, 7);
        let flipped = w.coefficients.negate_variable();
        assert_eq!(fingerprint_of(&w.coefficients).unwrap(), fingerprint_of(&flipped).unwrap());
        // scaling the generator by an auxiliary prime (an index divisor)
        // does not move any bit: x² + 101²
        assert_eq!(
            fingerprint_of(&poly(&[1, 0, 1])).unwrap(),
            fingerprint_of(&poly(&[101 * 101, 0, 1])).unwrap()
        );
        // repeated factors use the radical
        let sq = poly(&[1, 0, 1]).mul(&poly(&[1, 0, 1]));
        assert_eq!(fingerprint_of(&sq).unwrap(), fingerprint_of(&poly(&[1, 0, 1])).unwrap());
    }

    #[test]
    fn display_round_trip() {
        for k in [
            FieldKey::Quadratic { d: -11 },
            fingerprint_of(&poly(&[1, 0, 0, 0, 1])).unwrap(),
        ] {
            assert_eq!(k.to_string().parse::<FieldKey>().unwrap(), k);
        }
        assert!("quad:4".parse::<FieldKey>().is_err());
        assert!("cubic:1".parse::<FieldKey>().is_err());
    }
}
