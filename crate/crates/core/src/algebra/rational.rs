//! JSON form of exact rationals: `{"num": "5", "den": "8"}`. Input also
//! accepts the strings `"5/8"` and `"3"` and plain integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: String,
    den: String,
}

impl RationalRepr {
    fn from_ratio(r: &BigRational) -> Self {
        RationalRepr {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }

    fn into_ratio(self) -> Result<BigRational, String> {
        let num: BigInt = self.num.parse().map_err(|e| format!("bad numerator: {e}"))?;
        let den: BigInt = self.den.parse().map_err(|e| format!("bad denominator: {e}"))?;
        if den == BigInt::from(0) {
            return Err("zero denominator".into());
        }
        Ok(BigRational::new(num, den))
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RationalInput {
    Repr(RationalRepr),
    Text(String),
    Int(i64),
}

impl RationalInput {
    fn into_ratio(self) -> Result<BigRational, String> {
        match self {
            RationalInput::Repr(r) => r.into_ratio(),
            RationalInput::Int(n) => Ok(BigRational::from_integer(n.into())),
            RationalInput::Text(t) => {
                let (num, den) = t.split_once('/').unwrap_or((&t, "1"));
                RationalRepr {
                    num: num.trim().to_string(),
                    den: den.trim().to_string(),
                }
                .into_ratio()
            }
        }
    }
}

pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    RationalRepr::from_ratio(r).serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
    RationalInput::deserialize(d)?.into_ratio().map_err(D::Error::custom)
}

/// `Vec<BigRational>` in the same representation.
pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        let reprs: Vec<RationalRepr> = v.iter().map(RationalRepr::from_ratio).collect();
        reprs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        Vec::<RationalInput>::deserialize(d)?
            .into_iter()
            .map(|r| r.into_ratio().map_err(D::Error::custom))
            .collect()
    }
}

/// `Option<Vec<BigRational>>` in the same representation.
pub mod opt_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<Vec<BigRational>>, s: S) -> Result<S::Ok, S::Error> {
        let reprs: Option<Vec<RationalRepr>> =
            v.as_ref().map(|v| v.iter().map(RationalRepr::from_ratio).collect());
        reprs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Option<Vec<BigRational>>, D::Error> {
        match Option::<Vec<RationalInput>>::deserialize(d)? {
            None => Ok(None),
            Some(v) => v
                .into_iter()
                .map(|r| r.into_ratio().map_err(D::Error::custom))
                .collect::<Result<Vec<_>, _>>()
                .map(Some),
        }
    }
}

/// `BTreeMap<u64, BigRational>`, e.g. per-prime densities keyed by prime.
pub mod map {
    use super::*;
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(m: &BTreeMap<u64, BigRational>, s: S) -> Result<S::Ok, S::Error> {
        let reprs: BTreeMap<u64, RationalRepr> = m.iter().map(|(k, v)| (*k, RationalRepr::from_ratio(v))).collect();
        reprs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u64, BigRational>, D::Error> {
        // keys arrive as strings once buffered (e.g. under #[serde(flatten)])
        BTreeMap::<String, RationalInput>::deserialize(d)?
            .into_iter()
            .map(|(k, v)| {
                let key = k.trim().parse::<u64>().map_err(|_| D::Error::custom(format!("bad key '{k}'")))?;
                Ok((key, v.into_ratio().map_err(D::Error::custom)?))
            })
            .collect()
    }
}
