//! Exact volumes of regular-semisimple classes and of the bounding set,
//! by exhaustive enumeration, next to the torus-class formula predictions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::enumerate::{enumerate_group, GroupTable, Guard};
use super::group::{Family, GroupSpec};
use super::torus::{attach_regular_counts, key_of_charpoly};
use super::weyl::{weyl_twisted_classes, TorusClassRecord, TorusKey};
use crate::algebra::arith::legendre_symbol;
use crate::error::{Error, Result};

fn ratio(a: u128, b: u128) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// One torus class with its brute-force and predicted class volumes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TorusVolume {
    pub record: TorusClassRecord,
    /// Regular semisimple elements whose characteristic polynomial has the
    /// factorization type of this class.
    pub element_count: u128,
    /// (1/|W(G,T)|)·(|G|/|T|)·|T^reg|.
    #[serde(with = "crate::algebra::rational")]
    pub predicted_count: BigRational,
    /// element_count / |G|.
    #[serde(with = "crate::algebra::rational")]
    pub volume: BigRational,
}

impl TorusVolume {
    pub fn formula_agrees(&self) -> bool {
        self.predicted_count == BigRational::from_integer(BigInt::from(self.element_count))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VolumeReport {
    pub group: GroupSpec,
    pub group_order: u128,
    pub borel_order: u128,
    pub per_torus: Vec<TorusVolume>,
    #[serde(with = "crate::algebra::rational")]
    pub semisimple_volume: BigRational,
    #[serde(with = "crate::algebra::rational")]
    pub regular_volume: BigRational,
    #[serde(with = "crate::algebra::rational")]
    pub bounding_volume: BigRational,
    /// |ℬ ∩ gI|/|I| for the cosets of I = image of SL_2 in PGL_2; the first
    /// entry is I itself.
    #[serde(with = "crate::algebra::rational::opt_vec", skip_serializing_if = "Option::is_none", default)]
    pub per_coset: Option<Vec<BigRational>>,
    /// Abelian groups are their own Borel; the 3/4 bound does not apply.
    pub abelian: bool,
}

impl VolumeReport {
    /// 1 - vol(G(F_p)^reg).
    pub fn residual(&self) -> BigRational {
        BigRational::from_integer(1.into()) - &self.regular_volume
    }

    pub fn formula_agrees(&self) -> bool {
        self.per_torus.iter().all(TorusVolume::formula_agrees)
    }
}

/// Marks the union of the Borel conjugates g B g^{-1}. Coset
/// representatives of G/B are collected greedily by marking each g·B.
fn bounding_set(table: &GroupTable) -> Result<Vec<bool>> {
    let n = table.len();
    let borel = table.standard_borel();
    let p = table.p();
    let pos = |m| {
        table
            .position(&m)
            .ok_or_else(|| Error::Consistency("product left the group".into()))
    };
    let mut covered = vec![false; n];
    let mut reps = Vec::new();
    for g in 0..n {
        if covered[g] {
            continue;
        }
        reps.push(g);
        for &b in &borel {
            covered[pos(table.mul(g, b))?] = true;
        }
    }
    if reps.len() * borel.len() != n {
        return Err(Error::Consistency(format!(
            "{} Borel cosets of size {} do not tile a group of order {n}",
            reps.len(),
            borel.len()
        )));
    }
    let mut inside = vec![false; n];
    for &g in &reps {
        let gm = table.elements[g];
        let ginv = gm.inverse(p).expect("group element is invertible");
        for &b in &borel {
            let x = gm.mul(&table.elements[b], p).mul(&ginv, p);
            inside[pos(x)?] = true;
        }
    }
    Ok(inside)
}

/// Volume report from an already enumerated group.
pub fn volume_report_from_table(table: &GroupTable) -> Result<VolumeReport> {
    let spec = table.spec;
    let p = spec.p;
    let order = table.len() as u128;
    let mut records = weyl_twisted_classes(&spec)?;
    attach_regular_counts(&spec, &mut records)?;

    let mut semisimple = 0u128;
    let mut by_key: BTreeMap<TorusKey, u128> = BTreeMap::new();
    for i in 0..table.len() {
        if !table.is_semisimple(i) {
            continue;
        }
        semisimple += 1;
        if let Some(key) = key_of_charpoly(spec.family, &table.charpolys[i], p) {
            *by_key.entry(key).or_default() += 1;
        }
    }
    if let Some(stray) = by_key.keys().find(|k| !records.iter().any(|r| &r.key == *k)) {
        return Err(Error::Consistency(format!(
            "regular elements of {spec} with factorization type {stray:?} match no torus class"
        )));
    }
    let regular: u128 = by_key.values().sum();

    let per_torus = records
        .into_iter()
        .map(|record| {
            let element_count = by_key.get(&record.key).copied().unwrap_or(0);
            let reg = record.torus_regular_count.unwrap_or(0);
            let predicted_count = BigRational::new(
                BigInt::from(order) * BigInt::from(reg),
                BigInt::from(record.relative_weyl_order) * BigInt::from(record.torus_order),
            );
            TorusVolume {
                volume: ratio(element_count, order),
                record,
                element_count,
                predicted_count,
            }
        })
        .collect();

    let inside = bounding_set(table)?;
    let bounding = inside.iter().filter(|&&b| b).count() as u128;

    let per_coset = if spec.family == Family::Pgl && spec.n == 2 && p > 2 {
        let mut counts = [0u128; 2];
        let mut sizes = [0u128; 2];
        for (i, m) in table.elements.iter().enumerate() {
            let det = m.det(table.p()) as i64;
            let c = usize::from(legendre_symbol(det, p)? != 1);
            sizes[c] += 1;
            if inside[i] {
                counts[c] += 1;
            }
        }
        Some(vec![ratio(counts[0], sizes[0]), ratio(counts[1], sizes[0])])
    } else {
        None
    };

    Ok(VolumeReport {
        group: spec,
        group_order: order,
        borel_order: spec.borel_order()?,
        per_torus,
        semisimple_volume: ratio(semisimple, order),
        regular_volume: ratio(regular, order),
        bounding_volume: ratio(bounding, order),
        per_coset,
        abelian: spec.is_abelian(),
    })
}

pub fn volume_report(spec: &GroupSpec, guard: &Guard) -> Result<VolumeReport> {
    volume_report_from_table(&enumerate_group(spec, guard)?)
}

/// Volume report for PGL_2(F_p) with the two cosets of the image of SL_2.
pub fn coset_volume_report(p: u64, guard: &Guard) -> Result<VolumeReport> {
    guard.check_coset_prime(p)?;
    let spec = GroupSpec::new(Family::Pgl, 2, p)?;
    if p == 2 {
        return Err(Error::Input("the image of SL_2 has index 2 only for odd p".into()));
    }
    volume_report(&spec, guard)
}

/// (|SL_2(F_p)|, |PGL_2(F_p)|, equal?) by enumeration.
pub fn isogeny_count_check(p: u64, guard: &Guard) -> Result<(u128, u128, bool)> {
    guard.check_coset_prime(p)?;
    let sl = enumerate_group(&GroupSpec::new(Family::Sl, 2, p)?, guard)?.len() as u128;
    let pgl = enumerate_group(&GroupSpec::new(Family::Pgl, 2, p)?, guard)?.len() as u128;
    Ok((sl, pgl, sl == pgl))
}

/// N_p = |G| · |B|^{-1/2}.
pub fn np_value(group_order: u128, borel_order: u128) -> Result<f64> {
    if group_order == 0 || borel_order == 0 {
        return Err(Error::Input("group and Borel orders must be positive".into()));
    }
    Ok(group_order as f64 / (borel_order as f64).sqrt())
}
