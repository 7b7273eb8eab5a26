//! Explicit models of the maximal tori T_w(F_p) and of the regular
//! elements inside them, used to fill `torus_regular_count`.
//!
//! A positive k-cycle contributes a factor F_{p^k}^×; for Sp it acts with
//! eigenvalues x and x^{-1}. A negative k-cycle (Sp only) contributes the
//! norm-one subgroup {x ∈ F_{p^{2k}} : x^{p^k + 1} = 1}. SL cuts out
//! det = 1 and PGL is the GL torus modulo scalars.

use super::group::{Family, GroupSpec};
use super::weyl::{SignedCycle, TorusClassRecord, TorusKey};
use crate::algebra::field::GaloisField;
use crate::algebra::matrix::charpoly_mod;
use crate::algebra::polymod::PolyModP;
use crate::error::{Error, Result};

/// Largest torus the brute-force model will walk.
pub const TORUS_GUARD: u128 = 5_000_000;

/// Trace polynomial h with χ(x) = x^g · h(x + 1/x), for a palindromic χ of
/// degree 2g over F_p.
pub fn trace_polynomial(chi: &[u64], p: u64) -> PolyModP {
    let g = (chi.len() - 1) / 2;
    // Dickson polynomials V_0 = 2, V_1 = y, V_k = y V_{k-1} - V_{k-2}
    let y = PolyModP::x(p);
    let mut v: Vec<PolyModP> = vec![PolyModP::new(p, vec![2 % p]), y.clone()];
    for k in 2..=g {
        let next = y.mul(&v[k - 1]).sub(&v[k - 2]);
        v.push(next);
    }
    let mut h = PolyModP::new(p, vec![chi[g] % p]);
    for k in 1..=g {
        h = h.add(&v[k].scale(chi[g + k]));
    }
    h
}

/// Torus key of an element with characteristic polynomial `chi`, or `None`
/// when `chi` is not squarefree (element not regular semisimple).
pub fn key_of_charpoly(family: Family, chi: &[u64], p: u64) -> Option<TorusKey> {
    let f = PolyModP::new(p, chi.to_vec());
    if !f.is_squarefree() {
        return None;
    }
    let trace_degrees = (family == Family::Sp).then(|| trace_polynomial(chi, p).distinct_degree_degrees());
    Some(TorusKey {
        charpoly_degrees: f.distinct_degree_degrees(),
        trace_degrees,
    })
}

/// One point of a torus factor: its contribution to the characteristic
/// polynomial and to the determinant.
struct FactorPoint {
    charpoly: PolyModP,
    det: u64,
}

fn det_from_charpoly(cp: &[u64], p: u64) -> u64 {
    let k = cp.len() - 1;
    if k % 2 == 0 {
        cp[0]
    } else {
        (p - cp[0]) % p
    }
}

fn factor_points(family: Family, cycle: SignedCycle, p: u64) -> Result<Vec<FactorPoint>> {
    let ext = if cycle.negative { 2 * cycle.len } else { cycle.len };
    let field = GaloisField::new(p, ext)?;
    let q_half = (p as u128).pow(cycle.len as u32);
    let mut out = Vec::new();
    for idx in 1..field.order() {
        let x = field.element(idx);
        if cycle.negative && field.pow(&x, q_half + 1) != field.one() {
            continue;
        }
        let cp = charpoly_mod(field.multiplication_matrix(&x), p);
        let det = det_from_charpoly(&cp, p);
        let mut charpoly = PolyModP::new(p, cp);
        if family == Family::Sp && !cycle.negative {
            let xi = field.inverse(&x).expect("unit");
            let cpi = charpoly_mod(field.multiplication_matrix(&xi), p);
            charpoly = charpoly.mul(&PolyModP::new(p, cpi));
        }
        out.push(FactorPoint { charpoly, det });
    }
    Ok(out)
}

/// Brute-force (|T_w(F_p)|, |T_w(F_p)^reg|) from the explicit torus model.
pub fn torus_counts(spec: &GroupSpec, rec: &TorusClassRecord) -> Result<(u128, u128)> {
    let p = spec.p;
    let cycles = rec.weyl_rep.cycle_type();
    let factors: Vec<Vec<FactorPoint>> = cycles
        .iter()
        .map(|&c| factor_points(spec.family, c, p))
        .collect::<Result<_>>()?;
    let size: u128 = factors.iter().map(|f| f.len() as u128).product();
    if size > TORUS_GUARD {
        return Err(Error::Resource(format!(
            "torus {} of {spec} has {size} points, above the {TORUS_GUARD} guard",
            rec.label
        )));
    }
    let mut total = 0u128;
    let mut regular = 0u128;
    let mut idx = vec![0usize; factors.len()];
    'outer: loop {
        let mut cp = PolyModP::new(p, vec![1]);
        let mut det = 1u64;
        for (f, &i) in factors.iter().zip(&idx) {
            cp = cp.mul(&f[i].charpoly);
            det = det * f[i].det % p;
        }
        if spec.family != Family::Sl || det == 1 {
            total += 1;
            if cp.is_squarefree() {
                regular += 1;
            }
        }
        for pos in 0..idx.len() {
            idx[pos] += 1;
            if idx[pos] < factors[pos].len() {
                continue 'outer;
            }
            idx[pos] = 0;
        }
        break;
    }
    if spec.family == Family::Pgl {
        total /= p as u128 - 1;
        regular /= p as u128 - 1;
    }
    Ok((total, regular))
}

/// Fills `torus_regular_count` on every record, checking the model's torus
/// size against the determinant formula.
pub fn attach_regular_counts(spec: &GroupSpec, records: &mut [TorusClassRecord]) -> Result<()> {
    for rec in records.iter_mut() {
        let (total, regular) = torus_counts(spec, rec)?;
        if total != rec.torus_order {
            return Err(Error::Consistency(format!(
                "torus {} of {spec}: model has {total} points, formula gives {}",
                rec.label, rec.torus_order
            )));
        }
        rec.torus_regular_count = Some(regular);
    }
    Ok(())
}
