//! Exhaustive enumeration of small matrix groups over F_p, with per-element
//! order and characteristic polynomial cached for the volume computations.

use std::collections::HashMap;

use super::group::{Family, GroupSpec};
use crate::algebra::matrix::{SmallMat, MAX_DIM};
use crate::error::{input, Error, Result};

/// Environment variable that raises the enumeration guard to the given
/// group order and lifts the prime limit on the PGL_2 coset checks.
pub const GUARD_OVERRIDE_ENV: &str = "FROBSCOPE_GUARD_OVERRIDE";

pub const DEFAULT_MAX_ORDER: u128 = 1_000_000;
pub const DEFAULT_MAX_COSET_PRIME: u64 = 13;

/// Size limits for brute-force work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    pub max_order: u128,
    pub max_coset_prime: Option<u64>,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            max_order: DEFAULT_MAX_ORDER,
            max_coset_prime: Some(DEFAULT_MAX_COSET_PRIME),
        }
    }
}

impl Guard {
    /// Default guard, or the override from [`GUARD_OVERRIDE_ENV`] when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(GUARD_OVERRIDE_ENV) {
            Ok(v) => {
                let max_order = v.trim().parse::<u128>().map_err(|_| {
                    Error::Input(format!("{GUARD_OVERRIDE_ENV} must be a positive integer, got '{v}'"))
                })?;
                Ok(Guard {
                    max_order,
                    max_coset_prime: None,
                })
            }
            Err(_) => Ok(Guard::default()),
        }
    }

    pub fn check_order(&self, spec: &GroupSpec) -> Result<u128> {
        let order = spec.order()?;
        if order > self.max_order {
            return Err(Error::Resource(format!(
                "{spec} has order {order}, above the enumeration guard {}",
                self.max_order
            )));
        }
        if spec.n > MAX_DIM {
            return input(format!("enumeration supports matrices up to {MAX_DIM}x{MAX_DIM}"));
        }
        Ok(order)
    }

    pub fn check_coset_prime(&self, p: u64) -> Result<()> {
        match self.max_coset_prime {
            Some(max) if p > max => Err(Error::Resource(format!(
                "PGL_2(F_{p}) enumeration is limited to p <= {max}"
            ))),
            _ => Ok(()),
        }
    }
}

/// Every element of G(F_p). For PGL the stored matrix is the lift whose
/// first nonzero entry (row-major) is 1.
#[derive(Clone, Debug)]
pub struct GroupTable {
    pub spec: GroupSpec,
    pub elements: Vec<SmallMat>,
    /// Order in G (for PGL: order modulo scalars).
    pub orders: Vec<u32>,
    /// Characteristic polynomial of the stored matrix, monic, lowest first.
    pub charpolys: Vec<Vec<u64>>,
    index: HashMap<u64, usize>,
}

impl GroupTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn p(&self) -> u32 {
        self.spec.p as u32
    }

    /// Canonical representative of a matrix in G (scalar-normalized for PGL).
    pub fn normalize(&self, m: &SmallMat) -> SmallMat {
        if self.spec.family == Family::Pgl {
            pgl_normalize(m, self.p())
        } else {
            *m
        }
    }

    /// Position of `m` (after normalization), if it lies in the table.
    pub fn position(&self, m: &SmallMat) -> Option<usize> {
        self.index.get(&self.normalize(m).encode(self.p())).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> SmallMat {
        self.normalize(&self.elements[a].mul(&self.elements[b], self.p()))
    }

    /// Indices of the upper-triangular elements: the standard Borel.
    pub fn standard_borel(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.elements[i].is_upper_triangular())
            .collect()
    }

    pub fn is_semisimple(&self, i: usize) -> bool {
        self.orders[i] as u64 % self.spec.p != 0
    }
}

fn pgl_normalize(m: &SmallMat, p: u32) -> SmallMat {
    let n = m.dim();
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j);
            if v != 0 {
                let inv = crate::algebra::arith::inv_mod_prime(v as u64, p as u64).unwrap();
                return m.scale(inv as u32, p);
            }
        }
    }
    *m
}

fn is_pgl_normalized(m: &SmallMat) -> bool {
    let n = m.dim();
    (0..n * n)
        .map(|k| m.get(k / n, k % n))
        .find(|&v| v != 0)
        == Some(1)
}

/// Symplectic form with J[i][n-1-i] = 1 for i < n/2 and -1 otherwise, so
/// that the upper-triangular symplectic matrices form a Borel subgroup.
pub fn symplectic_form(n: usize, p: u32) -> SmallMat {
    let mut j = SmallMat::zero(n);
    for i in 0..n {
        j.set(i, n - 1 - i, if i < n / 2 { 1 } else { p - 1 });
    }
    j
}

fn omega(u: &[u32], v: &[u32], p: u32) -> u32 {
    let n = u.len();
    let mut acc = 0u64;
    for i in 0..n {
        let k = n - 1 - i;
        let t = u[i] as u64 * v[k] as u64 % p as u64;
        acc += if i < n / 2 { t } else { p as u64 - t };
    }
    (acc % p as u64) as u32
}

fn symplectic_elements(n: usize, p: u32) -> Vec<SmallMat> {
    let j = symplectic_form(n, p);
    let vectors: Vec<Vec<u32>> = (0..(p as u64).pow(n as u32))
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let d = (code % p as u64) as u32;
                    code /= p as u64;
                    d
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut cols: Vec<usize> = Vec::with_capacity(n);
    fn go(
        n: usize,
        p: u32,
        j: &SmallMat,
        vectors: &[Vec<u32>],
        cols: &mut Vec<usize>,
        out: &mut Vec<SmallMat>,
    ) {
        let c = cols.len();
        if c == n {
            let mut m = SmallMat::zero(n);
            for (col, &vi) in cols.iter().enumerate() {
                for row in 0..n {
                    m.set(row, col, vectors[vi][row]);
                }
            }
            out.push(m);
            return;
        }
        for (vi, v) in vectors.iter().enumerate() {
            if cols
                .iter()
                .enumerate()
                .all(|(i, &ui)| omega(&vectors[ui], v, p) == j.get(i, c))
            {
                cols.push(vi);
                go(n, p, j, vectors, cols, out);
                cols.pop();
            }
        }
    }
    go(n, p, &j, &vectors, &mut cols, &mut out);
    out
}

fn element_order(m: &SmallMat, p: u32, modulo_scalars: bool) -> u32 {
    let mut acc = *m;
    let mut k = 1u32;
    loop {
        let done = if modulo_scalars {
            acc.is_scalar()
        } else {
            acc == SmallMat::identity(m.dim())
        };
        if done {
            return k;
        }
        acc = acc.mul(m, p);
        k += 1;
    }
}

/// Lists every element of G(F_p) subject to `guard`.
pub fn enumerate_group(spec: &GroupSpec, guard: &Guard) -> Result<GroupTable> {
    spec.validate()?;
    let order = guard.check_order(spec)?;
    let n = spec.n;
    let p = spec.p as u32;
    let elements: Vec<SmallMat> = match spec.family {
        Family::Sp => symplectic_elements(n, p),
        family => {
            let codes = (p as u64).pow((n * n) as u32);
            (0..codes)
                .map(|c| SmallMat::decode(n, p, c))
                .filter(|m| match family {
                    Family::Gl => m.det(p) != 0,
                    Family::Sl => m.det(p) == 1,
                    Family::Pgl => is_pgl_normalized(m) && m.det(p) != 0,
                    Family::Sp => unreachable!(),
                })
                .collect()
        }
    };
    if elements.len() as u128 != order {
        return Err(Error::Consistency(format!(
            "enumerated {} elements of {spec}, order formula gives {order}",
            elements.len()
        )));
    }
    let modulo_scalars = spec.family == Family::Pgl;
    let orders = elements.iter().map(|m| element_order(m, p, modulo_scalars)).collect();
    let charpolys = elements.iter().map(|m| m.charpoly(p)).collect();
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, m)| (m.encode(p), i))
        .collect();
    Ok(GroupTable {
        spec: *spec,
        elements,
        orders,
        charpolys,
        index,
    })
}
