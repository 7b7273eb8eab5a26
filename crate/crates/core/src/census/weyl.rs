//! Weyl groups of the split classical families, their conjugacy classes,
//! and the maximal-torus data attached to each class.
//!
//! Type A families (GL, SL, PGL) have Weyl group S_n; Sp_{2g} has the
//! hyperoctahedral group of signed permutations of g letters. For a split
//! group Frobenius acts trivially on W, so the F_p-classes of maximal tori
//! are in bijection with ordinary conjugacy classes of W.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::group::{Family, GroupSpec};
use crate::algebra::poly::bareiss_determinant;
use crate::error::{Error, Result};

/// w(e_i) = signs[i] · e_{image[i]}. Plain permutations carry all `+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPermutation {
    pub image: Vec<usize>,
    pub signs: Vec<i8>,
}

/// One cycle of a signed permutation: its length and the product of signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignedCycle {
    pub len: usize,
    pub negative: bool,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            image: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.degree();
        let mut image = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            let j = other.image[i];
            image[i] = self.image[j];
            signs[i] = other.signs[i] * self.signs[j];
        }
        SignedPermutation { image, signs }
    }

    pub fn inverse(&self) -> Self {
        let n = self.degree();
        let mut image = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            image[self.image[i]] = i;
            signs[self.image[i]] = self.signs[i];
        }
        SignedPermutation { image, signs }
    }

    /// Cycles sorted by (length, sign).
    pub fn cycle_type(&self) -> Vec<SignedCycle> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut sign = 1i8;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                sign *= self.signs[i];
                i = self.image[i];
                len += 1;
            }
            out.push(SignedCycle {
                len,
                negative: sign < 0,
            });
        }
        out.sort();
        out
    }

    fn from_cycles(cycles: &[SignedCycle]) -> Self {
        let n: usize = cycles.iter().map(|c| c.len).sum();
        let mut w = SignedPermutation::identity(n);
        let mut start = 0;
        for c in cycles {
            for k in 0..c.len {
                w.image[start + k] = start + (k + 1) % c.len;
            }
            if c.negative {
                w.signs[start + c.len - 1] = -1;
            }
            start += c.len;
        }
        w
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .cycle_type()
            .iter()
            .map(|c| format!("{}{}", c.len, if c.negative { "-" } else { "" }))
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Key identifying the torus class of a regular semisimple element from
/// the factorization of its characteristic polynomial: the irreducible
/// factor degrees, and for Sp also those of the trace polynomial h(y) with
/// χ(x) = x^g h(x + 1/x).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorusKey {
    pub charpoly_degrees: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace_degrees: Option<Vec<usize>>,
}

/// One F_p-conjugacy class of maximal tori.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusClassRecord {
    pub weyl_rep: SignedPermutation,
    pub label: String,
    pub relative_weyl_order: u64,
    pub torus_order: u128,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub torus_regular_count: Option<u128>,
    pub key: TorusKey,
}

/// Partitions of n in non-increasing order, largest first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Centralizer order in W of an element with the given signed cycle type.
fn centralizer_order(family: Family, cycles: &[SignedCycle]) -> u64 {
    let mut groups: std::collections::BTreeMap<SignedCycle, usize> = Default::default();
    for c in cycles {
        *groups.entry(*c).or_default() += 1;
    }
    groups
        .iter()
        .map(|(c, &m)| {
            let per_cycle = match family {
                Family::Sp => 2 * c.len as u64,
                _ => c.len as u64,
            };
            per_cycle.pow(m as u32) * factorial(m)
        })
        .product()
}

/// Predicted torus key for a Weyl class.
pub fn predicted_key(family: Family, cycles: &[SignedCycle]) -> TorusKey {
    match family {
        Family::Sp => {
            let mut cp = Vec::new();
            let mut tr = Vec::new();
            for c in cycles {
                if c.negative {
                    cp.push(2 * c.len);
                } else {
                    cp.push(c.len);
                    cp.push(c.len);
                }
                tr.push(c.len);
            }
            cp.sort_unstable();
            tr.sort_unstable();
            TorusKey {
                charpoly_degrees: cp,
                trace_degrees: Some(tr),
            }
        }
        _ => {
            let mut cp: Vec<usize> = cycles.iter().map(|c| c.len).collect();
            cp.sort_unstable();
            TorusKey {
                charpoly_degrees: cp,
                trace_degrees: None,
            }
        }
    }
}

/// Representatives of the Weyl conjugacy classes, one per signed cycle type.
pub fn weyl_class_representatives(spec: &GroupSpec) -> Vec<SignedPermutation> {
    let deg = spec.weyl_degree();
    match spec.family {
        Family::Sp => {
            let mut out = Vec::new();
            for pos in (0..=deg).rev() {
                for lp in partitions(pos) {
                    for ln in partitions(deg - pos) {
                        let cycles: Vec<SignedCycle> = lp
                            .iter()
                            .map(|&len| SignedCycle { len, negative: false })
                            .chain(ln.iter().map(|&len| SignedCycle { len, negative: true }))
                            .collect();
                        out.push(SignedPermutation::from_cycles(&cycles));
                    }
                }
            }
            out
        }
        _ => partitions(deg)
            .iter()
            .map(|lp| {
                let cycles: Vec<SignedCycle> = lp
                    .iter()
                    .rev()
                    .map(|&len| SignedCycle { len, negative: false })
                    .collect();
                SignedPermutation::from_cycles(&cycles)
            })
            .collect(),
    }
}

/// Integer matrix of w acting on the cocharacter lattice of the split torus
/// (column j is the image of basis vector j).
pub fn cocharacter_action(family: Family, w: &SignedPermutation) -> Vec<Vec<i64>> {
    let n = w.degree();
    match family {
        Family::Gl | Family::Sp => {
            let mut m = vec![vec![0i64; n]; n];
            for j in 0..n {
                m[w.image[j]][j] = w.signs[j] as i64;
            }
            m
        }
        Family::Sl => {
            // basis b_i = e_i - e_{i+1}; v = Σ c_k b_k has c_k = v_0 + ... + v_k
            let r = n - 1;
            let mut m = vec![vec![0i64; r]; r];
            for j in 0..r {
                let mut v = vec![0i64; n];
                v[w.image[j]] += 1;
                v[w.image[j + 1]] -= 1;
                let mut acc = 0;
                for k in 0..r {
                    acc += v[k];
                    m[k][j] = acc;
                }
            }
            m
        }
        Family::Pgl => {
            // Z^n / Z(1,...,1) with basis the images of e_0..e_{n-2}
            let r = n - 1;
            let mut m = vec![vec![0i64; r]; r];
            for j in 0..r {
                let t = w.image[j];
                if t == n - 1 {
                    for row in m.iter_mut() {
                        row[j] = -1;
                    }
                } else {
                    m[t][j] = 1;
                }
            }
            m
        }
    }
}

/// |T_w(F_p)| = |det(p·w - 1)| on the cocharacter lattice.
pub fn torus_order(family: Family, w: &SignedPermutation, p: u64) -> Result<u128> {
    let m = cocharacter_action(family, w);
    let r = m.len();
    let a: Vec<Vec<BigInt>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| BigInt::from(m[i][j]) * BigInt::from(p) - BigInt::from(u8::from(i == j)))
                .collect()
        })
        .collect();
    let det = bareiss_determinant(a);
    if det.is_zero() {
        return Err(Error::Consistency(format!("torus of {w} has no points")));
    }
    det.abs()
        .to_u128()
        .ok_or_else(|| Error::Resource("torus order overflows 128 bits".into()))
}

/// One record per conjugacy class of maximal tori (split case, so twisted
/// classes are ordinary Weyl classes).
pub fn weyl_twisted_classes(spec: &GroupSpec) -> Result<Vec<TorusClassRecord>> {
    spec.validate()?;
    weyl_class_representatives(spec)
        .into_iter()
        .map(|w| {
            let cycles = w.cycle_type();
            Ok(TorusClassRecord {
                label: w.to_string(),
                relative_weyl_order: centralizer_order(spec.family, &cycles),
                torus_order: torus_order(spec.family, &w, spec.p)?,
                torus_regular_count: None,
                key: predicted_key(spec.family, &cycles),
                weyl_rep: w,
            })
        })
        .collect()
}

/// Σ_T 1/|W(G,T)| over the torus classes; equals 1 exactly.
pub fn class_equation(spec: &GroupSpec) -> Result<BigRational> {
    Ok(weyl_twisted_classes(spec)?
        .iter()
        .fold(BigRational::zero(), |acc, r| {
            acc + BigRational::new(1.into(), BigInt::from(r.relative_weyl_order))
        }))
}

/// Order of the absolute Weyl group.
pub fn weyl_order(spec: &GroupSpec) -> u64 {
    let d = spec.weyl_degree();
    match spec.family {
        Family::Sp => factorial(d) << d,
        _ => factorial(d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use std::collections::HashSet;

    fn spec(f: Family, n: usize, p: u64) -> GroupSpec {
        GroupSpec::new(f, n, p).unwrap()
    }

    /// All elements of W by brute force.
    fn all_elements(family: Family, d: usize) -> Vec<SignedPermutation> {
        fn perms(d: usize) -> Vec<Vec<usize>> {
            if d == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(d - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, d - 1);
                    out.push(q);
                }
            }
            out
        }
        let mut out = Vec::new();
        for image in perms(d) {
            let sign_choices = if family == Family::Sp { 1usize << d } else { 1 };
            for mask in 0..sign_choices {
                let signs = (0..d).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                out.push(SignedPermutation {
                    image: image.clone(),
                    signs,
                });
            }
        }
        out
    }

    #[test]
    fn centralizers_match_brute_force_conjugation() {
        for (family, d) in [
            (Family::Gl, 1),
            (Family::Gl, 2),
            (Family::Gl, 3),
            (Family::Gl, 4),
            (Family::Sp, 2),
            (Family::Sp, 3),
        ] {
            let n = if family == Family::Sp { 2 * d } else { d };
            let s = spec(family, n, 5);
            let w_all = all_elements(family, d);
            assert_eq!(w_all.len() as u64, weyl_order(&s));
            let reps = weyl_class_representatives(&s);
            let mut covered = 0u64;
            for rep in &reps {
                let class: HashSet<SignedPermutation> = w_all
                    .iter()
                    .map(|g| g.compose(rep).compose(&g.inverse()))
                    .collect();
                let cent = weyl_order(&s) / class.len() as u64;
                assert_eq!(cent, centralizer_order(family, &rep.cycle_type()), "{rep}");
                covered += class.len() as u64;
            }
            // the classes are distinct and exhaust W
            assert_eq!(covered, weyl_order(&s));
        }
    }

    #[test]
    fn gl2_classes() {
        let recs = weyl_twisted_classes(&spec(Family::Gl, 2, 7)).unwrap();
        assert_eq!(recs.len(), 2);
        let orders: Vec<(u128, u64)> = recs.iter().map(|r| (r.torus_order, r.relative_weyl_order)).collect();
        assert!(orders.contains(&(36, 2)));
        assert!(orders.contains(&(48, 2)));
    }

    #[test]
    fn sp4_classes() {
        let p = 3u128;
        let recs = weyl_twisted_classes(&spec(Family::Sp, 4, 3)).unwrap();
        assert_eq!(recs.len(), 5);
        let mut got: Vec<(u128, u64)> = recs.iter().map(|r| (r.torus_order, r.relative_weyl_order)).collect();
        got.sort();
        let mut want = vec![
            ((p - 1) * (p - 1), 8),
            ((p + 1) * (p + 1), 8),
            (p * p - 1, 4),
            (p * p + 1, 4),
            ((p - 1) * (p + 1), 4),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn gl1_single_class() {
        let recs = weyl_twisted_classes(&spec(Family::Gl, 1, 11)).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].relative_weyl_order, 1);
        assert_eq!(recs[0].torus_order, 10);
    }

    #[test]
    fn torus_order_examples() {
        let id = SignedPermutation::identity(2);
        assert_eq!(torus_order(Family::Gl, &id, 5).unwrap(), 16);
        let swap = SignedPermutation {
            image: vec![1, 0],
            signs: vec![1, 1],
        };
        assert_eq!(torus_order(Family::Gl, &swap, 5).unwrap(), 24);
        let neg2 = SignedPermutation {
            image: vec![1, 0],
            signs: vec![1, -1],
        };
        assert_eq!(torus_order(Family::Sp, &neg2, 3).unwrap(), 10);
    }

    #[test]
    fn type_a_torus_orders_follow_cycle_products() {
        // GL: Π (p^k - 1); SL and PGL: that product over (p - 1)
        for n in 1..=5 {
            for p in [2u64, 3, 7] {
                for w in weyl_class_representatives(&spec(Family::Gl, n, p)) {
                    let prod: u128 = w.cycle_type().iter().map(|c| (p as u128).pow(c.len as u32) - 1).product();
                    assert_eq!(torus_order(Family::Gl, &w, p).unwrap(), prod);
                    assert_eq!(torus_order(Family::Sl, &w, p).unwrap(), prod / (p as u128 - 1));
                    assert_eq!(torus_order(Family::Pgl, &w, p).unwrap(), prod / (p as u128 - 1));
                }
            }
        }
    }

    #[test]
    fn split_torus_order_is_power_of_p_minus_one() {
        for family in [Family::Gl, Family::Sl, Family::Pgl, Family::Sp] {
            for n in [2usize, 4] {
                for p in [3u64, 5, 13] {
                    let s = spec(family, n, p);
                    let id = SignedPermutation::identity(s.weyl_degree());
                    assert_eq!(
                        torus_order(family, &id, p).unwrap(),
                        (p as u128 - 1).pow(s.rank() as u32)
                    );
                }
            }
        }
    }

    #[test]
    fn class_equation_is_one() {
        for p in [2u64, 3, 5, 7, 11, 13, 17] {
            for (f, n) in [
                (Family::Gl, 1),
                (Family::Gl, 2),
                (Family::Gl, 3),
                (Family::Sl, 2),
                (Family::Pgl, 2),
                (Family::Sp, 4),
                (Family::Sp, 6),
            ] {
                assert!(class_equation(&spec(f, n, p)).unwrap().is_one());
            }
        }
    }

    #[test]
    fn partitions_count() {
        let counts: Vec<usize> = (0..8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }
}
