//! Acceptance run: one PASS/FAIL line per criterion, in order. Exits
//! nonzero if any criterion fails.

use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use num_bigint::BigInt;

use frobscope::algebra::{legendre_symbol, primes_up_to};
use frobscope::census::{
    class_equation, coset_volume_report, enumerate_group, isogeny_count_check, volume_report, weyl_twisted_classes,
    Family, GroupSpec, Guard,
};
use frobscope::frobenius::{ec_trace, field_key_of_target, genus2_lpoly, scan, CurveSpec, FieldKey};
use frobscope::sieve::{
    closed_form_error, exact_error_sum, exponent_report, grid_optimal_beta, selberg_bound, ErrorModel,
    SieveConfig, EXACT_PAIR_LIMIT,
};
use frobscope::Result;

const SMALL_PRIMES: [u64; 7] = [2, 3, 5, 7, 11, 13, 17];
const ODD_TO_13: [u64; 5] = [3, 5, 7, 11, 13];
/// Bound on p·(1 − vol(G^reg)). Over the brute-forced instances the largest
/// value is 9/4.
const RESIDUAL_CONSTANT: u64 = 4;
const NON_CM_THRESHOLD: f64 = 0.05;
const SCAN_WORKERS: usize = 8;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        pass,
        detail: detail.into(),
    })
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn spec(f: Family, n: usize, p: u64) -> GroupSpec {
    GroupSpec::new(f, n, p).expect("valid group")
}

fn c1_class_equation() -> Result<Outcome> {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut count = 0;
    for (f, n) in [(Family::Gl, 1), (Family::Gl, 2), (Family::Gl, 3), (Family::Sl, 2), (Family::Sp, 4)] {
        for p in SMALL_PRIMES {
            let s = spec(f, n, p);
            let sum = class_equation(&s)?;
            // independent of class_equation's own summation
            let direct: BigRational = weyl_twisted_classes(&s)?
                .iter()
                .map(|c| rat(1, c.relative_weyl_order as i64))
                .sum();
            if !sum.is_one() || !direct.is_one() {
                bad.push(format!("{s}: {sum}"));
            }
            count += 1;
        }
    }
    let t = start.elapsed();
    outcome(
        bad.is_empty() && t < Duration::from_secs(1),
        format!("{count} groups sum to exactly 1 in {t:.2?}{}", fails(&bad)),
    )
}

fn fails(bad: &[String]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!("; failures: {}", bad.join(", "))
    }
}

fn c2_formula_oracle() -> Result<Outcome> {
    let start = Instant::now();
    let guard = Guard::default();
    let mut bad = Vec::new();
    let mut checked = 0;
    for f in [Family::Gl, Family::Sl] {
        for p in [3, 5, 7, 11] {
            let s = spec(f, 2, p);
            let r = volume_report(&s, &guard)?;
            let order = r.group_order;
            for t in &r.per_torus {
                let rec = &t.record;
                let treg = rec.torus_regular_count.expect("regular count attached");
                // (1/|W(G,T)|)·(|G|/|T|)·|T^reg| in exact arithmetic
                let formula = BigRational::new(BigInt::from(order) * BigInt::from(treg), BigInt::from(rec.torus_order))
                    / BigRational::from_integer(BigInt::from(rec.relative_weyl_order));
                if formula != BigRational::from_integer(BigInt::from(t.element_count)) {
                    bad.push(format!("{s} {}: {} vs {formula}", rec.label, t.element_count));
                }
                checked += 1;
            }
            if r.per_torus.len() != 2 {
                bad.push(format!("{s}: {} torus classes", r.per_torus.len()));
            }
        }
    }
    let t = start.elapsed();
    outcome(
        bad.is_empty() && t < Duration::from_secs(30),
        format!("{checked} torus classes match the class-volume formula in {t:.2?}{}", fails(&bad)),
    )
}

fn c3_bounding_set() -> Result<Outcome> {
    let start = Instant::now();
    let guard = Guard::default();
    let cap = rat(3, 4);
    let mut bad = Vec::new();
    let mut worst = (rat(0, 1), String::new());
    let mut specs: Vec<GroupSpec> = Vec::new();
    for f in [Family::Gl, Family::Sl, Family::Pgl] {
        specs.extend(ODD_TO_13.iter().map(|&p| spec(f, 2, p)));
    }
    specs.push(spec(Family::Sp, 4, 3));
    let mut gl2_3 = None;
    for s in &specs {
        let r = volume_report(s, &guard)?;
        if r.bounding_volume >= cap {
            bad.push(format!("{s} = {}", r.bounding_volume));
        }
        if r.bounding_volume > worst.0 {
            worst = (r.bounding_volume.clone(), s.to_string());
        }
        if s.family == Family::Gl && s.p == 3 {
            gl2_3 = Some(r.bounding_volume.clone());
        }
    }
    let gl_ok = gl2_3 == Some(rat(5, 8));
    let t = start.elapsed();
    outcome(
        bad.is_empty() && gl_ok && t < Duration::from_secs(300),
        format!(
            "{} groups, max vol(B-set) {} at {}, GL_2(F_3) = {}, {t:.2?}{}",
            specs.len(),
            worst.0,
            worst.1,
            gl2_3.map(|v| v.to_string()).unwrap_or_default(),
            fails(&bad)
        ),
    )
}

fn c4_residual() -> Result<Outcome> {
    let guard = Guard::default();
    let mut bad = Vec::new();
    let mut worst = 0.0f64;
    for f in [Family::Gl, Family::Sl, Family::Pgl] {
        for p in ODD_TO_13 {
            let s = spec(f, 2, p);
            let r = volume_report(&s, &guard)?;
            let scaled = BigRational::from_integer(p.into()) * r.residual();
            worst = worst.max(scaled.to_f64().unwrap());
            if scaled > BigRational::from_integer(RESIDUAL_CONSTANT.into()) {
                bad.push(format!("{s}: {scaled}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("max p·(1 - vol(reg)) = {worst:.4} <= {RESIDUAL_CONSTANT}{}", fails(&bad)),
    )
}

fn c5_isogeny() -> Result<Outcome> {
    let guard = Guard::default();
    let mut bad = Vec::new();
    for p in ODD_TO_13 {
        let (sl, pgl, _) = isogeny_count_check(p, &guard)?;
        // both sides also against p(p²−1)
        if sl != pgl || sl != (p * (p * p - 1)) as u128 {
            bad.push(format!("p = {p}: {sl} vs {pgl}"));
        }
    }
    outcome(bad.is_empty(), format!("|SL_2| = |PGL_2| = p(p²-1) for p in {ODD_TO_13:?}{}", fails(&bad)))
}

fn c6_cosets() -> Result<Outcome> {
    let guard = Guard::default();
    let cap = rat(3, 4);
    let mut bad = Vec::new();
    let mut shown = Vec::new();
    for p in [5, 7, 11, 13] {
        let r = coset_volume_report(p, &guard)?;
        let cosets = r.per_coset.clone().unwrap_or_default();
        // the image of SL_2 (square determinant) has index 2, counted on the raw table
        let table = enumerate_group(&spec(Family::Pgl, 2, p), &guard)?;
        if cosets.len() != 2 || table.len() as u128 != r.group_order {
            bad.push(format!("p = {p}: {} cosets", cosets.len()));
            continue;
        }
        let mut square_det = 0u64;
        for m in &table.elements {
            let d = (m.get(0, 0) as i64 * m.get(1, 1) as i64 - m.get(0, 1) as i64 * m.get(1, 0) as i64)
                .rem_euclid(p as i64);
            if legendre_symbol(d, p)? == 1 {
                square_det += 1;
            }
        }
        if square_det as u128 * 2 != r.group_order {
            bad.push(format!("p = {p}: image of SL_2 has {square_det} elements"));
        }
        for (i, v) in cosets.iter().enumerate() {
            if v >= &cap {
                bad.push(format!("p = {p} coset {i}: {v}"));
            }
        }
        shown.push(format!("p={p}: {}, {}", cosets[0], cosets[1]));
    }
    outcome(bad.is_empty(), format!("{}{}", shown.join("; "), fails(&bad)))
}

fn c7_cm_scan() -> Result<Outcome> {
    let start = Instant::now();
    let curve = CurveSpec::elliptic(1, 0)?;
    let report = scan(&curve, 100_000, &[], SCAN_WORKERS)?;
    let key = field_key_of_target(&frobscope::algebra::IntPolynomial::from_i64(&[1, 0, 1]))?;
    let s = *report.counts_for(&key).last().unwrap();
    let pi = *report.pi_good.last().unwrap();
    // π_good by an independent prime sieve: primes ≤ 10⁵ minus {2, 3}
    let pi_oracle = primes_up_to(100_000)?.len() as u64 - 2;
    let ratio = s as f64 / pi as f64;
    let t = start.elapsed();
    outcome(
        (0.45..=0.55).contains(&ratio) && pi == pi_oracle && t < Duration::from_secs(120),
        format!("S_Q(i)(10^5) = {s}, pi_good = {pi}, ratio {ratio:.4} in {t:.2?}"),
    )
}

fn c8_non_cm_scan() -> Result<Outcome> {
    let curve = CurveSpec::elliptic(1, 1)?;
    let report = scan(&curve, 100_000, &[1_000, 10_000], SCAN_WORKERS)?;
    let ratios = report.max_ratio_series();
    let decreasing = ratios.windows(2).all(|w| w[1] < w[0]);
    let last = *ratios.last().unwrap();
    let top = report
        .series
        .iter()
        .max_by_key(|s| s.counts.last().copied())
        .map(|s| s.key)
        .unwrap_or(FieldKey::Quadratic { d: -1 });
    outcome(
        decreasing && last < NON_CM_THRESHOLD && ratios.len() == 3,
        format!(
            "max ratios {:.4} > {:.4} > {:.4} (top key at 10^5: {top}), threshold {NON_CM_THRESHOLD}",
            ratios[0], ratios[1], ratios[2]
        ),
    )
}

fn c9_traces() -> Result<Outcome> {
    let mut bad = Vec::new();
    let e1 = CurveSpec::elliptic(1, 1)?;
    let cm = CurveSpec::elliptic(1, 0)?;
    for (c, p, want) in [(&e1, 5, -3), (&cm, 5, 2), (&cm, 7, 0)] {
        let a = ec_trace(c, p)?;
        if a != want {
            bad.push(format!("{c} a_{p} = {a}, want {want}"));
        }
    }
    let mut checked = 0;
    for f in [[1i64, 0, 0, 0, 0, 1], [0, -1, 0, 0, 0, 1]] {
        let curve = CurveSpec::genus2(&f)?;
        for p in primes_up_to(200)?.into_iter().filter(|&p| curve.is_good(p)) {
            let w = genus2_lpoly(&curve, p)?;
            let c = |i| w.coefficients.coeff(i);
            let q = BigInt::from(p);
            // x⁴ + c₃x³ + c₂x² + c₁x + c₀ with c₀ = p², c₁ = p·c₃
            if c(4) != BigInt::one() || c(0) != &q * &q || c(1) != &q * c(3) {
                bad.push(format!("{curve} at p = {p}"));
            }
            checked += 1;
        }
    }
    outcome(
        bad.is_empty(),
        format!("a_5 = -3, a_5 = 2, a_7 = 0; {checked} genus-2 L-polynomials satisfy the functional equation{}", fails(&bad)),
    )
}

fn c10_exponent() -> Result<Outcome> {
    let mut bad = Vec::new();
    let r = exponent_report(3, 1, 0.01, Some(1))?;
    if r.exponent_base != rat(15, 16) || (r.exponent - (15.0 / 16.0 + 0.01)).abs() > 1e-15 {
        bad.push(format!("(3,1): {} + eps", r.exponent_base));
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let rank: u64 = rng.random_range(1..=50);
        let dim: u64 = rank + rng.random_range(0..=500);
        let r = exponent_report(dim, rank, 0.0, None)?;
        let want = rat(1, (3 * dim + rank + 6) as i64);
        if !r.consistent || r.beta != want {
            bad.push(format!("({dim},{rank})"));
        }
    }
    let mut grid_ok = 0;
    for gt in [0.0, 0.5, 1.0, 2.5, 8.0, 17.25, 40.0] {
        let (b, step) = grid_optimal_beta(gt);
        if (b - 1.0 / (4.0 * gt + 6.0)).abs() <= step {
            grid_ok += 1;
        } else {
            bad.push(format!("grid at gamma {gt}: {b}"));
        }
    }
    let g2 = exponent_report(10, 2, 0.0, Some(2))?.corollary.expect("corollary requested");
    if !(g2.discrepancy && g2.theorem_denominator == 38 && g2.corollary_denominator == 34) {
        bad.push("g = 2 discrepancy not flagged".into());
    }
    outcome(
        bad.is_empty(),
        format!(
            "(3,1) -> 1 - 1/16 + eps; 100 random identities exact; grid within one step for {grid_ok} gammas; g = 2: {} vs {} flagged{}",
            g2.theorem_denominator,
            g2.corollary_denominator,
            fails(&bad)
        ),
    )
}

/// li(x) − li(2) by Ramanujan's series.
fn li_oracle(x: f64) -> f64 {
    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
    const LI2: f64 = 1.045_163_780_117_492_8;
    let l = x.ln();
    let (mut sum, mut term, mut inner) = (0.0, 1.0, 0.0);
    for n in 1..200 {
        term *= l / n as f64;
        if n > 1 {
            term /= 2.0;
        }
        if n % 2 == 1 {
            inner += 1.0 / n as f64;
        }
        sum += if n % 2 == 1 { term * inner } else { -term * inner };
    }
    EULER_GAMMA + l.ln() + x.sqrt() * sum - LI2
}

fn c11_selberg() -> Result<Outcome> {
    let quarter = rat(1, 4);
    let toy = SieveConfig {
        beta_per_prime: [3u64, 5, 7].iter().map(|&p| (p, quarter.clone())).collect(),
        beta_floor: quarter,
        main_constant: 1.0,
        x: 1e4,
        z: 10.0,
        sieving_primes: vec![3, 5, 7],
        error_model: ErrorModel {
            gamma_tilde: 1.0,
            constant: 1.0,
        },
        coset_multiplier: 1.0,
    };
    let r = selberg_bound(&toy)?;
    // ((1 − 1/4)/(1/4)) · 1 · Li / 3 = Li
    let want = li_oracle(1e4);
    let rel = ((r.main_term - want) / want).abs();
    let mut rng = StdRng::seed_from_u64(0x51e7e);
    let pool = primes_up_to(100)?;
    let mut violations = 0;
    for _ in 0..50 {
        let k = rng.random_range(1..=8);
        let mut primes: Vec<u64> = (0..k).map(|_| pool[rng.random_range(0..pool.len())]).collect();
        primes.sort_unstable();
        primes.dedup();
        let z: f64 = rng.random_range(2.0..500.0);
        let cfg = SieveConfig {
            beta_per_prime: Default::default(),
            beta_floor: rat(1, 3),
            main_constant: 1.0,
            x: z * rng.random_range(1.0..1e6),
            z,
            sieving_primes: primes,
            error_model: ErrorModel {
                gamma_tilde: rng.random_range(0.0..4.0),
                constant: rng.random_range(0.01..10.0),
            },
            coset_multiplier: 1.0,
        };
        let exact = exact_error_sum(&cfg, EXACT_PAIR_LIMIT).expect("small config");
        if exact > closed_form_error(&cfg) {
            violations += 1;
        }
    }
    outcome(
        rel < 1e-12 && violations == 0,
        format!("main term {:.10} vs Li(10^4) {want:.10} (rel {rel:.1e}); 50 random configs, {violations} exact > closed form", r.main_term),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Result<Outcome>); 11] = [
        ("class equation", c1_class_equation),
        ("formula-oracle volume equivalence", c2_formula_oracle),
        ("bounding-set volume < 3/4", c3_bounding_set),
        ("residual decay", c4_residual),
        ("isogeny count", c5_isogeny),
        ("coset refinement", c6_cosets),
        ("CM scan density", c7_cm_scan),
        ("non-CM scan decay", c8_non_cm_scan),
        ("worked traces", c9_traces),
        ("sieve exponent", c10_exponent),
        ("Selberg evaluator", c11_selberg),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let (pass, detail) = match f() {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        println!("{} criterion {:>2} ({name}): {detail}", if pass { "PASS" } else { "FAIL" }, i + 1);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
