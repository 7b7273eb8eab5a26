//! Frobenius-field scans over all good primes up to X.

use std::collections::BTreeMap;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::count::{character_table, frobenius_polynomial};
use super::curve::{CurveKind, CurveSpec};
use super::key::{field_key_of_target, fingerprint_of, frobenius_field_key, FieldKey};
use crate::algebra::arith::primes_up_to;
use crate::algebra::poly::IntPolynomial;
use crate::error::{input, Error, Result};

pub const ELLIPTIC_SCAN_GUARD: u64 = 10_000_000;
pub const GENUS2_SCAN_GUARD: u64 = 10_000;

/// Counts of one field key at each checkpoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeySeries {
    pub key: FieldKey,
    pub counts: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub curve: CurveSpec,
    #[serde(rename = "X")]
    pub x: u64,
    pub checkpoints: Vec<u64>,
    /// Good primes ≤ each checkpoint.
    pub pi_good: Vec<u64>,
    /// Bad primes ≤ X skipped by the scan.
    pub excluded_primes: Vec<u64>,
    /// One entry per key seen, in key order.
    pub series: Vec<KeySeries>,
}

/// Checkpoints ascending, deduplicated, clipped to X, with X appended.
pub fn normalize_checkpoints(x: u64, checkpoints: &[u64]) -> Vec<u64> {
    let mut c: Vec<u64> = checkpoints.iter().copied().filter(|&c| c <= x && c >= 2).collect();
    c.push(x);
    c.sort_unstable();
    c.dedup();
    c
}

/// Scans every good prime p ≤ X with `workers` threads. The report does
/// not depend on the worker count.
pub fn scan(curve: &CurveSpec, x: u64, checkpoints: &[u64], workers: usize) -> Result<ScanReport> {
    let guard = match curve.kind() {
        CurveKind::Elliptic => ELLIPTIC_SCAN_GUARD,
        CurveKind::Genus2 => GENUS2_SCAN_GUARD,
    };
    if x > guard {
        return Err(Error::Resource(format!(
            "scan bound {x} exceeds the {guard} guard for {:?} curves",
            curve.kind()
        )));
    }
    if workers == 0 {
        return input("worker count must be >= 1");
    }
    let checkpoints = normalize_checkpoints(x, checkpoints);
    let primes = primes_up_to(x)?;
    let (good, excluded): (Vec<u64>, Vec<u64>) = primes.into_iter().partition(|&p| curve.is_good(p));

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Resource(format!("thread pool: {e}")))?;
    let keys: Vec<FieldKey> = pool.install(|| {
        good.par_iter()
            .map(|&p| {
                let chi = character_table(p);
                frobenius_field_key(&frobenius_polynomial(curve, p, &chi)?)
            })
            .collect::<Result<Vec<_>>>()
    })?;

    // bucket[i] = number of primes in (checkpoint[i-1], checkpoint[i]]
    let nc = checkpoints.len();
    let bucket_of = |p: u64| checkpoints.partition_point(|&c| c < p);
    let mut per_key: BTreeMap<FieldKey, Vec<u64>> = BTreeMap::new();
    let mut pi = vec![0u64; nc];
    for (&p, key) in good.iter().zip(&keys) {
        let b = bucket_of(p);
        per_key.entry(*key).or_insert_with(|| vec![0; nc])[b] += 1;
        pi[b] += 1;
    }
    let prefix = |v: &mut Vec<u64>| {
        for i in 1..v.len() {
            v[i] += v[i - 1];
        }
    };
    prefix(&mut pi);
    let series = per_key
        .into_iter()
        .map(|(key, mut counts)| {
            prefix(&mut counts);
            KeySeries { key, counts }
        })
        .collect();

    Ok(ScanReport {
        curve: curve.clone(),
        x,
        checkpoints,
        pi_good: pi,
        excluded_primes: excluded,
        series,
    })
}

impl ScanReport {
    pub fn counts_for(&self, key: &FieldKey) -> Vec<u64> {
        self.series
            .iter()
            .find(|s| &s.key == key)
            .map(|s| s.counts.clone())
            .unwrap_or_else(|| vec![0; self.checkpoints.len()])
    }

    /// Key under which this scan files Frobenius fields isomorphic to the
    /// splitting field of `m`.
    pub fn key_for_target(&self, m: &IntPolynomial) -> Result<FieldKey> {
        match self.curve.kind() {
            CurveKind::Elliptic => field_key_of_target(m),
            CurveKind::Genus2 => {
                if m.degree() == Some(1) {
                    // same refusal as the exact path
                    return field_key_of_target(m);
                }
                fingerprint_of(m)
            }
        }
    }

    /// max over keys of S(X)/π_good(X) at each checkpoint.
    pub fn max_ratio_series(&self) -> Vec<f64> {
        (0..self.checkpoints.len())
            .map(|i| {
                let best = self.series.iter().map(|s| s.counts[i]).max().unwrap_or(0);
                if self.pi_good[i] == 0 {
                    0.0
                } else {
                    best as f64 / self.pi_good[i] as f64
                }
            })
            .collect()
    }

    /// CSV with columns X, key, count, pi_good; one row per checkpoint and
    /// key with a nonzero count.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let io = |e: csv::Error| Error::Resource(format!("writing CSV: {e}"));
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["X", "key", "count", "pi_good"]).map_err(io)?;
        for (i, &x) in self.checkpoints.iter().enumerate() {
            for s in &self.series {
                if s.counts[i] > 0 {
                    out.write_record([
                        x.to_string(),
                        s.key.to_string(),
                        s.counts[i].to_string(),
                        self.pi_good[i].to_string(),
                    ])
                    .map_err(io)?;
                }
            }
        }
        out.flush().map_err(|e| Error::Resource(format!("writing CSV: {e}")))?;
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityPoint {
    #[serde(rename = "X")]
    pub x: u64,
    pub count: u64,
    pub pi_good: u64,
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensitySeries {
    pub key: FieldKey,
    pub points: Vec<DensityPoint>,
    /// Least-squares slope of log S(X) against log X.
    pub slope: f64,
    /// Least-squares slope of log S(X) against log π_good(X); 1 for a key
    /// of positive density, free of the 1/log X drift in `slope`.
    pub relative_slope: f64,
}

fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

/// Ratios S/π_good per checkpoint and fitted growth exponents.
pub fn density_series(report: &ScanReport, key: &FieldKey) -> Result<DensitySeries> {
    let counts = report.counts_for(key);
    let points: Vec<DensityPoint> = report
        .checkpoints
        .iter()
        .zip(&counts)
        .zip(&report.pi_good)
        .map(|((&x, &count), &pi_good)| DensityPoint {
            x,
            count,
            pi_good,
            ratio: if pi_good == 0 { 0.0 } else { count as f64 / pi_good as f64 },
        })
        .collect();
    let usable: Vec<&DensityPoint> = points.iter().filter(|p| p.count > 0).collect();
    let distinct_x = usable.iter().map(|p| p.x).collect::<std::collections::BTreeSet<_>>().len();
    if usable.len() < 3 || distinct_x < 3 {
        return Err(Error::InsufficientData(format!(
            "key {key} has {} checkpoints with nonzero counts; need at least 3",
            usable.len()
        )));
    }
    let lx: Vec<f64> = usable.iter().map(|p| (p.x as f64).ln()).collect();
    let lpi: Vec<f64> = usable.iter().map(|p| (p.pi_good as f64).ln()).collect();
    let ls: Vec<f64> = usable.iter().map(|p| (p.count as f64).ln()).collect();
    Ok(DensitySeries {
        key: *key,
        slope: least_squares_slope(&lx, &ls),
        relative_slope: least_squares_slope(&lpi, &ls),
        points,
    })
}
