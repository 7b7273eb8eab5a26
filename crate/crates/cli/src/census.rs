use clap::{Args, ValueEnum};
use frobscope::census::{class_equation, volume_report, weyl_twisted_classes, Family, GroupSpec, Guard, VolumeReport};
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::output::emit;
use crate::{CliError, CliResult, OutputArgs};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GroupPreset {
    Gl2,
    Sl2,
    Pgl2,
    Sp4,
}

impl GroupPreset {
    fn group(self) -> (Family, usize) {
        match self {
            GroupPreset::Gl2 => (Family::Gl, 2),
            GroupPreset::Sl2 => (Family::Sl, 2),
            GroupPreset::Pgl2 => (Family::Pgl, 2),
            GroupPreset::Sp4 => (Family::Sp, 4),
        }
    }
}

const PRESET_PRIMES: [u64; 3] = [3, 5, 7];

#[derive(Args)]
pub struct CensusArgs {
    /// gl, sl, pgl or sp.
    #[arg(long)]
    family: Option<Family>,
    /// Matrix size (2g for sp).
    #[arg(long)]
    n: Option<usize>,
    /// Primes, comma separated or repeated.
    #[arg(long = "p", value_delimiter = ',')]
    primes: Vec<u64>,
    /// Named group; primes default to 3,5,7.
    #[arg(long, value_enum, conflicts_with_all = ["family", "n"])]
    preset: Option<GroupPreset>,
    #[command(flatten)]
    output: OutputArgs,
}

impl CensusArgs {
    fn specs(&self) -> CliResult<Vec<GroupSpec>> {
        let (family, n) = match (self.preset, self.family, self.n) {
            (Some(p), _, _) => p.group(),
            (None, Some(f), Some(n)) => (f, n),
            _ => return Err(CliError::Usage("give --family and --n, or --preset".into())),
        };
        let primes = match (&self.preset, self.primes.is_empty()) {
            (Some(_), true) => PRESET_PRIMES.to_vec(),
            (None, true) => return Err(CliError::Usage("give at least one prime with --p".into())),
            _ => self.primes.clone(),
        };
        primes
            .into_iter()
            .map(|p| GroupSpec::new(family, n, p).map_err(|e| CliError::Usage(e.to_string())))
            .collect()
    }
}

#[derive(Serialize)]
struct CensusJson {
    group: String,
    spec: GroupSpec,
    classes: Vec<frobscope::census::TorusClassRecord>,
    #[serde(with = "frobscope::algebra::rational")]
    class_equation_sum: BigRational,
}

pub fn torus_census(args: &CensusArgs) -> CliResult<()> {
    let mut rows = Vec::new();
    let mut json = Vec::new();
    let mut bad = Vec::new();
    for spec in args.specs()? {
        let classes = weyl_twisted_classes(&spec)?;
        let sum = class_equation(&spec)?;
        for (i, c) in classes.iter().enumerate() {
            rows.push(vec![
                spec.to_string(),
                spec.p.to_string(),
                i.to_string(),
                c.label.clone(),
                c.relative_weyl_order.to_string(),
                c.torus_order.to_string(),
                format!("1/{}", c.relative_weyl_order),
            ]);
        }
        eprintln!("{spec}: {} torus classes, class equation sum {sum}", classes.len());
        if !sum.is_one() {
            bad.push(format!("{spec} class equation sums to {sum}"));
        }
        json.push(CensusJson {
            group: spec.to_string(),
            spec,
            classes,
            class_equation_sum: sum,
        });
    }
    emit(
        &args.output,
        &["group", "p", "class", "weyl_rep", "relative_weyl_order", "torus_order", "weight"],
        &rows,
        &json,
    )?;
    if bad.is_empty() {
        Ok(())
    } else {
        Err(CliError::Contract(bad.join("; ")))
    }
}

fn volume_rows(r: &VolumeReport) -> Vec<Vec<String>> {
    let g = r.group.to_string();
    let p = r.group.p.to_string();
    let order = BigRational::from_integer(r.group_order.into());
    let row = |what: String, count: String, vol: &BigRational| {
        vec![g.clone(), p.clone(), r.group_order.to_string(), what, count, vol.to_string()]
    };
    let count_of = |v: &BigRational| (v * &order).to_integer().to_string();
    let mut rows: Vec<Vec<String>> = r
        .per_torus
        .iter()
        .map(|t| row(format!("torus:{}", t.record.label), t.element_count.to_string(), &t.volume))
        .collect();
    for (what, v) in [
        ("semisimple", &r.semisimple_volume),
        ("regular", &r.regular_volume),
        ("bounding", &r.bounding_volume),
    ] {
        rows.push(row(what.into(), count_of(v), v));
    }
    rows.push(row("residual".into(), count_of(&r.residual()), &r.residual()));
    if let Some(cosets) = &r.per_coset {
        for (i, v) in cosets.iter().enumerate() {
            rows.push(row(format!("coset:{i}"), String::new(), v));
        }
    }
    rows
}

pub fn borel_volume(args: &CensusArgs) -> CliResult<()> {
    let guard = Guard::from_env()?;
    let three_quarters = BigRational::new(3.into(), 4.into());
    let mut reports = Vec::new();
    let mut rows = Vec::new();
    let mut bad = Vec::new();
    for spec in args.specs()? {
        let r = volume_report(&spec, &guard)?;
        rows.extend(volume_rows(&r));
        eprintln!(
            "{spec}: |G| = {}, vol(B-set) = {}, vol(reg) = {}",
            r.group_order, r.bounding_volume, r.regular_volume
        );
        if !r.formula_agrees() {
            bad.push(format!("{spec}: enumerated torus classes disagree with the volume formula"));
        }
        if !r.abelian && spec.p >= 5 {
            if r.bounding_volume >= three_quarters {
                bad.push(format!("{spec}: bounding volume {} >= 3/4", r.bounding_volume));
            }
            for (i, v) in r.per_coset.iter().flatten().enumerate() {
                if v >= &three_quarters {
                    bad.push(format!("{spec}: coset {i} ratio {v} >= 3/4"));
                }
            }
        }
        reports.push(r);
    }
    emit(
        &args.output,
        &["group", "p", "group_order", "quantity", "count", "volume"],
        &rows,
        &reports,
    )?;
    if bad.is_empty() {
        Ok(())
    } else {
        Err(CliError::Contract(bad.join("; ")))
    }
}
