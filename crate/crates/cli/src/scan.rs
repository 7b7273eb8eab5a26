use std::fs::{self, File};
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use frobscope::algebra::IntPolynomial;
use frobscope::frobenius::{density_series, scan, CurveSpec, ScanReport};

use crate::output::{sink, write_json};
use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CurvePreset {
    /// y² = x³ + x, CM by Z[i].
    Cm,
    /// y² = x³ + x + 1.
    NonCm,
}

impl CurvePreset {
    fn curve(self) -> &'static str {
        match self {
            CurvePreset::Cm => "elliptic a=1 b=0",
            CurvePreset::NonCm => "elliptic a=1 b=1",
        }
    }
}

#[derive(Args)]
pub struct ScanArgs {
    /// Curve line, e.g. "elliptic a=1 b=1" or "genus2 f=1,0,0,0,0,1".
    #[arg(long, conflicts_with_all = ["curve_file", "preset"])]
    curve: Option<String>,
    /// File holding one curve line; blank lines and # comments are skipped.
    #[arg(long, conflicts_with = "preset")]
    curve_file: Option<PathBuf>,
    #[arg(long, value_enum)]
    preset: Option<CurvePreset>,
    /// Scan all good primes p <= X.
    #[arg(long = "x")]
    x: u64,
    /// Ascending checkpoints below X; X itself is always reported.
    #[arg(long, value_delimiter = ',')]
    checkpoints: Vec<u64>,
    /// Monic target polynomial M, coefficients lowest degree first, e.g. 1,0,1 for x²+1.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    target: Option<Vec<i64>>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    /// Directory for scan.csv, scan.json and density.json; without it the
    /// CSV goes to stdout.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

fn curve_from_file(path: &Path) -> CliResult<CurveSpec> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let mut found = None;
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let curve: CurveSpec = t
            .parse()
            .map_err(|e| CliError::Usage(format!("{}:{}: '{line}': {e}", path.display(), i + 1)))?;
        if found.replace(curve).is_some() {
            return Err(CliError::Usage(format!(
                "{}:{}: '{line}': only one curve per file",
                path.display(),
                i + 1
            )));
        }
    }
    found.ok_or_else(|| CliError::Usage(format!("{}: no curve line found", path.display())))
}

impl ScanArgs {
    fn curve(&self) -> CliResult<CurveSpec> {
        let line = match (&self.curve, &self.curve_file, self.preset) {
            (Some(c), _, _) => c.clone(),
            (_, Some(p), _) => return curve_from_file(p),
            (_, _, Some(p)) => p.curve().to_string(),
            _ => return Err(CliError::Usage("give --curve, --curve-file or --preset".into())),
        };
        line.parse().map_err(|e| CliError::Usage(format!("'{line}': {e}")))
    }

    fn check_checkpoints(&self) -> CliResult<()> {
        for w in self.checkpoints.windows(2) {
            if w[0] >= w[1] {
                return Err(CliError::Usage(format!(
                    "checkpoints must be strictly ascending ({} then {})",
                    w[0], w[1]
                )));
            }
        }
        if let Some(&c) = self.checkpoints.iter().find(|&&c| c < 2 || c > self.x) {
            return Err(CliError::Usage(format!("checkpoint {c} outside [2, X = {}]", self.x)));
        }
        Ok(())
    }
}

fn write_scan_csv(report: &ScanReport, path: Option<&Path>) -> CliResult<()> {
    match path {
        Some(p) => {
            let f = File::create(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            report.write_csv(BufWriter::new(f))?;
        }
        None => report.write_csv(sink(None)?)?,
    }
    Ok(())
}

pub fn run(args: &ScanArgs) -> CliResult<()> {
    let curve = args.curve()?;
    args.check_checkpoints()?;
    if args.x < 2 {
        return Err(CliError::Usage("X must be at least 2".into()));
    }
    let target = match &args.target {
        Some(c) => {
            let m = IntPolynomial::from_i64(c);
            if !m.is_monic() {
                return Err(CliError::Usage(format!("target {m} is not monic")));
            }
            Some(m)
        }
        None => None,
    };
    let report = scan(&curve, args.x, &args.checkpoints, args.workers as usize)?;
    let key = target.as_ref().map(|m| report.key_for_target(m)).transpose()?;

    eprintln!("{curve}: {} keys, bad primes excluded {:?}", report.series.len(), report.excluded_primes);
    let max = report.max_ratio_series();
    let target_counts = key.as_ref().map(|k| report.counts_for(k));
    for (i, &x) in report.checkpoints.iter().enumerate() {
        let mut line = format!("X = {x}: pi_good = {}, max ratio = {:.6}", report.pi_good[i], max[i]);
        if let Some(c) = &target_counts {
            let r = if report.pi_good[i] == 0 { 0.0 } else { c[i] as f64 / report.pi_good[i] as f64 };
            line += &format!(", target count = {}, ratio = {r:.6}", c[i]);
        }
        eprintln!("{line}");
    }

    match &args.out_dir {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
            write_scan_csv(&report, Some(&dir.join("scan.csv")))?;
            write_json(&mut *sink(Some(&dir.join("scan.json")))?, &report)?;
        }
        None => write_scan_csv(&report, None)?,
    }

    if let Some(k) = &key {
        let d = density_series(&report, k)?;
        eprintln!("key {}: slope {:.4}, slope vs pi_good {:.4}", d.key, d.slope, d.relative_slope);
        if let Some(dir) = &args.out_dir {
            write_json(&mut *sink(Some(&dir.join("density.json")))?, &d)?;
        }
    }
    Ok(())
}
