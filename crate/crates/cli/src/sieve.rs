use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use frobscope::algebra::primes_up_to;
use frobscope::sieve::{exponent_report, selberg_bound, ErrorModel, ExponentReport, SieveBoundReport, SieveConfig};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::output::emit;
use crate::{CliError, CliResult, OutputArgs};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SievePreset {
    /// Generic elliptic curve: semisimple part SL_2.
    G1,
    /// Generic abelian surface: semisimple part Sp_4.
    G2,
}

#[derive(Args)]
pub struct SieveArgs {
    /// JSON config: the sieve fields plus dim and rank of the semisimple group.
    #[arg(long, conflicts_with = "preset", required_unless_present = "preset")]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    preset: Option<SievePreset>,
    /// Overrides the config's epsilon.
    #[arg(long)]
    epsilon: Option<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct RunConfig {
    #[serde(flatten)]
    sieve: SieveConfig,
    dim: u64,
    rank: u64,
    #[serde(default)]
    epsilon: f64,
    /// Genus for the generic-case denominator check.
    #[serde(default)]
    g: Option<u64>,
}

const REQUIRED: [&str; 8] = ["beta_floor", "main_constant", "X", "z", "sieving_primes", "error_model", "dim", "rank"];
const REQUIRED_MODEL: [&str; 2] = ["gamma_tilde", "constant"];

fn parse_config(text: &str) -> CliResult<RunConfig> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("config is not valid JSON: {e}")))?;
    let Some(obj) = v.as_object() else {
        return Err(CliError::Usage("config must be a JSON object".into()));
    };
    let mut missing: Vec<String> = REQUIRED.iter().filter(|k| !obj.contains_key(**k)).map(|k| k.to_string()).collect();
    if let Some(m) = obj.get("error_model").and_then(Value::as_object) {
        missing.extend(
            REQUIRED_MODEL
                .iter()
                .filter(|k| !m.contains_key(**k))
                .map(|k| format!("error_model.{k}")),
        );
    }
    if !missing.is_empty() {
        return Err(CliError::Usage(format!("config is missing fields: {}", missing.join(", "))));
    }
    serde_json::from_value(v).map_err(|e| CliError::Usage(format!("config: {e}")))
}

fn preset(p: SievePreset) -> CliResult<RunConfig> {
    let g = match p {
        SievePreset::G1 => 1,
        SievePreset::G2 => 2,
    };
    let (dim, rank) = (g * (2 * g + 1), g);
    let gamma = (3 * dim + rank) as f64 / 4.0;
    let x = 1e20f64;
    let z = x.powf(1.0 / (4.0 * gamma + 6.0));
    let quarter = BigRational::new(1.into(), 4.into());
    let primes = primes_up_to(1000)?;
    Ok(RunConfig {
        sieve: SieveConfig {
            beta_per_prime: primes.iter().map(|&q| (q, quarter.clone())).collect::<BTreeMap<_, _>>(),
            beta_floor: quarter,
            main_constant: 1.0,
            x,
            z,
            sieving_primes: primes,
            error_model: ErrorModel {
                gamma_tilde: gamma,
                constant: 1.0,
            },
            coset_multiplier: 1.0,
        },
        dim,
        rank,
        epsilon: 0.0,
        g: Some(g),
    })
}

#[derive(Serialize)]
struct SieveOutput<'a> {
    config: &'a RunConfig,
    bound: SieveBoundReport,
    exponent: ExponentReport,
    exponent_line: String,
}

pub fn run(args: &SieveArgs) -> CliResult<()> {
    let mut cfg = match (&args.config, args.preset) {
        (Some(path), _) => {
            let text =
                fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            parse_config(&text)?
        }
        (None, Some(p)) => preset(p)?,
        (None, None) => return Err(CliError::Usage("give --config or --preset".into())),
    };
    if let Some(e) = args.epsilon {
        cfg.epsilon = e;
    }
    let exponent = exponent_report(cfg.dim, cfg.rank, cfg.epsilon, cfg.g)?;
    let bound = selberg_bound(&cfg.sieve)?;

    let denom = 3 * cfg.dim + cfg.rank + 6;
    let exponent_line = format!(
        "exponent 1 − 1/(3·{} + {} + 6) + ε = 1 − 1/{denom} + {} ≈ {:.6}",
        cfg.dim, cfg.rank, cfg.epsilon, exponent.exponent
    );
    eprintln!("{exponent_line}");
    eprintln!(
        "gamma = {}, beta = {}, grid optimum beta ≈ {:.6} (step {:.2e})",
        exponent.gamma, exponent.beta, exponent.grid_beta, exponent.grid_step
    );
    if let Some(c) = &exponent.corollary {
        if c.discrepancy {
            eprintln!(
                "warning: for g = {} the generic-case denominator 6g²+2g+6 = {} differs from 3·dim+rank+6 = {} \
                 (dim {}, rank {}); the substituted value is 6g²+4g+6",
                c.g, c.corollary_denominator, c.theorem_denominator, c.dim, c.rank
            );
        }
    }
    eprintln!(
        "{}: main {:.6e} + error {:.6e} = {:.6e} (z = {:.4}, pi_P(z) = {}, {:?})",
        bound.label, bound.main_term, bound.error_term, bound.total, bound.z, bound.pi_p_z, bound.error_method
    );

    let row = vec![
        bound.main_term.to_string(),
        bound.error_term.to_string(),
        bound.total.to_string(),
        bound.z.to_string(),
        bound.pi_p_z.to_string(),
        serde_json::to_value(bound.error_method)
            .ok()
            .and_then(|v| v.as_str().map(String::from))
            .unwrap_or_default(),
        exponent.gamma.to_string(),
        exponent.beta.to_string(),
        exponent.exponent.to_string(),
        exponent.beta.to_f64().map(|b| b.to_string()).unwrap_or_default(),
        exponent.grid_beta.to_string(),
    ];
    let out = SieveOutput {
        config: &cfg,
        bound,
        exponent,
        exponent_line,
    };
    emit(
        &args.output,
        &[
            "main_term",
            "error_term",
            "total",
            "z",
            "pi_p_z",
            "error_method",
            "gamma",
            "beta",
            "exponent",
            "beta_decimal",
            "grid_beta",
        ],
        &[row],
        &out,
    )
}
