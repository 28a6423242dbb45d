//! Command-line surface. Three subcommands share one scenario-source and
//! output vocabulary:
//!
//! ```text
//! wcop verify     --builtin hiszpa --n 4
//! wcop verify     --scenario s1.json --tol reciprocal_formula_vs_oracle=1e-8
//! wcop report     --builtin random --n 5 --seed 42 --out report.json
//! wcop conditions --builtin random --n 8 --profile fiber_constant_weight --seed 1..100
//! ```
//!
//! `--seed` repeats and accepts inclusive ranges `a..b`. Exit codes are a
//! stable contract: 0 every check passed, 1 some check failed, 2 usage or
//! input error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use wcop::scenario::FiberProfile;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_INPUT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "wcop",
    about = "Weighted composition operators: closed-form reciprocals checked \
             against an SVD oracle",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every applicable identity checker and report pass/fail per check.
    Verify(CommandArgs),
    /// Emit the derived quantities (densities, weights, matrices, spectra).
    Report(CommandArgs),
    /// Evaluate the product-reciprocal condition profile and its
    /// implication chain.
    Conditions(CommandArgs),
}

#[derive(Debug, Args)]
pub struct CommandArgs {
    /// Scenario file (JSON with labels/masses/phi/weight).
    #[arg(long, conflicts_with = "builtin")]
    pub scenario: Option<PathBuf>,

    /// Built-in generator: hiszpa, hiszpa_plus, hiszpa_minus, or random.
    #[arg(long, value_enum)]
    pub builtin: Option<BuiltinKind>,

    /// Truncation (built-in examples) or size (random generator).
    #[arg(long)]
    pub n: Option<usize>,

    /// Seed for the random generator; repeatable, `a..b` is an inclusive
    /// sweep.
    #[arg(long = "seed")]
    pub seeds: Vec<String>,

    /// Weight profile for the random generator.
    #[arg(long, value_enum, default_value_t = ProfileArg::Generic)]
    pub profile: ProfileArg,

    /// Documented lower bound on |w| for the hiszpa generator.
    #[arg(long, default_value_t = 0.5)]
    pub alpha: f64,

    /// Mass ratio for the hiszpa_minus generator.
    #[arg(long, default_value_t = 0.25)]
    pub q: f64,

    /// Tolerance override `check_name=value`; repeatable.
    #[arg(long = "tol")]
    pub tolerances: Vec<String>,

    /// Output file (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Output format; json is the stable interface, text is human-oriented.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[clap(rename_all = "snake_case")]
pub enum BuiltinKind {
    /// Two-branch comb with unit weights (non-dense composition range).
    Hiszpa,
    /// Integer line, counting measure, weight 1/k.
    HiszpaPlus,
    /// Integer line, geometric masses, weight 1/k.
    HiszpaMinus,
    /// Seeded random symbol.
    Random,
}

impl BuiltinKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BuiltinKind::Hiszpa => "hiszpa",
            BuiltinKind::HiszpaPlus => "hiszpa_plus",
            BuiltinKind::HiszpaMinus => "hiszpa_minus",
            BuiltinKind::Random => "random",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[clap(rename_all = "snake_case")]
pub enum ProfileArg {
    Generic,
    FiberConstantWeight,
    NonzeroWeight,
    WithZeroWeights,
}

impl From<ProfileArg> for FiberProfile {
    fn from(arg: ProfileArg) -> Self {
        match arg {
            ProfileArg::Generic => FiberProfile::Generic,
            ProfileArg::FiberConstantWeight => FiberProfile::FiberConstantWeight,
            ProfileArg::NonzeroWeight => FiberProfile::NonzeroWeight,
            ProfileArg::WithZeroWeights => FiberProfile::WithZeroWeights,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Expands one `--seed` argument: a single integer or an inclusive `a..b`.
pub fn expand_seed_spec(spec: &str) -> Result<Vec<u64>, String> {
    if let Some((start, end)) = spec.split_once("..") {
        let start: u64 = start
            .trim()
            .parse()
            .map_err(|_| format!("invalid seed range start in `{spec}`"))?;
        let end: u64 = end
            .trim()
            .parse()
            .map_err(|_| format!("invalid seed range end in `{spec}`"))?;
        Ok((start..=end).collect())
    } else {
        spec.trim()
            .parse::<u64>()
            .map(|s| vec![s])
            .map_err(|_| format!("invalid seed `{spec}`"))
    }
}

/// Parses repeatable `name=value` tolerance overrides.
pub fn parse_tolerances(specs: &[String]) -> Result<wcop::Tolerances64, String> {
    let mut tol = wcop::Tolerances64::new();
    for spec in specs {
        let (name, value) = spec
            .split_once('=')
            .ok_or_else(|| format!("tolerance override `{spec}` is not name=value"))?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| format!("tolerance value in `{spec}` is not a number"))?;
        if value <= 0.0 || !value.is_finite() {
            return Err(format!("tolerance in `{spec}` must be positive and finite"));
        }
        tol.set(name.trim(), value);
    }
    Ok(tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_specs_expand_inclusively() {
        assert_eq!(expand_seed_spec("42").unwrap(), vec![42]);
        assert_eq!(expand_seed_spec("1..4").unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(expand_seed_spec("5..5").unwrap(), vec![5]);
        assert!(expand_seed_spec("6..4").unwrap().is_empty());
        assert!(expand_seed_spec("x").is_err());
    }

    #[test]
    fn tolerance_specs_parse() {
        let tol =
            parse_tolerances(&["a=1e-8".to_string(), "b = 0.5".to_string()]).unwrap();
        assert_eq!(tol.get("a", 1e-9), 1e-8);
        assert_eq!(tol.get("b", 1e-9), 0.5);
        assert_eq!(tol.get("c", 1e-9), 1e-9);
        assert!(parse_tolerances(&["broken".to_string()]).is_err());
        assert!(parse_tolerances(&["a=-1".to_string()]).is_err());
    }

    #[test]
    fn command_line_parses() {
        let cli = Cli::try_parse_from([
            "wcop",
            "verify",
            "--builtin",
            "hiszpa",
            "--n",
            "4",
            "--tol",
            "ssrk_hestenes=1e-8",
        ])
        .unwrap();
        match cli.command {
            Command::Verify(args) => {
                assert_eq!(args.builtin, Some(BuiltinKind::Hiszpa));
                assert_eq!(args.n, Some(4));
            }
            _ => panic!("wrong subcommand"),
        }

        let cli = Cli::try_parse_from([
            "wcop",
            "conditions",
            "--builtin",
            "random",
            "--n",
            "8",
            "--profile",
            "fiber_constant_weight",
            "--seed",
            "1..100",
        ])
        .unwrap();
        match cli.command {
            Command::Conditions(args) => {
                assert_eq!(args.profile, ProfileArg::FiberConstantWeight);
                assert_eq!(args.seeds, vec!["1..100".to_string()]);
            }
            _ => panic!("wrong subcommand"),
        }
    }
}
