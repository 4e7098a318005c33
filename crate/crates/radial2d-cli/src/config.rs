//! Flag parsing, JSON config-file layering, and the validated run config.
//!
//! Precedence: command-line flags over `--config` file values over defaults.
//! Every config-file key mirrors the long option of the same name (hyphens
//! become underscores; the parameter symbols `De`, `re`, `A`, `B`, `C` keep
//! their case).

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use radial2d::{Family, MolecularParams, PhysicalContext, PotentialSpec};
use serde::Deserialize;

use crate::error::CliError;

/// Hard ceiling on `--m-max` and `--m`, a guard against pathological runs.
pub const M_MAX_LIMIT: u32 = 64;
/// Hard ceiling on `--samples` for the same reason.
pub const SAMPLES_LIMIT: usize = 1_000_000;

const DEFAULT_M_MAX: u32 = 3;
const DEFAULT_TOLERANCE: f64 = 1e-5;
const DEFAULT_SAMPLES: usize = 101;

/// Closed-form bound states of the 2D radial Schrödinger equation for the
/// pseudoharmonic and modified Kratzer potentials, cross-checked against an
/// independent finite-difference eigenvalue and quadrature oracle.
#[derive(Debug, Parser)]
#[command(name = "radial2d", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form energies E_m for m = 0..m_max
    Spectrum(CommonArgs),
    /// Matched ansatz coefficients (a, b, s) and energies per m
    Coefficients(CommonArgs),
    /// Uniform samples of the normalized wavefunction ψ(ρ) for one m
    Wavefunction(WavefunctionArgs),
    /// Closed form against the finite-difference + quadrature oracle
    Verify(CommonArgs),
}

/// Options shared by every subcommand. All values are optional here so that
/// a `--config` file and built-in defaults can fill the gaps.
#[derive(Debug, Default, Args)]
pub struct CommonArgs {
    /// Potential family
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,

    /// Well depth D_e of the molecular parameterization (pair with --re)
    #[arg(long = "De", value_name = "REAL", allow_negative_numbers = true)]
    pub de: Option<f64>,

    /// Equilibrium radius ρ_e of the molecular parameterization (pair with --De)
    #[arg(long = "re", value_name = "REAL", allow_negative_numbers = true)]
    pub re: Option<f64>,

    /// Algebraic coefficient A (pair with --B and --C)
    #[arg(long = "A", value_name = "REAL", allow_negative_numbers = true)]
    pub a: Option<f64>,

    /// Algebraic coefficient B of the 1/ρ² term (pair with --A and --C)
    #[arg(long = "B", value_name = "REAL", allow_negative_numbers = true)]
    pub b: Option<f64>,

    /// Algebraic constant offset C (pair with --A and --B)
    #[arg(long = "C", value_name = "REAL", allow_negative_numbers = true)]
    pub c: Option<f64>,

    /// Reduced mass μ [default: 1]
    #[arg(long, value_name = "REAL", allow_negative_numbers = true)]
    pub mu: Option<f64>,

    /// Reduced Planck constant ħ [default: 1]
    #[arg(long, value_name = "REAL", allow_negative_numbers = true)]
    pub hbar: Option<f64>,

    /// Largest angular momentum quantum number [default: 3]
    #[arg(long = "m-max", value_name = "INT")]
    pub m_max: Option<u32>,

    /// Replace the automatic verification grid's inner endpoint
    #[arg(long = "rho-min", value_name = "REAL", allow_negative_numbers = true)]
    pub rho_min: Option<f64>,

    /// Replace the automatic verification grid's outer endpoint
    #[arg(long = "rho-max", value_name = "REAL", allow_negative_numbers = true)]
    pub rho_max: Option<f64>,

    /// Replace the automatic verification grid's point count
    #[arg(long = "grid-points", value_name = "INT")]
    pub grid_points: Option<usize>,

    /// Relative energy tolerance used by verify [default: 1e-5]
    #[arg(long, value_name = "REAL", allow_negative_numbers = true)]
    pub tolerance: Option<f64>,

    /// Output format [default: json]
    #[arg(long, value_enum)]
    pub output: Option<OutputFormat>,

    /// JSON file supplying any long option; explicit flags take precedence
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
}

/// Sampling window for the `wavefunction` subcommand.
#[derive(Debug, Default, Args)]
pub struct SamplingArgs {
    /// Angular momentum quantum number of the sampled state [default: 0]
    #[arg(long, value_name = "INT")]
    pub m: Option<u32>,

    /// First sample radius [default: automatic decayed inner endpoint]
    #[arg(long = "rho-start", value_name = "REAL", allow_negative_numbers = true)]
    pub rho_start: Option<f64>,

    /// Last sample radius [default: automatic decayed outer endpoint]
    #[arg(long = "rho-end", value_name = "REAL", allow_negative_numbers = true)]
    pub rho_end: Option<f64>,

    /// Number of uniform samples, endpoints included [default: 101]
    #[arg(long, value_name = "INT")]
    pub samples: Option<usize>,
}

#[derive(Debug, Args)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub sampling: SamplingArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Pseudoharmonic,
    Kratzer,
}

impl From<FamilyArg> for Family {
    fn from(arg: FamilyArg) -> Self {
        match arg {
            FamilyArg::Pseudoharmonic => Family::Pseudoharmonic,
            FamilyArg::Kratzer => Family::Kratzer,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl OutputFormat {
    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        }
    }
}

/// Stable lowercase name used in output documents.
#[must_use]
pub fn family_name(family: Family) -> &'static str {
    match family {
        Family::Pseudoharmonic => "pseudoharmonic",
        Family::Kratzer => "kratzer",
    }
}

/// Which of the two equivalent parameterizations the user supplied.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParamSource {
    Molecular { de: f64, rho_e: f64 },
    Algebraic { a: f64, b: f64, c: f64 },
}

/// Optional per-component replacements for the automatic verification grid.
/// Values are range-checked where the grid is actually built.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct GridOverrides {
    pub rho_min: Option<f64>,
    pub rho_max: Option<f64>,
    pub n_points: Option<usize>,
}

/// Resolved sampling window; `None` endpoints fall back to the automatic
/// grid of the sampled state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sampling {
    pub m: u32,
    pub rho_start: Option<f64>,
    pub rho_end: Option<f64>,
    pub samples: usize,
}

/// Fully resolved and validated run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub family: Family,
    pub source: ParamSource,
    pub spec: PotentialSpec,
    pub context: PhysicalContext,
    pub m_max: u32,
    pub grid: GridOverrides,
    pub tolerance: f64,
    pub output: OutputFormat,
    pub sampling: Sampling,
}

impl RunConfig {
    /// Layer defaults, `--config` file values, and flags (flags win), then
    /// validate the combination.
    pub fn resolve(common: &CommonArgs, sampling: &SamplingArgs) -> Result<Self, CliError> {
        let file = match &common.config {
            Some(path) => load_file(path)?,
            None => FileConfig::default(),
        };

        let family = match (common.family, file.family.as_deref()) {
            (Some(arg), _) => Family::from(arg),
            (None, Some(name)) => parse_family(name)?,
            (None, None) => {
                return Err(usage(
                    "missing potential family: pass --family pseudoharmonic|kratzer",
                ))
            }
        };

        let de = common.de.or(file.de);
        let re = common.re.or(file.re);
        let a = common.a.or(file.a);
        let b = common.b.or(file.b);
        let c = common.c.or(file.c);

        let molecular_given = de.is_some() || re.is_some();
        let algebraic_given = a.is_some() || b.is_some() || c.is_some();
        let source = match (molecular_given, algebraic_given) {
            (true, true) => {
                return Err(usage(
                    "parameter sources conflict: give --De/--re or --A/--B/--C, not both",
                ))
            }
            (false, false) => {
                return Err(usage(
                    "missing parameter source: give --De/--re or --A/--B/--C",
                ))
            }
            (true, false) => match (de, re) {
                (Some(de), Some(rho_e)) => ParamSource::Molecular { de, rho_e },
                _ => return Err(usage("the molecular source needs both --De and --re")),
            },
            (false, true) => match (a, b, c) {
                (Some(a), Some(b), Some(c)) => ParamSource::Algebraic { a, b, c },
                _ => return Err(usage("the algebraic source needs all of --A, --B, --C")),
            },
        };

        let mu = common.mu.or(file.mu).unwrap_or(1.0);
        let hbar = common.hbar.or(file.hbar).unwrap_or(1.0);
        let context = PhysicalContext::new(mu, hbar)?;

        let spec = match source {
            ParamSource::Molecular { de, rho_e } => {
                let mp = MolecularParams::new(de, rho_e)?;
                match family {
                    Family::Pseudoharmonic => PotentialSpec::pseudoharmonic_from_molecular(&mp),
                    Family::Kratzer => PotentialSpec::kratzer_from_molecular(&mp),
                }
            }
            ParamSource::Algebraic { a, b, c } => PotentialSpec::new(family, a, b, c)?,
        };

        let m_max = common.m_max.or(file.m_max).unwrap_or(DEFAULT_M_MAX);
        if m_max > M_MAX_LIMIT {
            return Err(usage(format!(
                "m-max = {m_max} exceeds the guard limit {M_MAX_LIMIT}"
            )));
        }

        let tolerance = common.tolerance.or(file.tolerance).unwrap_or(DEFAULT_TOLERANCE);
        if !(tolerance.is_finite() && tolerance > 0.0) {
            return Err(usage(format!(
                "tolerance = {tolerance} must be finite and positive"
            )));
        }

        let grid = GridOverrides {
            rho_min: common.rho_min.or(file.rho_min),
            rho_max: common.rho_max.or(file.rho_max),
            n_points: common.grid_points.or(file.grid_points),
        };

        let output = match (common.output, file.output.as_deref()) {
            (Some(format), _) => format,
            (None, Some(name)) => parse_output(name)?,
            (None, None) => OutputFormat::Json,
        };

        let m = sampling.m.or(file.m).unwrap_or(0);
        if m > M_MAX_LIMIT {
            return Err(usage(format!("m = {m} exceeds the guard limit {M_MAX_LIMIT}")));
        }
        let samples = sampling.samples.or(file.samples).unwrap_or(DEFAULT_SAMPLES);
        if !(2..=SAMPLES_LIMIT).contains(&samples) {
            return Err(usage(format!(
                "samples = {samples} must lie between 2 and {SAMPLES_LIMIT}"
            )));
        }
        let rho_start = sampling.rho_start.or(file.rho_start);
        let rho_end = sampling.rho_end.or(file.rho_end);
        for (name, value) in [("rho-start", rho_start), ("rho-end", rho_end)] {
            if let Some(v) = value {
                if !(v.is_finite() && v > 0.0) {
                    return Err(usage(format!("{name} = {v} must be finite and positive")));
                }
            }
        }
        if let (Some(start), Some(end)) = (rho_start, rho_end) {
            if start >= end {
                return Err(usage(format!(
                    "rho-start = {start} must lie strictly below rho-end = {end}"
                )));
            }
        }

        Ok(RunConfig {
            family,
            source,
            spec,
            context,
            m_max,
            grid,
            tolerance,
            output,
            sampling: Sampling {
                m,
                rho_start,
                rho_end,
                samples,
            },
        })
    }
}

/// Optional JSON config file mirroring the long options.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    family: Option<String>,
    #[serde(rename = "De")]
    de: Option<f64>,
    re: Option<f64>,
    #[serde(rename = "A")]
    a: Option<f64>,
    #[serde(rename = "B")]
    b: Option<f64>,
    #[serde(rename = "C")]
    c: Option<f64>,
    mu: Option<f64>,
    hbar: Option<f64>,
    m_max: Option<u32>,
    rho_min: Option<f64>,
    rho_max: Option<f64>,
    grid_points: Option<usize>,
    tolerance: Option<f64>,
    output: Option<String>,
    m: Option<u32>,
    rho_start: Option<f64>,
    rho_end: Option<f64>,
    samples: Option<usize>,
}

fn load_file(path: &Path) -> Result<FileConfig, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|err| usage(format!("config file {}: {err}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|err| usage(format!("config file {}: {err}", path.display())))
}

fn parse_family(name: &str) -> Result<Family, CliError> {
    match name {
        "pseudoharmonic" => Ok(Family::Pseudoharmonic),
        "kratzer" => Ok(Family::Kratzer),
        other => Err(usage(format!(
            "unknown family {other:?}: expected pseudoharmonic or kratzer"
        ))),
    }
}

fn parse_output(name: &str) -> Result<OutputFormat, CliError> {
    match name {
        "json" => Ok(OutputFormat::Json),
        "csv" => Ok(OutputFormat::Csv),
        other => Err(usage(format!("unknown output {other:?}: expected json or csv"))),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}
