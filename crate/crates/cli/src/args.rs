use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pdm_dirac::discretize::make_grid;
use pdm_dirac::{BranchLabel, Grid, ModelSpec, OscillatorParams, QuasiParity, ScarfParams};

use crate::Failure;

#[derive(Parser, Debug)]
#[command(name = "pdm-dirac", version, about = "Spectra and certification runs for position-dependent-mass Dirac models")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Eigenvalues of the Schrödinger-like partner operator H_ω.
    Spectrum(RunArgs),
    /// Eigenvalues of the 2N×2N Dirac operator.
    Dirac(RunArgs),
    /// Run the acceptance suite.
    Verify(VerifyArgs),
    /// Closed-form energy-level crossings, checked against a brute-force scan.
    Crossings(CrossingArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    Oscillator,
    Scarf2,
    Periodic,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct ModelArgs {
    #[arg(long, value_enum, default_value = "scarf2")]
    pub model: ModelKind,
    /// Scarf II A.
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<f64>,
    /// Scarf II B, or the oscillator strength B.
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b: Option<f64>,
    /// Oscillator core parameter α.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Oscillator contour offset b (z = x − ib).
    #[arg(long, allow_hyphen_values = true)]
    pub shift: Option<f64>,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Branch ω: +1 or -1.
    #[arg(long, value_parser = parse_label::<BranchLabel>, allow_hyphen_values = true)]
    pub omega: Option<BranchLabel>,
    /// Restrict the oscillator reference levels to one quasi-parity: +1 or -1.
    #[arg(long = "quasi-parity", value_parser = parse_label::<QuasiParity>, allow_hyphen_values = true)]
    pub quasi_parity: Option<QuasiParity>,
    /// Symmetric half-width: the interval is (−L, L).
    #[arg(long = "L", conflicts_with_all = ["x_min", "x_max"])]
    pub half_width: Option<f64>,
    #[arg(long = "x-min", allow_hyphen_values = true, requires = "x_max")]
    pub x_min: Option<f64>,
    #[arg(long = "x-max", allow_hyphen_values = true, requires = "x_min")]
    pub x_max: Option<f64>,
    /// Number of interior grid points.
    #[arg(long)]
    pub n: Option<usize>,
    /// Matching tolerance against the closed-form levels.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Levels above this value are not matched or certified.
    #[arg(long, allow_hyphen_values = true)]
    pub cutoff: Option<f64>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// `all` or a comma-separated list of criterion numbers.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct CrossingArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Only list crossings of this energy family.
    #[arg(long, value_parser = parse_label::<BranchLabel>, allow_hyphen_values = true)]
    pub omega: Option<BranchLabel>,
    #[arg(long = "n-max", default_value_t = pdm_dirac::analytic::DEFAULT_CROSSING_N_MAX)]
    pub n_max: u32,
    #[command(flatten)]
    pub out: OutputArgs,
}

fn parse_label<T: FromStr<Err = String>>(s: &str) -> Result<T, String> {
    s.parse()
}

impl ModelArgs {
    /// Builds the model, filling unset parameters with the reference values.
    pub fn spec(&self) -> Result<ModelSpec, Failure> {
        let reject = |flag: &str, set: bool| {
            if set {
                Err(Failure::Usage(format!("{flag} does not apply to --model {}", self.model_name())))
            } else {
                Ok(())
            }
        };
        match self.model {
            ModelKind::Oscillator => {
                reject("--A", self.a.is_some())?;
                let p = OscillatorParams::new(
                    self.b.unwrap_or(2.0),
                    self.alpha.unwrap_or(0.25),
                    self.shift.unwrap_or(1.0),
                )?;
                Ok(ModelSpec::ShiftedOscillator(p))
            }
            ModelKind::Scarf2 => {
                reject("--alpha", self.alpha.is_some())?;
                reject("--shift", self.shift.is_some())?;
                Ok(ModelSpec::ScarfII(ScarfParams::new(self.a.unwrap_or(2.5), self.b.unwrap_or(1.5))?))
            }
            ModelKind::Periodic => {
                reject("--A", self.a.is_some())?;
                reject("--B", self.b.is_some())?;
                reject("--alpha", self.alpha.is_some())?;
                reject("--shift", self.shift.is_some())?;
                Ok(ModelSpec::PeriodicPseudo)
            }
        }
    }

    fn model_name(&self) -> &'static str {
        match self.model {
            ModelKind::Oscillator => "oscillator",
            ModelKind::Scarf2 => "scarf2",
            ModelKind::Periodic => "periodic",
        }
    }
}

impl RunArgs {
    /// `odd_default` lowers an even default N by one, which keeps the
    /// central first derivative from shifting box modes by half a level.
    pub fn grid(&self, spec: &ModelSpec, odd_default: bool) -> Result<Grid, Failure> {
        let (a, b, mut n) = spec.default_grid().expect("catalog model");
        if odd_default && n % 2 == 0 {
            n -= 1;
        }
        let (a, b) = match (self.half_width, self.x_min, self.x_max) {
            (Some(l), _, _) => (-l, l),
            (None, Some(lo), Some(hi)) => (lo, hi),
            _ => (a, b),
        };
        Ok(make_grid(a, b, self.n.unwrap_or(n), spec.contour_shift())?)
    }

    pub fn omega(&self) -> BranchLabel {
        self.omega.unwrap_or(BranchLabel::Plus)
    }
}

/// `all` or `1,3,5`.
pub fn parse_suite(s: &str) -> Result<Vec<u32>, Failure> {
    if s.trim() == "all" {
        return Ok(pdm_dirac::suite::all_ids());
    }
    let mut ids = Vec::new();
    for part in s.split(',') {
        let id: u32 = part
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("bad criterion id '{part}' in --suite")))?;
        if pdm_dirac::suite::title(id).is_none() {
            return Err(Failure::Usage(format!("no criterion {id}")));
        }
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    ids.sort_unstable();
    Ok(ids)
}
