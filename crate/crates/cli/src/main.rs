//! `pdm-dirac` command-line front end.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage, domain or
//! I/O error, 3 an eigensolver did not converge.

mod args;
mod output;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::Parser;
use num_complex::Complex64;
use pdm_dirac::analytic::{oscillator_crossings, reference_levels, scarf2_crossings};
use pdm_dirac::discretize::{assemble_dirac, assemble_schrodinger};
use pdm_dirac::eigen::{certify_residuals, eigenvalues};
use pdm_dirac::oracle::{crossing_keys, oscillator_crossing_scan, scarf2_crossing_scan};
use pdm_dirac::suite::{self, match_report, SuiteConfig, LINE_TOL, PERIODIC_TOL};
use pdm_dirac::verify::{certified_levels, effective_cutoff, match_spectra, pairing_from_levels};
use pdm_dirac::{Comparison, EigenConfig, Grid, ModelSpec, Spectrum, VerificationReport};

use args::{Cli, Command, CrossingArgs, RunArgs, VerifyArgs};
use output::{CriterionSummary, Document, EigenRow, Meta, SpectrumLine};

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Io(String),
    NonConvergence(String),
}

impl From<pdm_dirac::Error> for Failure {
    fn from(e: pdm_dirac::Error) -> Self {
        match e {
            pdm_dirac::Error::Convergence { .. } => Failure::NonConvergence(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Io(_) => 2,
            Failure::NonConvergence(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Io(m) | Failure::NonConvergence(m) => m,
        }
    }
}

/// What a command produced, and whether its checks held.
struct Outcome {
    doc: Document,
    passed: bool,
    non_convergence: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("pdm-dirac: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let (outcome, out) = match cli.command {
        Command::Spectrum(a) => (spectrum(&a)?, a.out),
        Command::Dirac(a) => (dirac(&a)?, a.out),
        Command::Verify(a) => (verify(&a)?, a.out),
        Command::Crossings(a) => (crossings(&a)?, a.out),
    };
    let text = outcome.doc.render(out.format)?;
    output::emit(&text, out.output.as_deref())?;
    Ok(if outcome.non_convergence {
        3
    } else if outcome.passed {
        0
    } else {
        1
    })
}

fn default_tol(spec: &ModelSpec) -> f64 {
    match spec {
        ModelSpec::PeriodicPseudo => PERIODIC_TOL,
        _ => LINE_TOL,
    }
}

fn meta(command: &str, spec: Option<&ModelSpec>, grid: Option<Grid>, tolerances: BTreeMap<String, f64>) -> Meta {
    Meta {
        command: command.into(),
        model: spec.map_or("suite".into(), |s| s.name().to_string()),
        params: spec.map_or_else(BTreeMap::new, |s| s.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect()),
        grid,
        tolerances,
        version: pdm_dirac::VERSION,
    }
}

fn rows(spectrum: &Spectrum) -> Vec<Option<f64>> {
    let residuals = spectrum.residuals.clone().unwrap_or_default();
    (0..spectrum.len()).map(|i| residuals.get(i).copied().filter(|r| !r.is_nan())).collect()
}

fn eigen_rows(values: &[Complex64], residuals: &[Option<f64>]) -> Vec<EigenRow> {
    values.iter().zip(residuals).map(|(z, r)| EigenRow { re: z.re, im: z.im, residual: *r }).collect()
}

fn spectrum(a: &RunArgs) -> Result<Outcome, Failure> {
    let spec = a.model.spec()?;
    let grid = a.grid(&spec, false)?;
    let omega = a.omega();
    let cfg = EigenConfig::default();
    let op = assemble_schrodinger(&spec, omega, &grid)?;
    let mut spectrum = eigenvalues(&op, &cfg)?;
    let cutoff = a.cutoff.unwrap_or_else(|| effective_cutoff(&spec, &grid, &spectrum));
    let tol = a.tol.unwrap_or_else(|| default_tol(&spec));
    certify_residuals(&op, &mut spectrum, |z| z.re < cutoff, &cfg);

    let mut reference = reference_levels(&spec, omega, Some(cutoff));
    if let Some(q) = a.quasi_parity {
        reference.retain(|l| l.quasi_parity.is_none_or(|lq| lq == q));
    }
    let mut reports = Vec::new();
    if !reference.is_empty() {
        let m = match_spectra(&spectrum, &reference, tol, cutoff)?;
        let analytic: Vec<f64> = reference.iter().map(|l| l.lambda).collect();
        let q = a.quasi_parity.map(|q| format!("/q={q}")).unwrap_or_default();
        reports.push(match_report(&format!("spectrum/{}/omega={omega}{q}", spec.name()), &m, &analytic, false));
    }
    let residuals = rows(&spectrum);
    let lines = spectrum
        .eigenvalues
        .iter()
        .zip(&residuals)
        .map(|(&lambda, &residual)| {
            let root = lambda.sqrt();
            SpectrumLine { lambda, energy_plus: root, energy_minus: -root, residual }
        })
        .collect();
    let passed = reports.iter().all(VerificationReport::passed);
    let tolerances = BTreeMap::from([("match_tol".to_string(), tol), ("cutoff".to_string(), cutoff)]);
    Ok(Outcome {
        doc: Document {
            meta: meta("spectrum", Some(&spec), Some(grid), tolerances),
            eigenvalues: eigen_rows(&spectrum.eigenvalues, &residuals),
            reports,
            crossings: None,
            criteria: None,
            lines,
            outcomes: Vec::new(),
        },
        passed,
        non_convergence: false,
    })
}

fn dirac(a: &RunArgs) -> Result<Outcome, Failure> {
    let spec = a.model.spec()?;
    let grid = a.grid(&spec, true)?;
    let cfg = EigenConfig::default();
    let tol = a.tol.unwrap_or_else(|| default_tol(&spec));
    let op = assemble_dirac(&spec, &grid)?;
    let mut spectrum = eigenvalues(&op, &cfg)?;
    let levels = certified_levels(&spec, &grid, tol, &cfg)?;
    let cutoff = a.cutoff.unwrap_or_else(|| {
        spec.continuum_cutoff(grid.x_min, grid.x_max)
            .unwrap_or_else(|| levels.iter().copied().fold(0.0, f64::max) + 1.0)
    });
    certify_residuals(&op, &mut spectrum, |e| (e * e).re < cutoff, &cfg);
    let report = pairing_from_levels(spec.name(), &levels, &spectrum, tol);
    let residuals = rows(&spectrum);
    let lines = spectrum
        .eigenvalues
        .iter()
        .zip(&residuals)
        .map(|(&e, &residual)| SpectrumLine { lambda: e * e, energy_plus: e, energy_minus: -e, residual })
        .collect();
    let passed = report.passed();
    let tolerances = BTreeMap::from([("match_tol".to_string(), tol), ("cutoff".to_string(), cutoff)]);
    Ok(Outcome {
        doc: Document {
            meta: meta("dirac", Some(&spec), Some(grid), tolerances),
            eigenvalues: eigen_rows(&spectrum.eigenvalues, &residuals),
            reports: vec![report],
            crossings: None,
            criteria: None,
            lines,
            outcomes: Vec::new(),
        },
        passed,
        non_convergence: false,
    })
}

fn verify(a: &VerifyArgs) -> Result<Outcome, Failure> {
    let ids = args::parse_suite(&a.suite)?;
    let outcomes = suite::run_suite(&ids, &SuiteConfig::default());
    let passed = outcomes.iter().all(|o| o.passed());
    let non_convergence = outcomes.iter().any(|o| o.non_convergence);
    let tolerances = BTreeMap::from([("line_tol".to_string(), LINE_TOL), ("periodic_tol".to_string(), PERIODIC_TOL)]);
    Ok(Outcome {
        doc: Document {
            meta: meta("verify", None, None, tolerances),
            eigenvalues: Vec::new(),
            reports: outcomes.iter().flat_map(|o| o.reports.iter().cloned()).collect(),
            crossings: None,
            criteria: Some(outcomes.iter().map(CriterionSummary::from).collect()),
            lines: Vec::new(),
            outcomes,
        },
        passed,
        non_convergence,
    })
}

fn crossings(a: &CrossingArgs) -> Result<Outcome, Failure> {
    let spec = a.model.spec()?;
    let (pairs, scan) = match &spec {
        ModelSpec::ShiftedOscillator(p) => (oscillator_crossings(p, a.n_max), oscillator_crossing_scan(p, a.n_max)),
        ModelSpec::ScarfII(p) => (scarf2_crossings(p, a.n_max), scarf2_crossing_scan(p, a.n_max)),
        _ => return Err(Failure::Usage(format!("no crossing formulas for --model {}", spec.name()))),
    };
    let formula = crossing_keys(&pairs);
    let agree = formula == scan;
    let report = VerificationReport::evaluate(
        format!("crossings/{}/scan", spec.name()),
        vec![formula.len() as f64],
        vec![scan.len() as f64],
        0.0,
        Comparison::Abs,
        agree,
        format!("closed-form pairs vs brute-force scan up to n = {}: {}", a.n_max, if agree { "identical" } else { "differ" }),
    );
    let shown: Vec<_> = pairs
        .into_iter()
        .filter(|p| a.omega.is_none_or(|w| p.first.omega == w))
        .collect();
    let passed = report.passed();
    Ok(Outcome {
        doc: Document {
            meta: meta("crossings", Some(&spec), None, BTreeMap::new()),
            eigenvalues: Vec::new(),
            reports: vec![report],
            crossings: Some(shown),
            criteria: None,
            lines: Vec::new(),
            outcomes: Vec::new(),
        },
        passed,
        non_convergence: false,
    })
}
