//! Table, CSV and JSON emitters. Every float goes out with 12 significant
//! digits so that identical runs give identical bytes.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use num_complex::Complex64;
use pdm_dirac::analytic::CrossingPair;
use pdm_dirac::suite::CriterionOutcome;
use pdm_dirac::{Grid, ReportStatus, VerificationReport};
use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};

use crate::args::Format;
use crate::Failure;

pub const CSV_HEADER: [&str; 8] = [
    "index",
    "lambda_re",
    "lambda_im",
    "energy_plus_re",
    "energy_plus_im",
    "energy_minus_re",
    "energy_minus_im",
    "residual",
];

#[derive(Serialize, Debug)]
pub struct Meta {
    pub command: String,
    pub model: String,
    pub params: BTreeMap<String, f64>,
    pub grid: Option<Grid>,
    pub tolerances: BTreeMap<String, f64>,
    pub version: &'static str,
}

#[derive(Serialize, Debug)]
pub struct EigenRow {
    pub re: f64,
    pub im: f64,
    pub residual: Option<f64>,
}

#[derive(Serialize, Debug)]
pub struct CriterionSummary {
    pub id: u32,
    pub title: String,
    pub passed: bool,
    pub error: Option<String>,
}

impl From<&CriterionOutcome> for CriterionSummary {
    fn from(o: &CriterionOutcome) -> Self {
        Self { id: o.id, title: o.title.clone(), passed: o.passed(), error: o.error.clone() }
    }
}

/// One spectrum row: `λ`, the two signed energies and the certificate.
#[derive(Clone, Copy, Debug)]
pub struct SpectrumLine {
    pub lambda: Complex64,
    pub energy_plus: Complex64,
    pub energy_minus: Complex64,
    pub residual: Option<f64>,
}

#[derive(Serialize, Debug)]
pub struct Document {
    pub meta: Meta,
    pub eigenvalues: Vec<EigenRow>,
    pub reports: Vec<VerificationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crossings: Option<Vec<CrossingPair>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub criteria: Option<Vec<CriterionSummary>>,
    #[serde(skip)]
    pub lines: Vec<SpectrumLine>,
    #[serde(skip)]
    pub outcomes: Vec<CriterionOutcome>,
}

/// `%.12g`: 12 significant digits, fixed notation for moderate exponents.
pub fn sig12(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// Pretty JSON whose floats are written by [`sig12`].
struct Sig12Formatter(PrettyFormatter<'static>);

impl Formatter for Sig12Formatter {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        let text = sig12(value);
        // Keep floats recognizable as floats after a round trip.
        if text.contains(['.', 'e']) {
            w.write_all(text.as_bytes())
        } else {
            write!(w, "{text}.0")
        }
    }

    fn begin_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

pub fn to_json_text(value: &impl Serialize) -> Result<String, Failure> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Sig12Formatter(PrettyFormatter::new()));
    value.serialize(&mut ser).map_err(|e| Failure::Io(e.to_string()))?;
    buf.push(b'\n');
    String::from_utf8(buf).map_err(|e| Failure::Io(e.to_string()))
}

fn complex(z: Complex64) -> String {
    if z.im == 0.0 {
        sig12(z.re)
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{}{sign}{}i", sig12(z.re), sig12(z.im.abs()))
    }
}

fn optional(x: Option<f64>) -> String {
    x.map(sig12).unwrap_or_default()
}

fn status_word(s: ReportStatus) -> &'static str {
    match s {
        ReportStatus::Pass => "PASS",
        ReportStatus::Fail => "FAIL",
        ReportStatus::Informational => "INFO",
    }
}

/// Largest per-entry deviation of a report, NaN when nothing was compared.
fn max_deviation(r: &VerificationReport) -> f64 {
    r.measured
        .iter()
        .zip(&r.expected)
        .map(|(m, e)| r.comparison.deviation(*m, *e))
        .fold(f64::NAN, f64::max)
}

impl Document {
    pub fn to_json(&self) -> Result<String, Failure> {
        to_json_text(self)
    }

    pub fn to_csv(&self) -> Result<String, Failure> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Failure::Io(e.to_string());
        if let Some(crossings) = &self.crossings {
            w.write_record([
                "branch", "first_n", "first_quasi_parity", "first_omega", "second_n", "second_quasi_parity",
                "second_omega", "level_re", "level_im", "observable",
            ])
            .map_err(io)?;
            let q = |q: Option<pdm_dirac::QuasiParity>| q.map(|q| q.to_string()).unwrap_or_default();
            for c in crossings {
                let branch = match c.branch {
                    pdm_dirac::CrossingBranch::Positive => "positive",
                    pdm_dirac::CrossingBranch::Negative => "negative",
                };
                w.write_record([
                    branch.to_string(),
                    c.first.n.to_string(),
                    q(c.first.quasi_parity),
                    c.first.omega.to_string(),
                    c.second.n.to_string(),
                    q(c.second.quasi_parity),
                    c.second.omega.to_string(),
                    sig12(c.level.re),
                    sig12(c.level.im),
                    c.observable.to_string(),
                ])
                .map_err(io)?;
            }
        } else if self.criteria.is_some() {
            w.write_record(["criterion", "claim_id", "status", "max_deviation", "tolerance", "comparison"])
                .map_err(io)?;
            for o in &self.outcomes {
                if let Some(e) = &o.error {
                    w.write_record([o.id.to_string(), "error".into(), "FAIL".into(), String::new(), String::new(), e.clone()])
                        .map_err(io)?;
                }
                for r in &o.reports {
                    w.write_record([
                        o.id.to_string(),
                        r.claim_id.clone(),
                        status_word(r.status).to_string(),
                        sig12(max_deviation(r)),
                        sig12(r.tolerance),
                        format!("{:?}", r.comparison).to_lowercase(),
                    ])
                    .map_err(io)?;
                }
            }
        } else {
            w.write_record(CSV_HEADER).map_err(io)?;
            for (i, l) in self.lines.iter().enumerate() {
                w.write_record([
                    i.to_string(),
                    sig12(l.lambda.re),
                    sig12(l.lambda.im),
                    sig12(l.energy_plus.re),
                    sig12(l.energy_plus.im),
                    sig12(l.energy_minus.re),
                    sig12(l.energy_minus.im),
                    optional(l.residual),
                ])
                .map_err(io)?;
            }
        }
        let bytes = w.into_inner().map_err(|e| Failure::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Failure::Io(e.to_string()))
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let m = &self.meta;
        out.push_str(&format!("# {} {} (version {})\n", m.command, m.model, m.version));
        if !m.params.is_empty() {
            let p: Vec<String> = m.params.iter().map(|(k, v)| format!("{k} = {}", sig12(*v))).collect();
            out.push_str(&format!("# params: {}\n", p.join(", ")));
        }
        if let Some(g) = &m.grid {
            out.push_str(&format!(
                "# grid: ({}, {}), N = {}, h = {}, shift = {}\n",
                sig12(g.x_min),
                sig12(g.x_max),
                g.n_interior,
                sig12(g.spacing),
                sig12(g.shift)
            ));
        }
        if !m.tolerances.is_empty() {
            let t: Vec<String> = m.tolerances.iter().map(|(k, v)| format!("{k} = {}", sig12(*v))).collect();
            out.push_str(&format!("# {}\n", t.join(", ")));
        }
        if !self.lines.is_empty() {
            out.push_str(&format!("{:>6}  {:<36}  {:<36}  {}\n", "index", "lambda", "energy (+)", "residual"));
            for (i, l) in self.lines.iter().enumerate() {
                out.push_str(&format!(
                    "{i:>6}  {:<36}  {:<36}  {}\n",
                    complex(l.lambda),
                    complex(l.energy_plus),
                    optional(l.residual)
                ));
            }
        }
        if let Some(crossings) = &self.crossings {
            out.push_str(&format!("{} crossing pairs\n", crossings.len()));
            for c in crossings {
                let q = |q: Option<pdm_dirac::QuasiParity>| q.map(|q| format!(" q={q}")).unwrap_or_default();
                out.push_str(&format!(
                    "{:?} (n={}{}) ~ (n={}{}) at E = {}{}\n",
                    c.branch,
                    c.first.n,
                    q(c.first.quasi_parity),
                    c.second.n,
                    q(c.second.quasi_parity),
                    complex(c.level),
                    if c.observable { "" } else { " [formula only]" }
                ));
            }
        }
        if self.criteria.is_some() {
            for o in &self.outcomes {
                out.push_str(&o.summary_line());
                out.push('\n');
                for line in o.detail_lines() {
                    out.push_str(&line);
                    out.push('\n');
                }
            }
        } else {
            for r in &self.reports {
                out.push_str(&format!(
                    "{} {}: max deviation {} (tol {}, {:?}) {}\n",
                    status_word(r.status),
                    r.claim_id,
                    sig12(max_deviation(r)),
                    sig12(r.tolerance),
                    r.comparison,
                    r.notes
                ));
            }
        }
        out
    }

    pub fn render(&self, format: Format) -> Result<String, Failure> {
        match format {
            Format::Table => Ok(self.to_table()),
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }
}

pub fn emit(text: &str, destination: Option<&Path>) -> Result<(), Failure> {
    let result = match destination {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(text.as_bytes())),
        None => match io::stdout().lock().write_all(text.as_bytes()) {
            // A closed pipe (`| head`) is the reader's choice, not an error.
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
            other => other,
        },
    };
    result.map_err(|e| match destination {
        Some(p) => Failure::Io(format!("{}: {e}", p.display())),
        None => Failure::Io(e.to_string()),
    })
}
