//! Report record shared by every command, with text, JSON and CSV
//! renderings.
//!
//! JSON top-level keys are `protocol`, `input`, `outcomes`,
//! `probability_sum` and `checks`; `dims` and `impossibility` add a `table`.

use std::fmt::Write as _;

use serde::Serialize;
use symtele_core::{StateVector, C64};

use crate::complex::format_complex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    /// `None` marks a reported-only quantity that never fails the run.
    pub tolerance: Option<f64>,
    pub pass: bool,
}

impl Check {
    /// Passes when `residual <= tolerance`.
    pub fn within(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self { name: name.into(), residual, tolerance: Some(tolerance), pass: residual <= tolerance }
    }

    pub fn info(name: impl Into<String>, residual: f64) -> Self {
        Self { name: name.into(), residual, tolerance: None, pass: true }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Amplitude {
    pub label: String,
    pub value: String,
}

pub fn amplitudes(v: &StateVector) -> Vec<Amplitude> {
    v.basis().labels().iter().zip(v.amplitudes())
        .map(|(l, a)| Amplitude { label: l.clone(), value: format_complex(*a) })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OutcomeRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trial: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub protocol: Option<String>,
    pub kind: String,
    pub probability: f64,
    pub conditional: Vec<Amplitude>,
    pub corrected: Vec<Amplitude>,
    pub fidelity: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum InputRecord {
    State { alpha: String, beta: String },
    Sweep { trials: usize, seed: u64 },
    None {},
}

impl InputRecord {
    pub fn state(alpha: C64, beta: C64) -> Self {
        Self::State { alpha: format_complex(alpha), beta: format_complex(beta) }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// One row of the `trial,alpha_re,...` CSV layout.
#[derive(Clone, Debug, PartialEq)]
pub struct CsvRow {
    pub trial: usize,
    pub alpha: C64,
    pub beta: C64,
    pub kind: String,
    pub probability: f64,
    pub fidelity: f64,
}

pub const CSV_HEADER: &str = "trial,alpha_re,alpha_im,beta_re,beta_im,kind,probability,fidelity";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TeleportReport {
    pub protocol: String,
    pub input: InputRecord,
    pub outcomes: Vec<OutcomeRecord>,
    pub probability_sum: Option<f64>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Table>,
    #[serde(skip)]
    pub csv_rows: Vec<CsvRow>,
}

impl TeleportReport {
    pub fn new(protocol: &str, input: InputRecord) -> Self {
        Self {
            protocol: protocol.to_string(),
            input,
            outcomes: Vec::new(),
            probability_sum: None,
            checks: Vec::new(),
            table: None,
            csv_rows: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool { self.checks.iter().all(|c| c.pass) }

    pub fn failures(&self) -> impl Iterator<Item = &Check> { self.checks.iter().filter(|c| !c.pass) }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is plain data");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if !self.csv_rows.is_empty() {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for r in &self.csv_rows {
                let _ = writeln!(
                    out, "{},{:?},{:?},{:?},{:?},{},{:?},{:?}",
                    r.trial, r.alpha.re, r.alpha.im, r.beta.re, r.beta.im,
                    r.kind, r.probability, r.fidelity,
                );
            }
        } else if let Some(t) = &self.table {
            out.push_str(&t.columns.join(","));
            out.push('\n');
            for row in &t.rows {
                out.push_str(&row.join(","));
                out.push('\n');
            }
        } else {
            out.push_str("name,residual,tolerance,pass\n");
            for c in &self.checks {
                let tol = c.tolerance.map(|t| format!("{t:?}")).unwrap_or_default();
                let _ = writeln!(out, "{},{:?},{},{}", c.name, c.residual, tol, c.pass);
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "protocol: {}", self.protocol);
        match &self.input {
            InputRecord::State { alpha, beta } => {
                let _ = writeln!(out, "input: alpha = {alpha}, beta = {beta}");
            }
            InputRecord::Sweep { trials, seed } => {
                let _ = writeln!(out, "input: {trials} trials, seed {seed}");
            }
            InputRecord::None {} => {}
        }
        if let Some(t) = &self.table {
            out.push('\n');
            let widths: Vec<usize> = (0..t.columns.len())
                .map(|k| t.rows.iter().map(|r| r[k].len()).chain([t.columns[k].len()]).max().unwrap_or(0))
                .collect();
            let line = |cells: &[String]| {
                cells.iter().zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            let _ = writeln!(out, "{}", line(&t.columns));
            for row in &t.rows {
                let _ = writeln!(out, "{}", line(row));
            }
        }
        // sweeps carry hundreds of outcomes; summarize those through checks
        if !self.outcomes.is_empty() && self.outcomes.iter().all(|o| o.trial.is_none()) {
            out.push('\n');
            for o in &self.outcomes {
                let _ = writeln!(out, "{:<9} p = {:<22} fidelity = {}", o.kind, o.probability, o.fidelity);
                let nz = |v: &[Amplitude]| v.iter()
                    .filter(|a| a.value != "0.0+0.0i" && a.value != "-0.0+0.0i")
                    .map(|a| format!("{}: {}", a.label, a.value))
                    .collect::<Vec<_>>()
                    .join(", ");
                let _ = writeln!(out, "  conditional  {}", nz(&o.conditional));
                let _ = writeln!(out, "  corrected    {}", nz(&o.corrected));
            }
        } else if !self.outcomes.is_empty() {
            let _ = writeln!(out, "\n{} outcome records (use --format json or csv for details)", self.outcomes.len());
        }
        if let Some(p) = self.probability_sum {
            let _ = writeln!(out, "\nprobability sum: {p}");
        }
        out.push_str("\nchecks:\n");
        for c in &self.checks {
            let status = match (c.pass, c.tolerance) {
                (_, None) => "INFO",
                (true, _) => "PASS",
                (false, _) => "FAIL",
            };
            let tol = c.tolerance.map(|t| format!(" (tol {t:e})")).unwrap_or_default();
            let _ = writeln!(out, "  {status}  {:<48} {:.3e}{tol}", c.name, c.residual);
        }
        let _ = writeln!(out, "\n{}", if self.passed() { "all checks passed" } else { "CHECKS FAILED" });
        out
    }
}
