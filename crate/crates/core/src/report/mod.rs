//! Tables, file formats and the command-line front end.

pub mod cli;
pub mod config;
pub mod figures;

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::measures::MeasureError;
use crate::numerics::NumericsError;
use crate::thresholds::{Exponent, ThresholdError, ThresholdReport};

pub use figures::{figure_table, FigureName, FigureParams};

/// Any failure of a command, with a stable machine-readable kind.
#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error(transparent)]
    Threshold(#[from] ThresholdError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error("{measure} has no Fourier transform evaluator")]
    NoEvaluator { measure: String },
    #[error("unsupported figure {0:?}")]
    UnsupportedFigure(String),
    #[error("bad parameter {name}: {reason}")]
    BadParameter { name: String, reason: String },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl ReportError {
    /// Name of the innermost error variant, e.g. `LowerBoundSpectrum`.
    pub fn kind(&self) -> String {
        let debug = match self {
            ReportError::Measure(MeasureError::Spectrum(e)) => format!("{e:?}"),
            ReportError::Measure(MeasureError::Invalid(e)) => format!("{e:?}"),
            ReportError::Measure(e) => format!("{e:?}"),
            ReportError::Threshold(ThresholdError::Spectrum(e)) => format!("{e:?}"),
            ReportError::Threshold(e) => format!("{e:?}"),
            ReportError::Numerics(e) => format!("{e:?}"),
            ReportError::NoEvaluator { .. } => "NoEvaluator".into(),
            ReportError::UnsupportedFigure(_) => "UnsupportedFigure".into(),
            ReportError::BadParameter { .. } => "BadParameter".into(),
            ReportError::Io { .. } => "Io".into(),
        };
        debug.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
    }

    /// Errors caused by the invocation rather than by the computation.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            ReportError::Measure(MeasureError::Parse { .. })
                | ReportError::UnsupportedFigure(_)
                | ReportError::BadParameter { .. }
        )
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "kind": self.kind(), "message": self.to_string() } })
    }
}

/// 12 significant digits, then the shortest representation that round-trips.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    let s = format!("{rounded}");
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

/// One table entry.
#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Num(f64),
    Bool(bool),
    Text(String),
    Empty,
}

impl Cell {
    /// Text as written to CSV.
    pub fn render(&self) -> String {
        match self {
            Cell::Num(x) => format_float(*x),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) if x.is_finite() => {
                let v: f64 = format_float(*x).parse().expect("formatted float parses");
                json!(v)
            }
            Cell::Num(_) | Cell::Empty => Value::Null,
            Cell::Bool(b) => json!(b),
            Cell::Text(s) => json!(s),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Num)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

/// Column-labelled rows plus key/value notes.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub notes: Vec<(String, String)>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self { columns: columns.iter().map(|c| c.to_string()).collect(), ..Self::default() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn note(&mut self, key: &str, value: impl Into<String>) {
        self.notes.push((key.to_string(), value.into()));
    }

    pub fn column(&self, name: &str) -> Option<Vec<&Cell>> {
        let idx = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| &r[idx]).collect())
    }
}

/// What the `#` header of a CSV file records.
#[derive(Clone, Debug, PartialEq)]
pub struct CsvMeta {
    pub version: String,
    pub command_line: String,
    pub config_hash: String,
}

pub fn to_csv(table: &Table, meta: &CsvMeta) -> String {
    let mut out = String::new();
    writeln!(out, "# fsl {}", meta.version).unwrap();
    writeln!(out, "# command: {}", meta.command_line).unwrap();
    writeln!(out, "# config-sha256: {}", meta.config_hash).unwrap();
    for (k, v) in &table.notes {
        writeln!(out, "# {k}: {v}").unwrap();
    }
    writeln!(out, "{}", table.columns.join(",")).unwrap();
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(Cell::render).collect();
        writeln!(out, "{}", cells.join(",")).unwrap();
    }
    out
}

pub fn to_json(table: &Table, meta: &CsvMeta) -> Value {
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|row| {
            let obj: Map<String, Value> = table.columns.iter().cloned().zip(row.iter().map(Cell::json)).collect();
            Value::Object(obj)
        })
        .collect();
    let notes: Map<String, Value> = table.notes.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    json!({
        "meta": { "version": meta.version, "command": meta.command_line, "config_sha256": meta.config_hash },
        "notes": notes,
        "rows": rows,
    })
}

fn exponent_cell(e: &Option<Exponent>) -> String {
    match e {
        None => "unknown".into(),
        Some(e) => {
            let rel = match (e.side(), e.openness()) {
                (crate::thresholds::Side::Above, crate::thresholds::Openness::Open) => "q >",
                (crate::thresholds::Side::Above, crate::thresholds::Openness::Closed) => "q >=",
                (crate::thresholds::Side::Below, crate::thresholds::Openness::Open) => "q <",
                (crate::thresholds::Side::Below, crate::thresholds::Openness::Closed) => "q <=",
            };
            if e.exact().is_some() && !e.is_infinite() {
                format!("{rel} {} ({})", e.display(), format_float(e.value()))
            } else {
                format!("{rel} {}", e.display())
            }
        }
    }
}

/// Human-readable rendering of a threshold report.
pub fn render_report(report: &ThresholdReport) -> String {
    let mut out = String::new();
    let kind = format!("{:?}", report.kind).to_lowercase();
    writeln!(out, "measure            {}", report.measure).unwrap();
    writeln!(out, "ambient dimension  {}", report.d).unwrap();
    writeln!(out, "spectrum kind      {kind}").unwrap();
    writeln!(out, "Frostman dim       {}", format_float(report.frostman_dim)).unwrap();
    writeln!(out, "Fourier dim        {}", format_float(report.fourier_dim)).unwrap();
    writeln!(out, "Sobolev dim        {}", format_float(report.sobolev_dim)).unwrap();
    writeln!(out, "theta*             {} ({:?})", format_float(report.theta_star), report.regime).unwrap();
    writeln!(out).unwrap();
    writeln!(out, "restriction holds").unwrap();
    writeln!(out, "  Stein-Tomas      {}", exponent_cell(&report.stein_tomas)).unwrap();
    let theta_opt = report.theta_opt.map(|t| format!(" at theta = {}", format_float(t))).unwrap_or_default();
    writeln!(out, "  interpolation    {}{theta_opt}", exponent_cell(&report.main)).unwrap();
    writeln!(out, "  4/theta*         {}", exponent_cell(&report.corollary_4_over_theta)).unwrap();
    writeln!(out, "  Sobolev          {}", exponent_cell(&report.sobolev)).unwrap();
    writeln!(out, "restriction fails").unwrap();
    writeln!(out, "  spectrum         {}", exponent_cell(&report.converse_fail_below)).unwrap();
    writeln!(out, "  Sobolev dim      {}", exponent_cell(&report.hambrook_laba_fail_below)).unwrap();
    let interval = match report.improvement_interval {
        Some((a, b)) => format!("({}, {})", format_float(a), format_float(b)),
        None => "none".into(),
    };
    writeln!(out, "improvement on Stein-Tomas for theta in {interval}").unwrap();
    writeln!(out, "no restriction for any finite q: {}", report.no_restriction_flag).unwrap();
    for note in &report.notes {
        writeln!(out, "note: {note}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format() {
        assert_eq!(format_float(11.0 / 3.0), "3.66666666667");
        assert_eq!(format_float(4.0), "4");
        assert_eq!(format_float(0.1 + 0.2), "0.3");
        assert_eq!(format_float(-0.0), "0");
        assert_eq!(format_float(f64::INFINITY), "inf");
        assert_eq!(format_float(1.23456789012345e-7), "0.000000123456789012");
    }

    #[test]
    fn csv_layout() {
        let mut t = Table::new(&["d", "q"]);
        t.push(vec![Cell::Num(5.0), Cell::Num(11.0 / 3.0)]);
        t.push(vec![Cell::Num(6.0), Cell::Empty]);
        t.note("cutoff", "0.1");
        let meta = CsvMeta { version: "0.1.0".into(), command_line: "fsl figure cone".into(), config_hash: "ab".into() };
        assert_eq!(
            to_csv(&t, &meta),
            "# fsl 0.1.0\n# command: fsl figure cone\n# config-sha256: ab\n# cutoff: 0.1\nd,q\n5,3.66666666667\n6,\n"
        );
        let j = to_json(&t, &meta);
        assert_eq!(j["rows"][0]["q"], 3.66666666667);
        assert!(j["rows"][1]["q"].is_null());
    }

    #[test]
    fn error_kinds() {
        let e = ReportError::Threshold(ThresholdError::LowerBoundSpectrum);
        assert_eq!(e.kind(), "LowerBoundSpectrum");
        assert!(!e.is_usage());
        let e = ReportError::Measure(MeasureError::ProbabilityOutOfRange(2.0));
        assert_eq!(e.kind(), "ProbabilityOutOfRange");
        let p = ReportError::Measure(MeasureError::Parse { input: "x".into(), reason: "y".into() });
        assert!(p.is_usage());
        assert_eq!(p.to_json()["error"]["kind"], "Parse");
    }
}
