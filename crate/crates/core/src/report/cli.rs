//! `fsl`: thresholds, figure data, spectrum estimates.
//!
//! Exit codes: 0 success, 1 usage or descriptor error, 2 computation error.
//! Errors are written to stderr as `{"error": {"kind", "message"}}`.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use super::config::{config_hash, Config};
use super::figures::{figure_table, spectrum_table, FigureName, FigureParams, LinearGrid};
use super::{format_float, render_report, to_csv, to_json, Cell, CsvMeta, ReportError, Table};
use crate::measures::{parse_descriptor, MeasureDescriptor, MeasureDims};
use crate::numerics::{estimate_spectrum, EvaluatorKind, QuadratureBudget};
use crate::scalar::Scalar;
use crate::spectrum::PiecewiseLinearSpectrum;
use crate::thresholds::{
    converse_q, corollary_q, full_report, hambrook_laba_q, improvement_interval, main_q, no_restriction_guard, sobolev_q,
    stein_tomas_q_dim, Exponent,
};

#[derive(Debug, Parser)]
#[command(name = "fsl", version, about = "Fourier restriction exponents from Fourier spectra")]
struct Cli {
    /// JSON file with default parameters; command-line flags take precedence.
    #[arg(long, global = true)]
    config: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Restriction and failure thresholds for a measure.
    Thresholds {
        /// e.g. cone:5, moment:8, cantor:0.6+salem:0.067, custom:@spec.json
        descriptor: String,
        #[arg(long)]
        json: bool,
        /// Also write the JSON report here.
        #[arg(long)]
        out: Option<String>,
        /// Compute a single threshold; errors if the spectrum kind cannot support it.
        #[arg(long, value_enum)]
        query: Option<Query>,
    },
    /// Data for one of the threshold or spectrum plots.
    Figure {
        /// cone, moment, fractal, improvement or spectrum
        name: String,
        #[arg(long)]
        dmin: Option<u32>,
        #[arg(long)]
        dmax: Option<u32>,
        /// Cantor weight for the fractal figure.
        #[arg(long)]
        p: Option<f64>,
        /// start:stop:count
        #[arg(long)]
        eps_grid: Option<String>,
        #[arg(long)]
        out: Option<String>,
        /// csv or json
        #[arg(long)]
        format: Option<String>,
        /// Add the q = d curve of the published moment-curve plot.
        #[arg(long)]
        paper_overlay: bool,
        /// Sample d on this non-integer step using the closed forms.
        #[arg(long)]
        dense_step: Option<f64>,
        /// Number of theta samples.
        #[arg(long)]
        grid: Option<usize>,
        /// Descriptor for the spectrum figure.
        #[arg(long)]
        measure: Option<String>,
        #[arg(long)]
        fourier_dim: Option<f64>,
        #[arg(long)]
        frostman_dim: Option<f64>,
        #[arg(long)]
        sobolev_dim: Option<f64>,
        #[arg(long)]
        ambient_dim: Option<u32>,
    },
    /// Estimate spectrum values from dyadic shell energies.
    Estimate {
        descriptor: String,
        /// Comma-separated theta values.
        #[arg(long, value_delimiter = ',')]
        theta: Option<Vec<f64>>,
        #[arg(long)]
        jmin: Option<u32>,
        #[arg(long)]
        jmax: Option<u32>,
        #[arg(long)]
        nodes_per_unit: Option<usize>,
        /// CSV of the individual shell integrals.
        #[arg(long)]
        out: Option<String>,
    },
    /// Tabulate the model spectrum of a measure.
    Spectrum {
        descriptor: String,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        format: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Query {
    All,
    SteinTomas,
    Main,
    Corollary,
    Sobolev,
    Converse,
    HambrookLaba,
    Improvement,
    Guard,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Csv,
    Json,
}

fn parse_format(s: Option<&str>) -> Result<Format, ReportError> {
    match s.unwrap_or("csv") {
        "csv" => Ok(Format::Csv),
        "json" => Ok(Format::Json),
        other => Err(ReportError::BadParameter { name: "format".into(), reason: format!("{other:?} is not csv or json") }),
    }
}

/// Writers and invocation details shared by the subcommands.
struct Ctx<'a> {
    stdout: &'a mut dyn Write,
    command_line: String,
}

impl Ctx<'_> {
    fn print(&mut self, text: &str) -> Result<(), ReportError> {
        self.stdout.write_all(text.as_bytes()).map_err(|source| ReportError::Io { path: "<stdout>".into(), source })
    }

    fn emit(&mut self, text: &str, out: Option<&str>) -> Result<(), ReportError> {
        match out {
            Some(path) => std::fs::write(path, text).map_err(|source| ReportError::Io { path: path.to_string(), source }),
            None => self.print(text),
        }
    }

    fn emit_table<P: Serialize>(&mut self, table: &Table, params: &P, format: Format, out: Option<&str>) -> Result<(), ReportError> {
        let meta = CsvMeta {
            version: env!("CARGO_PKG_VERSION").to_string(),
            command_line: self.command_line.clone(),
            config_hash: config_hash(params),
        };
        let text = match format {
            Format::Csv => to_csv(table, &meta),
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&to_json(table, &meta)).expect("json")),
        };
        self.emit(&text, out)
    }
}

/// Parse `args` (program name first), run the command and return the exit code.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    let command_line = std::iter::once("fsl").chain(args.iter().skip(1).map(String::as_str)).collect::<Vec<_>>().join(" ");
    let mut ctx = Ctx { stdout, command_line };
    match dispatch(cli, &mut ctx) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "{}", e.to_json());
            if e.is_usage() {
                1
            } else {
                2
            }
        }
    }
}

fn dispatch(cli: Cli, ctx: &mut Ctx<'_>) -> Result<(), ReportError> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    match cli.command {
        Command::Thresholds { descriptor, json, out, query } => cmd_thresholds(ctx, &descriptor, json, out.as_deref(), query),
        Command::Figure {
            name,
            dmin,
            dmax,
            p,
            eps_grid,
            out,
            format,
            paper_overlay,
            dense_step,
            grid,
            measure,
            fourier_dim,
            frostman_dim,
            sobolev_dim,
            ambient_dim,
        } => {
            let fc = config.figure;
            let name: FigureName = name.parse()?;
            let def = FigureParams::default();
            let eps_grid = match eps_grid.or(fc.eps_grid) {
                Some(s) => s.parse::<LinearGrid>()?,
                None => def.eps_grid,
            };
            let params = FigureParams {
                dmin: dmin.or(fc.dmin).unwrap_or(def.dmin),
                dmax: dmax.or(fc.dmax).unwrap_or(def.dmax),
                p: p.or(fc.p).unwrap_or(def.p),
                eps_grid,
                paper_overlay: paper_overlay || fc.paper_overlay.unwrap_or(def.paper_overlay),
                dense_step: dense_step.or(fc.dense_step),
                grid: grid.or(fc.grid).unwrap_or(def.grid),
                measure: measure.or(fc.measure),
                fourier_dim: fourier_dim.or(fc.fourier_dim).unwrap_or(def.fourier_dim),
                frostman_dim: frostman_dim.or(fc.frostman_dim).unwrap_or(def.frostman_dim),
                sobolev_dim: sobolev_dim.or(fc.sobolev_dim).unwrap_or(def.sobolev_dim),
                ambient_dim: ambient_dim.or(fc.ambient_dim).unwrap_or(def.ambient_dim),
            };
            let format = parse_format(format.as_deref().or(fc.format.as_deref()))?;
            let table = figure_table(name, &params)?;
            ctx.emit_table(&table, &json!({ "figure": name, "params": params }), format, out.as_deref())
        }
        Command::Estimate { descriptor, theta, jmin, jmax, nodes_per_unit, out } => {
            let ec = config.estimate;
            cmd_estimate(
                ctx,
                &descriptor,
                theta.or(ec.theta),
                jmin.or(ec.jmin),
                jmax.or(ec.jmax),
                nodes_per_unit.or(ec.nodes_per_unit),
                out.as_deref(),
            )
        }
        Command::Spectrum { descriptor, grid, out, format } => {
            let grid = grid.or(config.spectrum.grid).unwrap_or(FigureParams::default().grid);
            let format = parse_format(format.as_deref())?;
            let table = spectrum_table(&descriptor, grid)?;
            ctx.emit_table(&table, &json!({ "spectrum": descriptor, "grid": grid }), format, out.as_deref())
        }
    }
}

fn exponent_line(e: &Option<Exponent>) -> String {
    match e {
        None => "unknown".into(),
        Some(e) if e.is_infinite() => "inf".into(),
        Some(e) => match e.exact() {
            Some(_) => format!("{} ({})", e.display(), format_float(e.value())),
            None => format_float(e.value()),
        },
    }
}

fn query_value<T: Scalar>(query: Query, spec: &PiecewiseLinearSpectrum<T>, alpha: &T) -> Result<(Value, String), ReportError> {
    let exp = |e: Option<Exponent>| (serde_json::to_value(&e).expect("json"), exponent_line(&e));
    Ok(match query {
        Query::All => unreachable!("handled by the full report"),
        Query::SteinTomas => exp(Some(stein_tomas_q_dim(spec, alpha)?)),
        Query::Main => {
            let m = main_q(spec, alpha)?;
            let (mut v, line) = exp(Some(m.exponent));
            v["theta_opt"] = json!(m.theta_opt.to_f64());
            (v, format!("{line} at theta = {}", format_float(m.theta_opt.to_f64())))
        }
        Query::Corollary => exp(Some(corollary_q(spec)?)),
        Query::Sobolev => exp(Some(sobolev_q(spec)?)),
        Query::Converse => exp(converse_q(spec)?),
        Query::HambrookLaba => exp(hambrook_laba_q(spec)?),
        Query::Improvement => match improvement_interval(spec, alpha)? {
            Some((a, b)) => {
                let (a, b) = (a.to_f64(), b.to_f64());
                (json!([a, b]), format!("({}, {})", format_float(a), format_float(b)))
            }
            None => (Value::Null, "none".into()),
        },
        Query::Guard => {
            let g = no_restriction_guard(spec)?;
            (json!(g), g.to_string())
        }
    })
}

fn cmd_thresholds(
    ctx: &mut Ctx<'_>,
    descriptor: &str,
    json_out: bool,
    out: Option<&str>,
    query: Option<Query>,
) -> Result<(), ReportError> {
    let measure = parse_descriptor(descriptor)?;
    match query {
        None | Some(Query::All) => {
            let report = full_report(&measure)?;
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            if let Some(path) = out {
                std::fs::write(path, format!("{text}\n")).map_err(|source| ReportError::Io { path: path.to_string(), source })?;
            }
            if json_out {
                ctx.print(&format!("{text}\n"))
            } else {
                ctx.print(&render_report(&report))
            }
        }
        Some(q) => {
            let (value, line) = match measure.dims() {
                MeasureDims::Exact { spectrum, frostman } => query_value(q, spectrum, frostman)?,
                MeasureDims::Float { spectrum, frostman } => query_value(q, spectrum, frostman)?,
            };
            let doc = json!({ "measure": measure.label(), "query": q, "result": value });
            if let Some(path) = out {
                std::fs::write(path, format!("{doc:#}\n")).map_err(|source| ReportError::Io { path: path.to_string(), source })?;
            }
            if json_out {
                ctx.print(&format!("{doc:#}\n"))
            } else {
                let name = serde_json::to_value(q).expect("json");
                ctx.print(&format!("{}: {line}\n", name.as_str().unwrap_or_default()))
            }
        }
    }
}

/// Defaults for the estimator: theta values and shell window.
fn estimate_defaults(kind: EvaluatorKind) -> (Vec<f64>, u32, u32) {
    match kind {
        EvaluatorKind::Scalar1D => (vec![0.5, 1.0], 6, 16),
        EvaluatorKind::RadialProfile => (vec![0.3, 0.6, 0.9], 3, 8),
    }
}

fn cmd_estimate(
    ctx: &mut Ctx<'_>,
    descriptor: &str,
    thetas: Option<Vec<f64>>,
    jmin: Option<u32>,
    jmax: Option<u32>,
    nodes_per_unit: Option<usize>,
    out: Option<&str>,
) -> Result<(), ReportError> {
    let measure: MeasureDescriptor = parse_descriptor(descriptor)?;
    let evaluator = measure.evaluator().ok_or_else(|| ReportError::NoEvaluator { measure: measure.label() })?;
    let (def_thetas, def_jmin, def_jmax) = estimate_defaults(evaluator.kind());
    let thetas = thetas.unwrap_or(def_thetas);
    let (jmin, jmax) = (jmin.unwrap_or(def_jmin), jmax.unwrap_or(def_jmax));
    let mut budget = QuadratureBudget::default();
    if let Some(n) = nodes_per_unit {
        budget.nodes_per_unit = n;
    }

    let fits = estimate_spectrum(&evaluator, &thetas, jmin, jmax, &budget)?;
    let spec = measure.spectrum();
    let kind = format!("{:?}", spec.kind()).to_lowercase();
    let mut summary = Vec::new();
    let mut table = Table::new(&["j", "theta", "a_j", "log2_a_j", "nodes", "rel_err"]);
    for fit in &fits {
        let analytic = spec.eval(&fit.theta).ok();
        summary.push(json!({
            "theta": fit.theta,
            "s_estimate": fit.s_estimate,
            "s_std_err": fit.s_std_err,
            "slope": fit.slope,
            "r_squared": fit.r_squared,
            "reliable": fit.reliable,
            "analytic": analytic,
            "analytic_kind": kind,
            "deviation": analytic.map(|a| (fit.s_estimate - a).abs()),
        }));
        for s in &fit.shells {
            table.push(vec![
                Cell::Num(s.j as f64),
                s.theta.into(),
                s.a_j.into(),
                (s.a_j > 0.0).then(|| s.a_j.log2()).into(),
                Cell::Num(s.node_count as f64),
                s.est_rel_error.into(),
            ]);
        }
    }
    if let Some(path) = out {
        let params = json!({ "estimate": measure.label(), "theta": thetas, "jmin": jmin, "jmax": jmax, "budget": budget });
        ctx.emit_table(&table, &params, Format::Csv, Some(path))?;
    }
    let doc = json!({ "measure": measure.label(), "j_range": [jmin, jmax], "fits": summary });
    ctx.print(&format!("{doc:#}\n"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("fsl").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn thresholds_human_and_query() {
        let (code, out, _) = call(&["thresholds", "cone:5"]);
        assert_eq!(code, 0);
        assert!(out.contains("11/3"), "{out}");
        let (code, out, _) = call(&["thresholds", "moment:8", "--query", "main"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("main: 74"), "{out}");
    }

    #[test]
    fn converse_on_lower_bound_is_error() {
        let (code, _, err) = call(&["thresholds", "cantor:0.5", "--query", "converse"]);
        assert_eq!(code, 2);
        let v: Value = serde_json::from_str(err.trim()).unwrap();
        assert_eq!(v["error"]["kind"], "LowerBoundSpectrum");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["thresholds", "blob:3"]).0, 1);
        assert_eq!(call(&["figure", "pie"]).0, 1);
        assert_eq!(call(&["frobnicate"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
        assert_eq!(call(&["estimate", "moment:5"]).0, 2);
    }
}
