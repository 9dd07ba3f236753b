//! Data behind the threshold and spectrum plots.

use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::{format_float, Cell, ReportError, Table};
use crate::measures::{
    cantor_dims, cantor_example_ranges, cantor_feasibility_cutoff, cone, moment_curve, parse_descriptor, MeasureError,
};
use crate::spectrum::{PiecewiseLinearSpectrum, SpectrumKind};
use crate::thresholds::{full_report, improvement_interval, Exponent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FigureName {
    /// Thresholds for the light cone against `d`.
    Cone,
    /// Thresholds for the moment curve against `d`.
    Moment,
    /// Cantor measure convolved with a Salem measure, against `ε`.
    Fractal,
    /// Where a spectrum must pass to beat Stein–Tomas.
    Improvement,
    /// `θ ↦ dim_F^θ` for one measure.
    Spectrum,
}

impl FromStr for FigureName {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, ReportError> {
        Ok(match s {
            "cone" => FigureName::Cone,
            "moment" => FigureName::Moment,
            "fractal" => FigureName::Fractal,
            "improvement" => FigureName::Improvement,
            "spectrum" => FigureName::Spectrum,
            _ => return Err(ReportError::UnsupportedFigure(s.to_string())),
        })
    }
}

/// `count` equally spaced values from `start` to `stop` inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LinearGrid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl LinearGrid {
    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count).map(|i| if i + 1 == self.count { self.stop } else { self.start + i as f64 * step }).collect()
    }
}

impl FromStr for LinearGrid {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, ReportError> {
        let bad = |reason: &str| ReportError::BadParameter { name: "eps-grid".into(), reason: format!("{s:?}: {reason}") };
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, n] = parts.as_slice() else {
            return Err(bad("expected start:stop:count"));
        };
        let start: f64 = a.parse().map_err(|_| bad("bad start"))?;
        let stop: f64 = b.parse().map_err(|_| bad("bad stop"))?;
        let count: usize = n.parse().map_err(|_| bad("bad count"))?;
        if count == 0 || !(start <= stop) {
            return Err(bad("need count >= 1 and start <= stop"));
        }
        Ok(Self { start, stop, count })
    }
}

/// Every parameter a figure may read, after defaults are applied.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FigureParams {
    pub dmin: u32,
    pub dmax: u32,
    pub p: f64,
    pub eps_grid: LinearGrid,
    pub paper_overlay: bool,
    /// Non-integer `d` spacing; rows then come from the closed forms.
    pub dense_step: Option<f64>,
    /// Number of `θ` samples for the improvement and spectrum figures.
    pub grid: usize,
    pub measure: Option<String>,
    pub fourier_dim: f64,
    pub frostman_dim: f64,
    pub sobolev_dim: f64,
    pub ambient_dim: u32,
}

impl Default for FigureParams {
    fn default() -> Self {
        Self {
            dmin: 3,
            dmax: 10,
            p: 0.6,
            eps_grid: LinearGrid { start: 0.01, stop: 0.99, count: 99 },
            paper_overlay: false,
            dense_step: None,
            grid: 101,
            measure: None,
            fourier_dim: 0.4,
            frostman_dim: 0.7,
            sobolev_dim: 0.9,
            ambient_dim: 1,
        }
    }
}

fn bad(name: &str, reason: impl Into<String>) -> ReportError {
    ReportError::BadParameter { name: name.to_string(), reason: reason.into() }
}

fn exponent(e: &Option<Exponent>) -> Cell {
    e.as_ref().map_or(Cell::Empty, |e| Cell::Num(e.value()))
}

fn d_values(params: &FigureParams, min_d: u32) -> Result<Vec<f64>, ReportError> {
    if params.dmin < min_d || params.dmax < params.dmin {
        return Err(bad("dmin/dmax", format!("need {min_d} <= dmin <= dmax, got {}..{}", params.dmin, params.dmax)));
    }
    match params.dense_step {
        None => Ok((params.dmin..=params.dmax).map(f64::from).collect()),
        Some(step) => {
            if !(step > 0.0) {
                return Err(bad("dense-step", "must be positive"));
            }
            let n = ((params.dmax - params.dmin) as f64 / step + 1e-9).floor() as usize;
            Ok((0..=n).map(|i| params.dmin as f64 + i as f64 * step).collect())
        }
    }
}

fn ordered_rows<F>(xs: &[f64], row: F) -> Result<Vec<Vec<Cell>>, ReportError>
where
    F: Fn(f64) -> Result<Vec<Cell>, ReportError> + Sync,
{
    xs.par_iter().map(|&x| row(x)).collect()
}

fn cone_figure(params: &FigureParams) -> Result<Table, ReportError> {
    let mut table = Table::new(&["d", "stein_tomas", "main", "sharp", "converse", "hambrook_laba"]);
    let ds = d_values(params, 3)?;
    let dense = params.dense_step.is_some();
    let rows = ordered_rows(&ds, |x| {
        let sharp = 2.0 * x / (x - 2.0);
        if dense {
            let st = sharp.max(4.0);
            let main = if x >= 4.0 { (3.0 * x - 4.0) / (x - 2.0) } else { st };
            return Ok(vec![
                x.into(),
                st.into(),
                main.into(),
                sharp.into(),
                (2.0 * (x - 1.0) / (x - 2.0)).into(),
                (2.0 * x / (x - 1.0)).into(),
            ]);
        }
        let r = full_report(&cone(x as u32)?)?;
        Ok(vec![
            x.into(),
            exponent(&r.stein_tomas),
            exponent(&r.main),
            sharp.into(),
            exponent(&r.converse_fail_below),
            exponent(&r.hambrook_laba_fail_below),
        ])
    })?;
    table.rows = rows;
    if dense {
        table.note("rows", "closed forms at non-integer d, for display only");
    }
    Ok(table)
}

fn moment_figure(params: &FigureParams) -> Result<Table, ReportError> {
    let mut columns = vec!["d", "stein_tomas", "main", "sharp", "converse", "hambrook_laba"];
    if params.paper_overlay {
        columns.push("paper_overlay");
    }
    let mut table = Table::new(&columns);
    let ds = d_values(params, 3)?;
    let dense = params.dense_step.is_some();
    let overlay = params.paper_overlay;
    let rows = ordered_rows(&ds, |x| {
        let mut row: Vec<Cell> = if dense {
            let m = x * x + x + 2.0;
            vec![
                x.into(),
                (2.0 * x * x - 2.0 * x + 2.0).into(),
                m.into(),
                (x * x + x).into(),
                (m / 2.0).into(),
                (2.0 * x).into(),
            ]
        } else {
            let r = full_report(&moment_curve(x as u32)?)?;
            vec![
                x.into(),
                exponent(&r.stein_tomas),
                exponent(&r.main),
                (x * x + x).into(),
                exponent(&r.converse_fail_below),
                exponent(&r.hambrook_laba_fail_below),
            ]
        };
        if overlay {
            row.push(x.into());
        }
        Ok(row)
    })?;
    table.rows = rows;
    if overlay {
        table.note("paper_overlay", "q = d as drawn in the published plot; the Sobolev-dimension bound gives 2d");
    }
    if dense {
        table.note("rows", "closed forms at non-integer d, for display only");
    }
    Ok(table)
}

fn fractal_figure(params: &FigureParams) -> Result<Table, ReportError> {
    let p = params.p;
    let cutoff = cantor_feasibility_cutoff(p)?;
    let dims = cantor_dims(p);
    let mut table = Table::new(&["eps", "q_theorem", "q_stein_tomas", "feasible"]);
    let eps = params.eps_grid.values();
    let rows = ordered_rows(&eps, |e| match cantor_example_ranges(p, e) {
        Ok((q, st)) => Ok(vec![e.into(), q.into(), st.into(), true.into()]),
        Err(MeasureError::ThetaHalfInfeasible { .. }) => {
            let st = 2.0 + 4.0 * (1.0 - dims.frostman - e) / e;
            Ok(vec![e.into(), Cell::Empty, st.into(), false.into()])
        }
        Err(err) => Err(err.into()),
    })?;
    table.rows = rows;
    table.note("p", format_float(p));
    table.note("feasibility_cutoff_eps", format_float(cutoff));
    Ok(table)
}

fn improvement_figure(params: &FigureParams) -> Result<Table, ReportError> {
    let (f, alpha, s, d) = (params.fourier_dim, params.frostman_dim, params.sobolev_dim, params.ambient_dim);
    let df = d as f64;
    if !(alpha > 0.0 && alpha <= df) {
        return Err(bad("frostman-dim", format!("{alpha} must lie in (0, {d}]")));
    }
    if params.grid < 2 {
        return Err(bad("grid", "need at least 2 points"));
    }
    let chord = PiecewiseLinearSpectrum::from_pairs(d, vec![(0.0, f), (1.0, s)], SpectrumKind::LowerBound)
        .map_err(MeasureError::from)?;
    let interval = improvement_interval(&chord, &alpha)?;

    let mut table =
        Table::new(&["theta", "l1", "diagonal", "chord", "region_lower", "region_upper", "in_region"]);
    let thetas = LinearGrid { start: 0.0, stop: 1.0, count: params.grid }.values();
    table.rows = ordered_rows(&thetas, |t| {
        let l1 = t * (alpha - f / 2.0) + f;
        let diagonal = df * t;
        let c = f + (s - f) * t;
        let lower = l1.max(diagonal);
        let upper = (f + df * t).min(s);
        Ok(vec![t.into(), l1.into(), diagonal.into(), c.into(), lower.into(), upper.into(), (lower < upper).into()])
    })?;
    let interval = match interval {
        Some((a, b)) => format!("({}, {})", format_float(a), format_float(b)),
        None => "none".into(),
    };
    table.note("chord_improvement_interval", interval);
    Ok(table)
}

fn spectrum_figure(params: &FigureParams) -> Result<Table, ReportError> {
    let desc = params.measure.as_deref().ok_or_else(|| bad("measure", "the spectrum figure needs a descriptor"))?;
    spectrum_table(desc, params.grid)
}

/// `θ ↦ dim_F^θ` on `grid` equally spaced points of `[0, 1]`.
pub fn spectrum_table(descriptor: &str, grid: usize) -> Result<Table, ReportError> {
    if grid < 2 {
        return Err(bad("grid", "need at least 2 points"));
    }
    let measure = parse_descriptor(descriptor)?;
    let spec = measure.spectrum();
    let mut table = Table::new(&["theta", "value"]);
    for t in (LinearGrid { start: 0.0, stop: 1.0, count: grid }).values() {
        let v = spec.eval(&t).map_err(MeasureError::from)?;
        table.push(vec![t.into(), v.into()]);
    }
    table.note("measure", measure.label());
    table.note("kind", format!("{:?}", spec.kind()).to_lowercase());
    Ok(table)
}

pub fn figure_table(name: FigureName, params: &FigureParams) -> Result<Table, ReportError> {
    match name {
        FigureName::Cone => cone_figure(params),
        FigureName::Moment => moment_figure(params),
        FigureName::Fractal => fractal_figure(params),
        FigureName::Improvement => improvement_figure(params),
        FigureName::Spectrum => spectrum_figure(params),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nums(row: &[Cell]) -> Vec<f64> {
        row.iter()
            .map(|c| match c {
                Cell::Num(x) => *x,
                _ => f64::NAN,
            })
            .collect()
    }

    #[test]
    fn cone_row_d5() {
        let t = figure_table(FigureName::Cone, &FigureParams::default()).unwrap();
        assert_eq!(t.rows.len(), 8);
        let row = nums(&t.rows[2]);
        let want = [5.0, 4.0, 11.0 / 3.0, 10.0 / 3.0, 8.0 / 3.0, 2.5];
        for (a, b) in row.iter().zip(want) {
            assert!((a - b).abs() < 1e-14, "{row:?}");
        }
    }

    #[test]
    fn dense_cone_matches_integer_rows() {
        let exact = figure_table(FigureName::Cone, &FigureParams::default()).unwrap();
        let dense = figure_table(FigureName::Cone, &FigureParams { dense_step: Some(0.5), ..Default::default() }).unwrap();
        assert_eq!(dense.rows.len(), 15);
        for (i, row) in exact.rows.iter().enumerate() {
            let a = nums(row);
            let b = nums(&dense.rows[2 * i]);
            for (x, y) in a.iter().zip(&b) {
                assert!((x - y).abs() < 1e-12, "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn moment_rows_and_overlay() {
        let params = FigureParams { paper_overlay: true, dmax: 8, ..Default::default() };
        let t = figure_table(FigureName::Moment, &params).unwrap();
        let last = nums(t.rows.last().unwrap());
        assert_eq!(last, vec![8.0, 114.0, 74.0, 72.0, 37.0, 16.0, 8.0]);
        assert_eq!(t.columns.last().unwrap(), "paper_overlay");
    }

    #[test]
    fn fractal_cutoff() {
        let t = figure_table(FigureName::Fractal, &FigureParams::default()).unwrap();
        let cutoff: f64 = t.notes.iter().find(|n| n.0 == "feasibility_cutoff_eps").unwrap().1.parse().unwrap();
        assert!(cutoff > 0.066 && cutoff <= 0.067, "{cutoff}");
        assert_eq!(t.rows[0][1], Cell::Empty);
        assert_eq!(t.rows[0][3], Cell::Bool(false));
        assert_eq!(t.rows[98][3], Cell::Bool(true));
    }

    #[test]
    fn improvement_region_nonempty() {
        let t = figure_table(FigureName::Improvement, &FigureParams::default()).unwrap();
        assert!(t.column("in_region").unwrap().iter().any(|c| **c == Cell::Bool(true)));
    }

    #[test]
    fn spectrum_and_errors() {
        let t = spectrum_table("cone:5", 4).unwrap();
        assert_eq!(nums(&t.rows[3]), vec![1.0, 4.0]);
        assert!(matches!("nope".parse::<FigureName>(), Err(ReportError::UnsupportedFigure(_))));
        assert!(matches!(figure_table(FigureName::Spectrum, &FigureParams::default()), Err(ReportError::BadParameter { .. })));
        assert!("0.1:0.2".parse::<LinearGrid>().is_err());
        assert_eq!("0:1:3".parse::<LinearGrid>().unwrap().values(), vec![0.0, 0.5, 1.0]);
    }
}
