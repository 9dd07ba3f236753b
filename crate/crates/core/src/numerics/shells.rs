//! Dyadic shell energies `A_j(θ) = ∫_{2^j ≤ |ξ| < 2^{j+1}} |μ̂(ξ)|^{2/θ} dξ`.
//!
//! Shells have sharp edges. For the cone, `|ξ|` is replaced by `max(r, |y|)`
//! so that shells are unions of lattice cells.

use std::f64::consts::PI;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use rustfft::FftPlanner;
use serde::Serialize;

use super::bessel::gamma_half_plus_one;
use super::cantor::cantor_fourier_abs;
use super::cone::{cone_profile_batch_with, BatchOptions, UniformGrid};
use super::quadrature::{gl16, GaussLegendre};
use super::{FourierEvaluator, NumericsError, CANTOR_TOL};

/// One shell integral and its provenance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ShellEstimate {
    pub j: u32,
    pub theta: f64,
    pub a_j: f64,
    /// Quadrature nodes (1-D) or lattice cells (cone) in the shell.
    pub node_count: u64,
    /// Relative change under halving the spacing on a subsample.
    pub est_rel_error: f64,
}

/// Quadrature resolution and the total node allowance.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuadratureBudget {
    /// Gauss–Legendre nodes per unit length (1-D), at least 16.
    pub nodes_per_unit: usize,
    /// Cell size of the `(r, y)` lattice; at most 1/4.
    pub lattice_step: f64,
    pub batch: BatchOptions,
    /// Cap on nodes (1-D) or cells (cone) over all shells of a run.
    pub max_nodes: u64,
    /// Unit panels (1-D) re-evaluated at half spacing for the error estimate.
    pub error_samples: usize,
    /// Lattice rows (cone) re-evaluated at half spacing for the error estimate.
    pub error_rows: usize,
}

impl Default for QuadratureBudget {
    fn default() -> Self {
        Self {
            nodes_per_unit: 16,
            lattice_step: 0.25,
            batch: BatchOptions::default(),
            max_nodes: 1 << 32,
            error_samples: 64,
            error_rows: 8,
        }
    }
}

fn check_theta(theta: f64) -> Result<(), NumericsError> {
    if !(theta > 0.0 && theta <= 1.0) {
        return Err(NumericsError::ThetaOutOfRange(theta));
    }
    Ok(())
}

/// Surface area of `S^{d−2}`, `2π^{(d−1)/2}/Γ((d−1)/2)`.
pub fn sphere_area(d: u32) -> f64 {
    2.0 * PI.powf((d as f64 - 1.0) / 2.0) / gamma_half_plus_one(d as i32 - 3)
}

/// `A_j(θ)` for a single shell.
pub fn shell_integral(
    evaluator: &FourierEvaluator,
    j: u32,
    theta: f64,
    budget: &QuadratureBudget,
) -> Result<ShellEstimate, NumericsError> {
    let mut v = shell_integrals(evaluator, j..=j, &[theta], budget)?;
    Ok(v.remove(0))
}

/// `A_j(θ)` for every `j` in the range and every `θ`, ordered by `θ` then `j`.
///
/// Transform values are computed once and shared by all `θ`.
pub fn shell_integrals(
    evaluator: &FourierEvaluator,
    js: RangeInclusive<u32>,
    thetas: &[f64],
    budget: &QuadratureBudget,
) -> Result<Vec<ShellEstimate>, NumericsError> {
    for &t in thetas {
        check_theta(t)?;
    }
    match *evaluator {
        FourierEvaluator::Cantor { p } => line_shells(p, js, thetas, budget),
        FourierEvaluator::Cone { d } => {
            if d < 3 {
                return Err(NumericsError::BadDimension(d));
            }
            let j_max = *js.end();
            let cells = cone_cell_count(js.clone(), budget.lattice_step);
            if cells > budget.max_nodes {
                return Err(NumericsError::BudgetExceeded { partial: Vec::new(), limit: budget.max_nodes });
            }
            let lattice = ConeLattice::build(d, j_max, budget)?;
            lattice.shells(js, thetas, budget)
        }
    }
}

fn ordered(mut out: Vec<ShellEstimate>) -> Vec<ShellEstimate> {
    out.sort_by(|a, b| a.theta.total_cmp(&b.theta).then(a.j.cmp(&b.j)));
    out
}

/// `|μ̂_p|` at the nodes of a composite rule over `[2^j, 2^{j+1}]`, one panel per unit.
fn line_values(p: f64, j: u32, rule: &GaussLegendre, panel_width: f64) -> Vec<f64> {
    let lo = (1u64 << j) as f64;
    let panels = ((lo / panel_width).round() as usize).max(1);
    let half = 0.5 * panel_width;
    (0..panels)
        .into_par_iter()
        .flat_map_iter(|k| {
            let mid = lo + (k as f64 + 0.5) * panel_width;
            rule.nodes().iter().map(move |&x| cantor_fourier_abs(p, mid + half * x, CANTOR_TOL)).collect::<Vec<_>>()
        })
        .collect()
}

/// `2 Σ w |μ̂|^{2/θ}` (both signs of `ξ`) for values laid out panel by panel.
fn line_sum(values: &[f64], rule: &GaussLegendre, panel_width: f64, exponent: f64) -> f64 {
    let half = 0.5 * panel_width;
    let n = rule.len();
    values
        .chunks(n)
        .map(|panel| panel.iter().zip(rule.weights()).map(|(v, w)| w * v.powf(exponent)).sum::<f64>())
        .sum::<f64>()
        * half
        * 2.0
}

fn line_shells(
    p: f64,
    js: RangeInclusive<u32>,
    thetas: &[f64],
    budget: &QuadratureBudget,
) -> Result<Vec<ShellEstimate>, NumericsError> {
    let per_unit = budget.nodes_per_unit.max(16);
    let owned;
    let rule: &GaussLegendre = if per_unit == 16 {
        gl16()
    } else {
        owned = GaussLegendre::new(per_unit);
        &owned
    };
    let mut out = Vec::new();
    let mut used = 0u64;
    for j in js {
        let nodes = (1u64 << j) * per_unit as u64;
        if used + nodes > budget.max_nodes {
            return Err(NumericsError::BudgetExceeded { partial: ordered(out), limit: budget.max_nodes });
        }
        used += nodes;
        let values = line_values(p, j, rule, 1.0);
        let errors = line_error_samples(p, j, rule, budget.error_samples);
        for &theta in thetas {
            let exponent = 2.0 / theta;
            let a_j = line_sum(&values, rule, 1.0, exponent);
            let (coarse, fine) = errors.iter().fold((0.0, 0.0), |(c, f), (cv, fv)| {
                (c + line_sum(cv, rule, 1.0, exponent), f + line_sum(fv, rule, 0.5, exponent))
            });
            let est_rel_error = if fine > 0.0 { (fine - coarse).abs() / fine } else { 0.0 };
            out.push(ShellEstimate { j, theta, a_j, node_count: nodes, est_rel_error });
        }
    }
    Ok(ordered(out))
}

/// Values on a subsample of unit panels, at full and half panel width.
fn line_error_samples(p: f64, j: u32, rule: &GaussLegendre, samples: usize) -> Vec<(Vec<f64>, Vec<f64>)> {
    let lo = (1u64 << j) as f64;
    let panels = 1usize << j;
    let count = samples.clamp(1, panels);
    (0..count)
        .map(|i| {
            let start = lo + (i * panels / count) as f64;
            let coarse = panel_values(p, start, 1.0, rule);
            let mut fine = panel_values(p, start, 0.5, rule);
            fine.extend(panel_values(p, start + 0.5, 0.5, rule));
            (coarse, fine)
        })
        .collect()
}

fn panel_values(p: f64, start: f64, width: f64, rule: &GaussLegendre) -> Vec<f64> {
    let mid = start + 0.5 * width;
    rule.nodes().iter().map(|&x| cantor_fourier_abs(p, mid + 0.5 * width * x, CANTOR_TOL)).collect()
}

fn cone_cell_count(js: RangeInclusive<u32>, step: f64) -> u64 {
    js.map(|j| {
        let hi = (2u64 << j) as f64 / step;
        let lo = (1u64 << j) as f64 / step;
        (hi * hi - lo * lo) as u64
    })
    .sum()
}

/// `|F(r, y)|` at the cell midpoints `((i+½)h, (k+½)h)` of `[0, 2^{j_max+1})²`.
#[derive(Clone, Debug)]
pub struct ConeLattice {
    d: u32,
    step: f64,
    batch: BatchOptions,
    n: usize,
    values: Vec<f64>,
}

impl ConeLattice {
    /// One batched profile evaluation per row, rows in parallel.
    pub fn build(d: u32, j_max: u32, budget: &QuadratureBudget) -> Result<Self, NumericsError> {
        let step = budget.lattice_step;
        if !(step > 0.0 && step <= 0.25) {
            return Err(NumericsError::GridTooCoarse(step));
        }
        let n = ((2u64 << j_max) as f64 / step).round() as usize;
        let grid = UniformGrid::new(0.5 * step, step, n);
        let rows: Result<Vec<Vec<f64>>, NumericsError> = (0..n)
            .into_par_iter()
            .map_init(FftPlanner::new, |planner, i| {
                let r = (i as f64 + 0.5) * step;
                let row = cone_profile_batch_with(d, r, &grid, &budget.batch, planner)?;
                Ok(row.into_iter().map(|z| z.norm()).collect())
            })
            .collect();
        let values = rows?.concat();
        Ok(Self { d, step, batch: budget.batch, n, values })
    }

    pub fn ambient_dim(&self) -> u32 {
        self.d
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// `|F|` at cell `(i, k)`.
    pub fn value(&self, i: usize, k: usize) -> f64 {
        self.values[i * self.n + k]
    }

    /// Cells `(i, k)` with `max(r_i, y_k) ∈ [2^j, 2^{j+1})`.
    fn shell_cells(&self, j: u32) -> impl Iterator<Item = (usize, usize)> + '_ {
        let lo = ((1u64 << j) as f64 / self.step).round() as usize;
        let hi = (((2u64 << j) as f64 / self.step).round() as usize).min(self.n);
        (0..hi).flat_map(move |i| {
            let ks: Box<dyn Iterator<Item = usize>> = if i >= lo { Box::new(0..hi) } else { Box::new(lo..hi) };
            ks.map(move |k| (i, k))
        })
    }

    /// `ω_{d−2} · 2 · Σ |F|^{2/θ} r^{d−2} h²` over the shell (the 2 accounts for `y < 0`).
    pub fn shell_sum(&self, j: u32, theta: f64) -> (f64, u64) {
        let exponent = 2.0 / theta;
        let (mut sum, mut count) = (0.0, 0u64);
        for (i, k) in self.shell_cells(j) {
            let r = (i as f64 + 0.5) * self.step;
            sum += self.value(i, k).powf(exponent) * r.powi(self.d as i32 - 2);
            count += 1;
        }
        (sphere_area(self.d) * 2.0 * sum * self.step * self.step, count)
    }

    /// Rows of the shell used for the error estimate: the coarse row and two
    /// half-spacing sub-rows at `r ± h/4`, each on a `y` grid of spacing `h/2`.
    fn error_rows(&self, j: u32, rows: usize) -> Result<Vec<ErrorRow>, NumericsError> {
        let hi = (((2u64 << j) as f64 / self.step).round() as usize).min(self.n);
        let count = rows.clamp(1, hi);
        let h = self.step;
        let fine_grid = UniformGrid::new(0.25 * h, 0.5 * h, 2 * self.n);
        (0..count)
            .into_par_iter()
            .map_init(FftPlanner::new, |planner, m| {
                let i = ((m as f64 + 0.5) * hi as f64 / count as f64) as usize;
                let r = (i as f64 + 0.5) * h;
                let mut sub = Vec::with_capacity(2);
                for rr in [r - 0.25 * h, r + 0.25 * h] {
                    let vals = cone_profile_batch_with(self.d, rr, &fine_grid, &self.batch, planner)?;
                    sub.push((rr, vals.into_iter().map(|z| z.norm()).collect()));
                }
                Ok(ErrorRow { i, sub })
            })
            .collect()
    }

    /// Relative change of the sampled rows' contribution under halving the spacing.
    fn row_error(&self, j: u32, theta: f64, rows: &[ErrorRow]) -> f64 {
        let e = 2.0 / theta;
        let w = self.d as i32 - 2;
        let lo = ((1u64 << j) as f64 / self.step).round() as usize;
        let hi = (((2u64 << j) as f64 / self.step).round() as usize).min(self.n);
        let (mut coarse, mut fine) = (0.0, 0.0);
        for row in rows {
            let ks = if row.i >= lo { 0..hi } else { lo..hi };
            let r = (row.i as f64 + 0.5) * self.step;
            for k in ks {
                coarse += self.value(row.i, k).powf(e) * r.powi(w);
                for (rr, vals) in &row.sub {
                    fine += (vals[2 * k].powf(e) + vals[2 * k + 1].powf(e)) * rr.powi(w) / 4.0;
                }
            }
        }
        if fine > 0.0 {
            (fine - coarse).abs() / fine
        } else {
            0.0
        }
    }

    /// Shell integrals for every `j` and `θ`, ordered by `θ` then `j`.
    pub fn shells(
        &self,
        js: RangeInclusive<u32>,
        thetas: &[f64],
        budget: &QuadratureBudget,
    ) -> Result<Vec<ShellEstimate>, NumericsError> {
        let mut out = Vec::new();
        for j in js {
            let rows = self.error_rows(j, budget.error_rows)?;
            for &theta in thetas {
                let (a_j, node_count) = self.shell_sum(j, theta);
                let est_rel_error = self.row_error(j, theta, &rows);
                out.push(ShellEstimate { j, theta, a_j, node_count, est_rel_error });
            }
        }
        Ok(ordered(out))
    }
}

struct ErrorRow {
    i: usize,
    sub: Vec<(f64, Vec<f64>)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_areas() {
        assert!((sphere_area(3) - 2.0 * PI).abs() < 1e-14);
        assert!((sphere_area(4) - 4.0 * PI).abs() < 1e-14);
        assert!((sphere_area(5) - 2.0 * PI * PI).abs() < 1e-13);
    }

    #[test]
    fn cantor_first_shell_matches_dense_trapezoid() {
        let ev = FourierEvaluator::Cantor { p: 0.6 };
        let s = shell_integral(&ev, 0, 1.0, &QuadratureBudget::default()).unwrap();
        let n = 1_000_000;
        let h = 1.0 / n as f64;
        let ends = (cantor_fourier_abs(0.6, 1.0, 1e-13).powi(2) + cantor_fourier_abs(0.6, 2.0, 1e-13).powi(2)) / 2.0;
        let inner: f64 = (1..n).map(|i| cantor_fourier_abs(0.6, 1.0 + i as f64 * h, 1e-13).powi(2)).sum();
        let want = 2.0 * h * (inner + ends);
        assert!((s.a_j - want).abs() < 1e-6 * want, "{} vs {want}", s.a_j);
        assert_eq!(s.node_count, 16);
    }

    #[test]
    fn shells_are_nonnegative_and_ordered() {
        let ev = FourierEvaluator::Cantor { p: 0.7 };
        let out = shell_integrals(&ev, 0..=3, &[0.9, 0.3], &QuadratureBudget::default()).unwrap();
        assert_eq!(out.len(), 8);
        assert!(out.iter().all(|s| s.a_j >= 0.0 && s.node_count > 0));
        assert_eq!((out[0].theta, out[0].j), (0.3, 0));
        assert_eq!((out[7].theta, out[7].j), (0.9, 3));
    }

    #[test]
    fn budget_exceeded_returns_partial() {
        let ev = FourierEvaluator::Cantor { p: 0.6 };
        let budget = QuadratureBudget { max_nodes: 16 * 7, ..QuadratureBudget::default() };
        match shell_integrals(&ev, 0..=3, &[1.0], &budget) {
            Err(NumericsError::BudgetExceeded { partial, limit }) => {
                assert_eq!(limit, 112);
                assert_eq!(partial.iter().map(|s| s.j).collect::<Vec<_>>(), vec![0, 1, 2]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn theta_checked() {
        let ev = FourierEvaluator::Cantor { p: 0.6 };
        assert_eq!(
            shell_integral(&ev, 0, 0.0, &QuadratureBudget::default()),
            Err(NumericsError::ThetaOutOfRange(0.0))
        );
    }

    #[test]
    fn cone_lattice_small() {
        let ev = FourierEvaluator::Cone { d: 3 };
        let out = shell_integrals(&ev, 0..=2, &[0.5], &QuadratureBudget::default()).unwrap();
        assert_eq!(out.len(), 3);
        // shell j has (2^{j+1}/h)² − (2^j/h)² cells
        assert_eq!(out[0].node_count, 64 - 16);
        assert_eq!(out[2].node_count, 1024 - 256);
        assert!(out.iter().all(|s| s.a_j > 0.0 && s.est_rel_error < 0.5));
    }
}
