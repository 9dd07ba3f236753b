//! Spectrum estimates from the growth rate of shell energies.
//!
//! `J_{s,θ}` is finite iff `Σ_j 2^{j(s/θ − d)} A_j < ∞`, so `dim_F^θ` is
//! `θ(d − limsup_j log₂ A_j / j)`. At finite scale the limsup is replaced by
//! a least-squares slope over a window of shells.

use serde::Serialize;

use super::shells::{shell_integrals, QuadratureBudget, ShellEstimate};
use super::{FourierEvaluator, NumericsError};

/// Below this `r²` an estimate is flagged unreliable.
pub const MIN_R_SQUARED: f64 = 0.9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegressionFit {
    pub theta: f64,
    pub d: u32,
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub slope_std_err: f64,
    pub j_range: (u32, u32),
    /// `θ(d − slope)`.
    pub s_estimate: f64,
    /// Standard error of `s_estimate`, `θ·slope_std_err`.
    pub s_std_err: f64,
    pub reliable: bool,
    pub shells: Vec<ShellEstimate>,
}

/// Ordinary least squares of `log₂ a_j` on `j` over the shells with `a_j > 0`.
pub fn fit_shells(d: u32, theta: f64, shells: &[ShellEstimate]) -> Result<RegressionFit, NumericsError> {
    let pts: Vec<(f64, f64)> = shells.iter().filter(|s| s.a_j > 0.0).map(|s| (s.j as f64, s.a_j.log2())).collect();
    if pts.is_empty() {
        return Err(NumericsError::AllShellsZero);
    }
    if pts.len() < 3 {
        return Err(NumericsError::InsufficientShells { have: pts.len() });
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = pts.iter().map(|p| (p.1 - my).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = pts.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum();
    let r_squared = if syy > 0.0 { (1.0 - ss_res / syy).clamp(0.0, 1.0) } else { 1.0 };
    let slope_std_err = (ss_res / (n - 2.0) / sxx).sqrt();
    let j_min = shells.iter().map(|s| s.j).min().unwrap_or(0);
    let j_max = shells.iter().map(|s| s.j).max().unwrap_or(0);
    Ok(RegressionFit {
        theta,
        d,
        slope,
        intercept,
        r_squared,
        slope_std_err,
        j_range: (j_min, j_max),
        s_estimate: theta * (d as f64 - slope),
        s_std_err: theta * slope_std_err,
        reliable: r_squared >= MIN_R_SQUARED,
        shells: shells.to_vec(),
    })
}

/// Estimates of `dim_F^θ` for several `θ`, sharing one set of transform values.
pub fn estimate_spectrum(
    evaluator: &FourierEvaluator,
    thetas: &[f64],
    j_min: u32,
    j_max: u32,
    budget: &QuadratureBudget,
) -> Result<Vec<RegressionFit>, NumericsError> {
    if j_max < j_min + 4 {
        return Err(NumericsError::InsufficientShells { have: (j_max + 1).saturating_sub(j_min) as usize });
    }
    let shells = shell_integrals(evaluator, j_min..=j_max, thetas, budget)?;
    let d = evaluator.ambient_dim();
    thetas
        .iter()
        .map(|&theta| {
            let mine: Vec<ShellEstimate> = shells.iter().filter(|s| s.theta == theta).cloned().collect();
            fit_shells(d, theta, &mine)
        })
        .collect()
}

/// Estimate of `dim_F^θ` from shells `j_min..=j_max`.
pub fn estimate_spectrum_point(
    evaluator: &FourierEvaluator,
    theta: f64,
    j_min: u32,
    j_max: u32,
    budget: &QuadratureBudget,
) -> Result<RegressionFit, NumericsError> {
    let mut fits = estimate_spectrum(evaluator, &[theta], j_min, j_max, budget)?;
    Ok(fits.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn synthetic(slope: f64, noise: &[f64]) -> Vec<ShellEstimate> {
        noise
            .iter()
            .enumerate()
            .map(|(j, e)| ShellEstimate {
                j: j as u32 + 3,
                theta: 0.5,
                a_j: (slope * (j as f64 + 3.0) + 1.0 + e).exp2(),
                node_count: 1,
                est_rel_error: 0.0,
            })
            .collect()
    }

    #[test]
    fn exact_line() {
        let fit = fit_shells(2, 0.5, &synthetic(-0.4, &[0.0; 6])).unwrap();
        assert!((fit.slope + 0.4).abs() < 1e-12);
        assert!((fit.intercept - 1.0).abs() < 1e-12);
        assert!((fit.r_squared - 1.0).abs() < 1e-12);
        assert!((fit.s_estimate - 1.2).abs() < 1e-12);
        assert!(fit.reliable);
        assert_eq!(fit.j_range, (3, 8));
    }

    #[test]
    fn noisy_line_flags_low_r_squared() {
        let fit = fit_shells(1, 1.0, &synthetic(0.0, &[1.0, -1.0, 1.0, -1.0, 1.0, -1.0])).unwrap();
        assert!(fit.r_squared < MIN_R_SQUARED);
        assert!(!fit.reliable);
        assert!(fit.slope_std_err > 0.0);
    }

    #[test]
    fn degenerate_inputs() {
        let mut zero = synthetic(0.0, &[0.0; 5]);
        zero.iter_mut().for_each(|s| s.a_j = 0.0);
        assert_eq!(fit_shells(1, 1.0, &zero), Err(NumericsError::AllShellsZero));
        assert_eq!(
            fit_shells(1, 1.0, &synthetic(0.0, &[0.0; 2])),
            Err(NumericsError::InsufficientShells { have: 2 })
        );
        let ev = FourierEvaluator::Cantor { p: 0.6 };
        assert!(matches!(
            estimate_spectrum_point(&ev, 1.0, 6, 9, &QuadratureBudget::default()),
            Err(NumericsError::InsufficientShells { .. })
        ));
    }
}
