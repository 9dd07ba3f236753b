//! Numerical verification: Fourier transforms of the concrete measures,
//! dyadic shell energies and log-slope estimates of spectrum values.

pub mod bessel;
pub mod cantor;
pub mod cone;
pub mod quadrature;
pub mod regression;
pub mod shells;
pub mod stationary;

use num_complex::Complex64;
use serde::Serialize;

pub use bessel::bessel_j;
pub use cantor::{cantor_fourier, cantor_fourier_abs};
pub use cone::{cone_profile, cone_profile_batch, cone_profile_batch_with, BatchOptions, UniformGrid};
pub use regression::{estimate_spectrum, estimate_spectrum_point, fit_shells, RegressionFit};
pub use shells::{shell_integral, shell_integrals, ConeLattice, QuadratureBudget, ShellEstimate};
pub use stationary::{stationary_phase_check, BoundReport, Region, RegionReport, SampleSpec};

/// Tolerance used for the Cantor product inside the shell integrals.
pub const CANTOR_TOL: f64 = 1e-13;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum NumericsError {
    #[error("unsupported Bessel order {0}")]
    UnsupportedOrder(f64),
    #[error("Bessel argument {0} is negative")]
    NegativeArgument(f64),
    #[error("radius {0} must be positive")]
    NonpositiveRadius(f64),
    #[error("cone needs d >= 3, got {0}")]
    BadDimension(u32),
    #[error("y grid spacing {0} exceeds 1/4")]
    GridTooCoarse(f64),
    #[error("theta = {0} must lie in (0, 1]")]
    ThetaOutOfRange(f64),
    #[error("node budget {limit} exceeded after {} shells", partial.len())]
    BudgetExceeded { partial: Vec<ShellEstimate>, limit: u64 },
    #[error("need j_max >= j_min + 4 with at least 3 nonzero shells, got {have}")]
    InsufficientShells { have: usize },
    #[error("every shell integral vanished")]
    AllShellsZero,
}

/// How a transform is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EvaluatorKind {
    /// `ξ ↦ μ̂(ξ)` on the line.
    Scalar1D,
    /// `(r, y) ↦ μ̂(x, y)` with `r = |x|`, integrated against `r^{d−2}`.
    RadialProfile,
}

/// A Fourier transform the shell integrals can sample.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "measure", rename_all = "snake_case")]
pub enum FourierEvaluator {
    Cantor { p: f64 },
    Cone { d: u32 },
}

impl FourierEvaluator {
    pub fn kind(&self) -> EvaluatorKind {
        match self {
            FourierEvaluator::Cantor { .. } => EvaluatorKind::Scalar1D,
            FourierEvaluator::Cone { .. } => EvaluatorKind::RadialProfile,
        }
    }

    pub fn ambient_dim(&self) -> u32 {
        match self {
            FourierEvaluator::Cantor { .. } => 1,
            FourierEvaluator::Cone { d } => *d,
        }
    }

    /// `μ̂(ξ)` for one-dimensional measures.
    pub fn scalar(&self, xi: f64) -> Option<Complex64> {
        match self {
            FourierEvaluator::Cantor { p } => Some(cantor_fourier(*p, xi, CANTOR_TOL)),
            FourierEvaluator::Cone { .. } => None,
        }
    }

    /// `F(r, y)` for radial profiles.
    pub fn profile(&self, r: f64, y: f64) -> Option<Result<Complex64, NumericsError>> {
        match self {
            FourierEvaluator::Cone { d } => Some(cone_profile(*d, r, y)),
            FourierEvaluator::Cantor { .. } => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluator_dispatch() {
        let c = FourierEvaluator::Cantor { p: 0.6 };
        assert_eq!(c.kind(), EvaluatorKind::Scalar1D);
        assert_eq!(c.scalar(0.0), Some(Complex64::new(1.0, 0.0)));
        assert!(c.profile(1.0, 0.0).is_none());
        let k = FourierEvaluator::Cone { d: 4 };
        assert_eq!(k.kind(), EvaluatorKind::RadialProfile);
        assert_eq!(k.ambient_dim(), 4);
        assert!(k.scalar(1.0).is_none());
        assert!(k.profile(1.0, 0.0).unwrap().is_ok());
    }
}
