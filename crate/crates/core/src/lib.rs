//! Fourier restriction exponents computed from the Fourier spectrum of a
//! measure, plus numerical estimation of spectra for concrete measures.
//!
//! The spectrum `θ ↦ dim_F^θ μ` is a concave, non-decreasing function on
//! `[0, 1]` interpolating between the Fourier dimension (`θ = 0`) and the
//! Sobolev dimension (`θ = 1`). From a piecewise-linear model of it and the
//! Frostman dimension, [`thresholds`] derives the range of `q` for which
//! the extension estimate `‖(fμ)^‖_{L^q} ≲ ‖f‖_{L²(μ)}` holds or fails.

pub mod measures;
pub mod numerics;
pub mod report;
pub mod scalar;
pub mod spectrum;
pub mod thresholds;

pub use measures::{parse_descriptor, MeasureDescriptor};
pub use scalar::{Rational, Scalar};
pub use spectrum::{PiecewiseLinearSpectrum, SpectrumKind, SpectrumPoint};
pub use thresholds::{full_report, Exponent, ThresholdReport};
