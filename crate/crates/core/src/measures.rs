//! Concrete measures: analytic spectra, Frostman dimensions and, where one
//! exists, a Fourier-transform evaluator.

use std::fmt;
use std::str::FromStr;

use serde::Deserialize;

use crate::numerics::FourierEvaluator;
use crate::scalar::{ratio, Rational, Scalar};
use crate::spectrum::{
    ExactSpectrum, PiecewiseLinearSpectrum, SpectrumError, SpectrumJson, SpectrumKind, SpectrumPoint, ValidationError,
};

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum MeasureError {
    #[error("{family} needs d >= {min}, got {d}")]
    DimensionTooSmall { family: &'static str, d: u32, min: u32 },
    #[error("probability p = {0} must lie in [1/2, 1)")]
    ProbabilityOutOfRange(f64),
    #[error("convolution parameter eps = {0} must lie in (0, 1)")]
    EpsOutOfRange(f64),
    #[error("Frostman dimension {alpha} must lie in (0, {d}]")]
    FrostmanOutOfRange { alpha: f64, d: u32 },
    #[error("base measure must carry a lower bound on its spectrum")]
    BaseNotLowerBound,
    #[error("dim_F^(1/2) bound {bound} does not exceed 1/2 at eps = {eps}")]
    ThetaHalfInfeasible { eps: f64, bound: f64 },
    #[error("model out of range: {0}")]
    ModelOutOfRange(String),
    #[error("cannot parse measure descriptor {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

pub type Result<T, E = MeasureError> = std::result::Result<T, E>;

/// Which measure a descriptor models.
#[derive(Clone, Debug, PartialEq)]
pub enum MeasureFamily {
    /// Surface measure on the truncated light cone in `ℝ^d`.
    Cone { d: u32 },
    /// Arclength on `t ↦ (t, t², …, t^d)`.
    MomentCurve { d: u32 },
    Sphere { d: u32 },
    /// Self-similar measure on the middle-third Cantor set with weights `(p, 1−p)`.
    Cantor { p: f64 },
    /// `p = 1/2`, carried with the upper model `dim_F^θ ≤ θ log 2/log 3`.
    CantorSymmetric,
    /// `base ∗ ν_ε` with `ν_ε` Salem of dimension `ε`.
    SalemConvolved { base: Box<MeasureFamily>, eps: f64 },
    Custom,
}

/// Spectrum and Frostman dimension, over exact rationals when available.
#[derive(Clone, Debug, PartialEq)]
pub enum MeasureDims {
    Exact { spectrum: ExactSpectrum, frostman: Rational },
    Float { spectrum: PiecewiseLinearSpectrum, frostman: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct MeasureDescriptor {
    family: MeasureFamily,
    dims: MeasureDims,
}

impl MeasureDescriptor {
    fn new(family: MeasureFamily, dims: MeasureDims) -> Result<Self> {
        let m = Self { family, dims };
        let (alpha, d) = (m.frostman_dim(), m.ambient_dim());
        if !(alpha > 0.0 && alpha <= d as f64) {
            return Err(MeasureError::FrostmanOutOfRange { alpha, d });
        }
        Ok(m)
    }

    /// Any valid spectrum with a user-supplied Frostman dimension.
    pub fn custom(spectrum: PiecewiseLinearSpectrum, frostman: f64) -> Result<Self> {
        Self::new(MeasureFamily::Custom, MeasureDims::Float { spectrum, frostman })
    }

    pub fn family(&self) -> &MeasureFamily {
        &self.family
    }

    pub fn dims(&self) -> &MeasureDims {
        &self.dims
    }

    pub fn ambient_dim(&self) -> u32 {
        match &self.dims {
            MeasureDims::Exact { spectrum, .. } => spectrum.ambient_dim(),
            MeasureDims::Float { spectrum, .. } => spectrum.ambient_dim(),
        }
    }

    pub fn frostman_dim(&self) -> f64 {
        match &self.dims {
            MeasureDims::Exact { frostman, .. } => frostman.to_f64(),
            MeasureDims::Float { frostman, .. } => *frostman,
        }
    }

    pub fn spectrum(&self) -> PiecewiseLinearSpectrum {
        match &self.dims {
            MeasureDims::Exact { spectrum, .. } => spectrum.to_f64(),
            MeasureDims::Float { spectrum, .. } => spectrum.clone(),
        }
    }

    pub fn exact_spectrum(&self) -> Option<&ExactSpectrum> {
        match &self.dims {
            MeasureDims::Exact { spectrum, .. } => Some(spectrum),
            MeasureDims::Float { .. } => None,
        }
    }

    /// Fourier transform evaluator, for the Cantor measures and the cone.
    pub fn evaluator(&self) -> Option<FourierEvaluator> {
        match self.family {
            MeasureFamily::Cone { d } => Some(FourierEvaluator::Cone { d }),
            MeasureFamily::Cantor { p } => Some(FourierEvaluator::Cantor { p }),
            MeasureFamily::CantorSymmetric => Some(FourierEvaluator::Cantor { p: 0.5 }),
            _ => None,
        }
    }

    /// Descriptor string that parses back to this measure (`custom` for custom spectra).
    pub fn label(&self) -> String {
        self.family.to_string()
    }
}

impl fmt::Display for MeasureFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureFamily::Cone { d } => write!(f, "cone:{d}"),
            MeasureFamily::MomentCurve { d } => write!(f, "moment:{d}"),
            MeasureFamily::Sphere { d } => write!(f, "sphere:{d}"),
            MeasureFamily::Cantor { p } => write!(f, "cantor:{p}"),
            MeasureFamily::CantorSymmetric => write!(f, "cantor-sym"),
            MeasureFamily::SalemConvolved { base, eps } => write!(f, "{base}+salem:{eps}"),
            MeasureFamily::Custom => write!(f, "custom"),
        }
    }
}

fn exact(spectrum: ExactSpectrum, frostman: Rational) -> MeasureDims {
    MeasureDims::Exact { spectrum, frostman }
}

/// Light cone in `ℝ^d`: `dim_F^θ = min{2 + (d−1)θ, d − 2 + θ}`, Frostman `d − 1`.
pub fn cone(d: u32) -> Result<MeasureDescriptor> {
    if d < 3 {
        return Err(MeasureError::DimensionTooSmall { family: "cone", d, min: 3 });
    }
    let di = d as i64;
    let value = |t: Rational| {
        let a = ratio(2, 1) + ratio(di - 1, 1) * t;
        let b = ratio(di - 2, 1) + t;
        a.min(b)
    };
    let mut thetas = vec![ratio(0, 1)];
    if d >= 5 {
        thetas.push(ratio(di - 4, di - 2));
    }
    thetas.push(ratio(1, 1));
    let pairs = thetas.into_iter().map(|t| (t, value(t))).collect();
    let spectrum = PiecewiseLinearSpectrum::from_pairs(d, pairs, SpectrumKind::Exact)?;
    MeasureDescriptor::new(MeasureFamily::Cone { d }, exact(spectrum, ratio(di - 1, 1)))
}

/// Moment curve in `ℝ^d`: lower envelope over `k = 2..d` of `2/k + (k²−k−2)θ/(2k)`.
///
/// Frostman dimension 1 (arclength on a bi-Lipschitz curve).
pub fn moment_curve(d: u32) -> Result<MeasureDescriptor> {
    if d < 2 {
        return Err(MeasureError::DimensionTooSmall { family: "moment", d, min: 2 });
    }
    let value = |t: Rational| {
        (2..=d as i64)
            .map(|k| ratio(2, k) + ratio(k * k - k - 2, 2 * k) * t)
            .min()
            .expect("k ranges over at least one value")
    };
    let mut thetas = vec![ratio(0, 1)];
    thetas.extend((3..=d as i64).rev().map(|k| ratio(4, k * k - k + 2)));
    thetas.push(ratio(1, 1));
    let pairs = thetas.into_iter().map(|t| (t, value(t))).collect();
    let spectrum = PiecewiseLinearSpectrum::from_pairs(d, pairs, SpectrumKind::Exact)?;
    MeasureDescriptor::new(MeasureFamily::MomentCurve { d }, exact(spectrum, ratio(1, 1)))
}

/// Unit sphere `S^{d−1}`, a Salem set: constant spectrum `d − 1`.
pub fn sphere(d: u32) -> Result<MeasureDescriptor> {
    if d < 2 {
        return Err(MeasureError::DimensionTooSmall { family: "sphere", d, min: 2 });
    }
    let s = ratio(d as i64 - 1, 1);
    let spectrum = PiecewiseLinearSpectrum::constant(d, s, SpectrumKind::Exact)?;
    MeasureDescriptor::new(MeasureFamily::Sphere { d }, exact(spectrum, s))
}

/// Closed-form dimensions of the Cantor measure `μ_p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CantorDims {
    pub frostman: f64,
    /// `dim_F^{1/2} μ_p`.
    pub half: f64,
    pub sobolev: f64,
}

pub fn cantor_dims(p: f64) -> CantorDims {
    let log3 = 3f64.ln();
    let q = 1.0 - p;
    let mid = 2.0 * p * q;
    CantorDims {
        frostman: p.ln() / -log3,
        half: (p.powi(4) + mid * mid + q.powi(4)).ln() / (-2.0 * log3),
        sobolev: (p * p + q * q).ln() / -log3,
    }
}

fn check_p(p: f64) -> Result<()> {
    if !(0.5..1.0).contains(&p) {
        return Err(MeasureError::ProbabilityOutOfRange(p));
    }
    Ok(())
}

/// `μ_p`, known only at `θ ∈ {0, 1/2, 1}`; exposed as their chord, a lower bound.
pub fn cantor(p: f64) -> Result<MeasureDescriptor> {
    check_p(p)?;
    let dims = cantor_dims(p);
    let points = vec![
        SpectrumPoint::new(0.0, 0.0),
        SpectrumPoint::new(0.5, dims.half),
        SpectrumPoint::new(1.0, dims.sobolev),
    ];
    let spectrum = PiecewiseLinearSpectrum::from_sampled_points(points, 1)?;
    MeasureDescriptor::new(MeasureFamily::Cantor { p }, MeasureDims::Float { spectrum, frostman: dims.frostman })
}

/// `μ_{1/2}` with the upper model `dim_F^θ ≤ θ log 2/log 3`, for failure results.
pub fn cantor_symmetric() -> Result<MeasureDescriptor> {
    let s = 2f64.ln() / 3f64.ln();
    let spectrum = PiecewiseLinearSpectrum::from_pairs(1, vec![(0.0, 0.0), (1.0, s)], SpectrumKind::UpperBound)?;
    MeasureDescriptor::new(MeasureFamily::CantorSymmetric, MeasureDims::Float { spectrum, frostman: s })
}

/// `base ∗ ν_ε`: every spectrum value and the Frostman dimension rise by `ε`.
pub fn salem_convolved(base: &MeasureDescriptor, eps: f64) -> Result<MeasureDescriptor> {
    if !(eps > 0.0) {
        return Err(MeasureError::ModelOutOfRange(format!("eps = {eps} must be positive")));
    }
    let spectrum = base.spectrum();
    if !spectrum.kind().bounds_from_below() {
        return Err(MeasureError::BaseNotLowerBound);
    }
    let shifted = spectrum.shift_by_convolution(eps)?;
    let family = MeasureFamily::SalemConvolved { base: Box::new(base.family.clone()), eps };
    MeasureDescriptor::new(family, MeasureDims::Float { spectrum: shifted, frostman: base.frostman_dim() + eps })
}

/// Ranges for `μ_p ∗ ν_ε` in `ℝ`: the interpolation exponent at `θ = 1/2`
/// and the Stein–Tomas exponent.
///
/// Both are returned as computed, including values below 2 for large `ε`
/// where the formulas leave their regime.
pub fn cantor_example_ranges(p: f64, eps: f64) -> Result<(f64, f64)> {
    check_p(p)?;
    if !(eps > 0.0 && eps < 1.0) {
        return Err(MeasureError::EpsOutOfRange(eps));
    }
    let dims = cantor_dims(p);
    let bound = dims.half + eps;
    if bound <= 0.5 {
        return Err(MeasureError::ThetaHalfInfeasible { eps, bound });
    }
    let log3 = 3f64.ln();
    let lp = p.ln();
    let q = 1.0 - p;
    let mid = 2.0 * p * q;
    let lq = (p.powi(4) + mid * mid + q.powi(4)).ln();
    let gap = log3 + lp - eps * log3;
    let q_theorem = 2.0 + 6.0 * gap / (lp + eps * log3 - lq);
    let q_stein_tomas = 2.0 + 4.0 * gap / (eps * log3);
    Ok((q_theorem, q_stein_tomas))
}

/// Smallest `ε` for which `dim_F^{1/2} μ_p + ε > 1/2`.
pub fn cantor_feasibility_cutoff(p: f64) -> Result<f64> {
    check_p(p)?;
    Ok((0.5 - cantor_dims(p).half).max(0.0))
}

/// One row of the small-ε comparison for the model `f(θ) = dθ − cθ²`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KhalilRow {
    pub eps: f64,
    pub theta0: f64,
    pub q_spectrum: f64,
    pub q_stein_tomas: f64,
}

/// Compare `4/θ₀` with Stein–Tomas for `f + ε`, where `f(θ) = dθ − cθ²`.
///
/// `θ₀ = √(ε/c)` solves `f(θ₀) + ε = dθ₀`; Stein–Tomas gives
/// `2 + 4·gap/ε` with `gap = d − dim_Fr`.
pub fn khalil_comparison(c: f64, d: u32, frostman_gap: f64, eps_list: &[f64]) -> Result<Vec<KhalilRow>> {
    if !(c > 0.0) || !(frostman_gap > 0.0) || d == 0 {
        return Err(MeasureError::ModelOutOfRange(format!("need c > 0, gap > 0, d >= 1 (c = {c}, gap = {frostman_gap})")));
    }
    eps_list
        .iter()
        .map(|&eps| {
            if !(eps > 0.0 && eps <= c) {
                return Err(MeasureError::ModelOutOfRange(format!("eps = {eps} must lie in (0, c = {c}]")));
            }
            let theta0 = (eps / c).sqrt();
            Ok(KhalilRow {
                eps,
                theta0,
                q_spectrum: 4.0 * (c / eps).sqrt(),
                q_stein_tomas: 2.0 + 4.0 * frostman_gap / eps,
            })
        })
        .collect()
}

/// File format for `custom:@file.json`: a spectrum plus its Frostman dimension.
#[derive(Clone, Debug, Deserialize)]
struct CustomFile {
    #[serde(flatten)]
    spectrum: SpectrumJson,
    frostman: f64,
}

fn parse_err(input: &str, reason: impl Into<String>) -> MeasureError {
    MeasureError::Parse { input: input.to_string(), reason: reason.into() }
}

/// Parse `cone:5`, `moment:8`, `sphere:3`, `cantor:0.6`, `cantor-sym`,
/// `cantor:0.6+salem:0.067` or `custom:@file.json`.
pub fn parse_descriptor(input: &str) -> Result<MeasureDescriptor> {
    let input = input.trim();
    let mut parts = input.split('+');
    let head = parts.next().unwrap_or_default();
    let mut measure = parse_base(input, head)?;
    for part in parts {
        let Some(eps) = part.strip_prefix("salem:") else {
            return Err(parse_err(input, format!("unknown modifier {part:?}")));
        };
        let eps: f64 = eps.parse().map_err(|_| parse_err(input, format!("bad number {eps:?}")))?;
        measure = salem_convolved(&measure, eps)?;
    }
    Ok(measure)
}

fn parse_base(input: &str, head: &str) -> Result<MeasureDescriptor> {
    if head == "cantor-sym" {
        return cantor_symmetric();
    }
    let Some((name, arg)) = head.split_once(':') else {
        return Err(parse_err(input, "expected name:argument"));
    };
    let int = || arg.parse::<u32>().map_err(|_| parse_err(input, format!("bad dimension {arg:?}")));
    match name {
        "cone" => cone(int()?),
        "moment" => moment_curve(int()?),
        "sphere" => sphere(int()?),
        "cantor" => cantor(arg.parse().map_err(|_| parse_err(input, format!("bad probability {arg:?}")))?),
        "custom" => {
            let path = arg.strip_prefix('@').ok_or_else(|| parse_err(input, "custom needs @path"))?;
            let text = std::fs::read_to_string(path).map_err(|e| parse_err(input, format!("{path}: {e}")))?;
            let file: CustomFile = serde_json::from_str(&text).map_err(|e| parse_err(input, format!("{path}: {e}")))?;
            MeasureDescriptor::custom(PiecewiseLinearSpectrum::from_json(file.spectrum)?, file.frostman)
        }
        _ => Err(parse_err(input, format!("unknown measure {name:?}"))),
    }
}

impl FromStr for MeasureDescriptor {
    type Err = MeasureError;

    fn from_str(s: &str) -> Result<Self> {
        parse_descriptor(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact_points(m: &MeasureDescriptor) -> Vec<(Rational, Rational)> {
        m.exact_spectrum().unwrap().breakpoints().iter().map(|p| (p.theta, p.value)).collect()
    }

    #[test]
    fn cone_examples() {
        assert_eq!(
            exact_points(&cone(5).unwrap()),
            vec![(ratio(0, 1), ratio(2, 1)), (ratio(1, 3), ratio(10, 3)), (ratio(1, 1), ratio(4, 1))]
        );
        assert_eq!(exact_points(&cone(3).unwrap()), vec![(ratio(0, 1), ratio(1, 1)), (ratio(1, 1), ratio(2, 1))]);
        assert_eq!(exact_points(&cone(4).unwrap()), vec![(ratio(0, 1), ratio(2, 1)), (ratio(1, 1), ratio(3, 1))]);
        assert_eq!(cone(2).unwrap_err(), MeasureError::DimensionTooSmall { family: "cone", d: 2, min: 3 });
        for d in 3..=12 {
            let s = cone(d).unwrap();
            let e = s.exact_spectrum().unwrap();
            assert_eq!(e.fourier_dim(), ratio(2.min(d as i64 - 2), 1));
            assert_eq!(e.sobolev_dim(), ratio(d as i64 - 1, 1));
        }
    }

    #[test]
    fn moment_examples() {
        let m = moment_curve(8).unwrap();
        let e = m.exact_spectrum().unwrap();
        assert_eq!(e.fourier_dim(), ratio(1, 4));
        assert_eq!(e.phase_transitions().len(), 6);
        let m3 = moment_curve(3).unwrap();
        assert_eq!(
            exact_points(&m3),
            vec![(ratio(0, 1), ratio(2, 3)), (ratio(1, 2), ratio(1, 1)), (ratio(1, 1), ratio(1, 1))]
        );
        assert_eq!(exact_points(&moment_curve(2).unwrap()), vec![(ratio(0, 1), ratio(1, 1)), (ratio(1, 1), ratio(1, 1))]);
        for d in 2..=12 {
            let m = moment_curve(d).unwrap();
            let e = m.exact_spectrum().unwrap();
            assert_eq!(e.fourier_dim() * ratio(d as i64, 1), ratio(2, 1));
            assert_eq!(e.sobolev_dim(), ratio(1, 1));
            let want: Vec<Rational> = (3..=d as i64).rev().map(|k| ratio(4, k * k - k + 2)).collect();
            assert_eq!(e.phase_transitions(), want);
        }
    }

    #[test]
    fn cantor_examples() {
        let m = cantor(0.6).unwrap();
        let s = m.spectrum();
        let pts: Vec<_> = s.breakpoints().iter().map(|p| p.value).collect();
        assert!((pts[1] - 0.43370838196).abs() < 1e-10);
        assert!((pts[2] - 0.59522952196).abs() < 1e-10);
        assert!((m.frostman_dim() - 0.46497352072).abs() < 1e-10);
        assert_eq!(s.kind(), SpectrumKind::LowerBound);

        let half = cantor(0.5).unwrap();
        assert!((half.spectrum().sobolev_dim() - 0.63092975357).abs() < 1e-10);
        assert!((half.frostman_dim() - 0.63092975357).abs() < 1e-10);
        assert!((cantor(0.99).unwrap().frostman_dim() - 0.00914821).abs() < 1e-7);
        assert_eq!(cantor(1.0).unwrap_err(), MeasureError::ProbabilityOutOfRange(1.0));
        assert_eq!(cantor(0.4).unwrap_err(), MeasureError::ProbabilityOutOfRange(0.4));
    }

    #[test]
    fn salem_examples() {
        let m = salem_convolved(&cantor(0.6).unwrap(), 0.067).unwrap();
        let s = m.spectrum();
        assert!((s.eval(&0.5).unwrap() - 0.500708382).abs() < 1e-8);
        assert!((m.frostman_dim() - (0.46497352072 + 0.067)).abs() < 1e-10);
        assert_eq!(m.label(), "cantor:0.6+salem:0.067");
        assert!(m.evaluator().is_none());

        let tiny = salem_convolved(&cantor(0.6).unwrap(), 1e-12).unwrap();
        assert!((tiny.spectrum().sobolev_dim() - 0.59522952196).abs() < 1e-10);
        assert_eq!(salem_convolved(&cantor_symmetric().unwrap(), 0.1).unwrap_err(), MeasureError::BaseNotLowerBound);
    }

    #[test]
    fn example_ranges() {
        let (t, st) = cantor_example_ranges(0.6, 0.067).unwrap();
        assert!((t - 7.98189220).abs() < 1e-7);
        assert!((st - 29.94187936).abs() < 1e-7);
        let (t, st) = cantor_example_ranges(0.6, 0.7).unwrap();
        assert!((t - 1.10213870).abs() < 1e-7);
        assert!((st - 1.05729417).abs() < 1e-7);
        assert!(st < t);
        assert_eq!(cantor_example_ranges(0.6, 1.0).unwrap_err(), MeasureError::EpsOutOfRange(1.0));
        assert!(matches!(cantor_example_ranges(0.6, 0.05), Err(MeasureError::ThetaHalfInfeasible { .. })));
        assert!((cantor_feasibility_cutoff(0.6).unwrap() - 0.06629161804).abs() < 1e-10);
    }

    #[test]
    fn khalil_examples() {
        let rows = khalil_comparison(1.0, 1, 0.5, &[0.01, 1.0, 1e-4]).unwrap();
        assert!((rows[0].q_spectrum - 40.0).abs() < 1e-12);
        assert!((rows[0].q_stein_tomas - 202.0).abs() < 1e-9);
        assert_eq!(rows[1].theta0, 1.0);
        assert!(rows[2].q_spectrum / rows[2].q_stein_tomas < rows[0].q_spectrum / rows[0].q_stein_tomas);
        assert!(khalil_comparison(1.0, 1, 0.5, &[2.0]).is_err());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["cone:5", "moment:8", "sphere:3", "cantor:0.6", "cantor:0.6+salem:0.067", "cantor-sym"] {
            assert_eq!(parse_descriptor(s).unwrap().label(), s);
        }
        assert!(matches!(parse_descriptor("cone"), Err(MeasureError::Parse { .. })));
        assert!(matches!(parse_descriptor("torus:3"), Err(MeasureError::Parse { .. })));
        assert!(matches!(parse_descriptor("cone:5+foo:1"), Err(MeasureError::Parse { .. })));
    }

    #[test]
    fn custom_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.json");
        std::fs::write(&path, r#"{"d":1,"kind":"exact","breakpoints":[[0,0.4],[1,0.9]],"frostman":0.4}"#).unwrap();
        let m = parse_descriptor(&format!("custom:@{}", path.display())).unwrap();
        assert_eq!(m.frostman_dim(), 0.4);
        assert_eq!(m.spectrum().sobolev_dim(), 0.9);
    }
}
