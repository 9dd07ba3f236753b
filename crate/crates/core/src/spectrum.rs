//! Fourier spectra as piecewise-linear concave functions on `[0, 1]`.
//!
//! A spectrum `θ ↦ dim_F^θ μ` is stored by its breakpoints. The value at
//! `θ = 0` is the Fourier dimension and the value at `θ = 1` the Sobolev
//! dimension. Every constructed spectrum is validated: endpoints at 0 and 1,
//! strictly increasing thetas, non-decreasing values, non-increasing slopes
//! and the growth bound `value(θ) ≤ value(0) + dθ`.

use serde::{Deserialize, Serialize};

use crate::scalar::{Rational, Scalar};

/// Whether the breakpoints are the true spectrum or only a bound on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumKind {
    /// Proven formula for the spectrum.
    Exact,
    /// Pointwise lower bound (e.g. a concavity chord through known values).
    LowerBound,
    /// Pointwise upper bound; only usable for failure-type statements.
    UpperBound,
}

impl SpectrumKind {
    /// Lower information is what restriction (positive) thresholds need.
    pub fn bounds_from_below(self) -> bool {
        matches!(self, SpectrumKind::Exact | SpectrumKind::LowerBound)
    }

    /// Upper information is what failure (converse) thresholds need.
    pub fn bounds_from_above(self) -> bool {
        matches!(self, SpectrumKind::Exact | SpectrumKind::UpperBound)
    }
}

/// A known pair `(θ, dim_F^θ μ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumPoint<T = f64> {
    pub theta: T,
    pub value: T,
}

impl<T> SpectrumPoint<T> {
    pub fn new(theta: T, value: T) -> Self {
        Self { theta, value }
    }
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum ValidationError {
    #[error("ambient dimension must be at least 1")]
    BadDimension,
    #[error("breakpoints must start at theta = 0 and end at theta = 1")]
    BadEndpoints,
    #[error("breakpoint thetas must be strictly increasing (index {index})")]
    NotSorted { index: usize },
    #[error("spectrum value is negative at breakpoint {index}")]
    NegativeValue { index: usize },
    #[error("spectrum decreases at breakpoint {index}")]
    NotMonotone { index: usize },
    #[error("slope increases at breakpoint {index}, spectrum is not concave")]
    NotConcave { index: usize },
    #[error("breakpoint {index} exceeds dim_F + d*theta")]
    ExceedsLinearBound { index: usize },
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum SpectrumError {
    #[error(transparent)]
    Invalid(#[from] ValidationError),
    #[error("theta = {0} lies outside [0, 1]")]
    ThetaOutOfRange(f64),
    #[error("convolution shift must be non-negative, got {0}")]
    NegativeShift(f64),
}

/// Where the spectrum sits relative to the diagonal `dθ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FeasibilityRegime {
    /// `dim_F = 0`: the spectrum never rises strictly above `dθ`.
    EmptyFeasible,
    /// The spectrum stays at or above the diagonal on all of `[0, 1]`.
    FullFeasible,
    /// The spectrum crosses the diagonal inside `(0, 1)`.
    Interior,
}

/// `θ* = sup{θ : dim_F^θ > dθ}` together with its regime.
#[derive(Clone, Debug, PartialEq)]
pub struct FeasibilityBoundary<T = f64> {
    pub theta_star: T,
    pub regime: FeasibilityRegime,
}

/// Validated concave non-decreasing piecewise-linear spectrum.
#[derive(Clone, Debug, PartialEq)]
pub struct PiecewiseLinearSpectrum<T = f64> {
    ambient_dim: u32,
    points: Vec<SpectrumPoint<T>>,
    kind: SpectrumKind,
}

/// Spectrum over exact rationals.
pub type ExactSpectrum = PiecewiseLinearSpectrum<Rational>;

/// Check the structural invariants of a breakpoint list.
///
/// Slope and bound comparisons use [`Scalar::tolerance`]; the first violated
/// invariant is reported together with the offending breakpoint index.
pub fn validate<T: Scalar>(ambient_dim: u32, points: &[SpectrumPoint<T>]) -> Result<(), ValidationError> {
    if ambient_dim == 0 {
        return Err(ValidationError::BadDimension);
    }
    let (first, last) = match (points.first(), points.last()) {
        (Some(f), Some(l)) if points.len() >= 2 => (f, l),
        _ => return Err(ValidationError::BadEndpoints),
    };
    if first.theta != T::zero() || last.theta != T::one() {
        return Err(ValidationError::BadEndpoints);
    }
    for (i, w) in points.windows(2).enumerate() {
        if w[1].theta <= w[0].theta {
            return Err(ValidationError::NotSorted { index: i + 1 });
        }
    }
    for (i, p) in points.iter().enumerate() {
        if p.value.lt_tol(&T::zero()) {
            return Err(ValidationError::NegativeValue { index: i });
        }
    }
    for (i, w) in points.windows(2).enumerate() {
        if w[1].value.lt_tol(&w[0].value) {
            return Err(ValidationError::NotMonotone { index: i + 1 });
        }
    }
    let slopes: Vec<T> = points.windows(2).map(|w| segment_slope(&w[0], &w[1])).collect();
    for (i, s) in slopes.windows(2).enumerate() {
        if s[1].gt_tol(&s[0]) {
            return Err(ValidationError::NotConcave { index: i + 1 });
        }
    }
    let d = T::from_int(ambient_dim as i64);
    for (i, p) in points.iter().enumerate() {
        let bound = first.value.clone() + d.clone() * p.theta.clone();
        if p.value.gt_tol(&bound) {
            return Err(ValidationError::ExceedsLinearBound { index: i });
        }
    }
    Ok(())
}

fn segment_slope<T: Scalar>(a: &SpectrumPoint<T>, b: &SpectrumPoint<T>) -> T {
    (b.value.clone() - a.value.clone()) / (b.theta.clone() - a.theta.clone())
}

/// Root of the affine function through `(x0, y0)` and `(x1, y1)`.
fn affine_root<T: Scalar>(x0: &T, y0: &T, x1: &T, y1: &T) -> T {
    x0.clone() + y0.clone() / (y0.clone() - y1.clone()) * (x1.clone() - x0.clone())
}

impl<T: Scalar> PiecewiseLinearSpectrum<T> {
    pub fn new(ambient_dim: u32, points: Vec<SpectrumPoint<T>>, kind: SpectrumKind) -> Result<Self, ValidationError> {
        validate(ambient_dim, &points)?;
        Ok(Self { ambient_dim, points, kind })
    }

    /// Convenience constructor from `(θ, value)` pairs.
    pub fn from_pairs(ambient_dim: u32, pairs: Vec<(T, T)>, kind: SpectrumKind) -> Result<Self, ValidationError> {
        Self::new(
            ambient_dim,
            pairs.into_iter().map(|(t, v)| SpectrumPoint::new(t, v)).collect(),
            kind,
        )
    }

    /// Constant spectrum, the spectrum of a Salem measure of dimension `value`.
    pub fn constant(ambient_dim: u32, value: T, kind: SpectrumKind) -> Result<Self, ValidationError> {
        Self::from_pairs(ambient_dim, vec![(T::zero(), value.clone()), (T::one(), value)], kind)
    }

    /// Chord lower bound through sampled true values of a concave spectrum.
    ///
    /// Points are sorted by theta; they must include `θ = 0` and `θ = 1`.
    pub fn from_sampled_points(points: Vec<SpectrumPoint<T>>, ambient_dim: u32) -> Result<Self, ValidationError> {
        let mut points = points;
        points.sort_by(|a, b| a.theta.partial_cmp(&b.theta).unwrap_or(std::cmp::Ordering::Equal));
        Self::new(ambient_dim, points, SpectrumKind::LowerBound)
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    pub fn kind(&self) -> SpectrumKind {
        self.kind
    }

    pub fn breakpoints(&self) -> &[SpectrumPoint<T>] {
        &self.points
    }

    /// Interior breakpoints whose two neighbouring slopes differ.
    pub fn phase_transitions(&self) -> Vec<T> {
        self.points
            .windows(3)
            .filter(|w| !segment_slope(&w[0], &w[1]).approx_eq(&segment_slope(&w[1], &w[2])))
            .map(|w| w[1].theta.clone())
            .collect()
    }

    pub fn with_kind(mut self, kind: SpectrumKind) -> Self {
        self.kind = kind;
        self
    }

    pub(crate) fn d(&self) -> T {
        T::from_int(self.ambient_dim as i64)
    }

    /// `dim_F μ`, the value at `θ = 0`.
    pub fn fourier_dim(&self) -> T {
        self.points[0].value.clone()
    }

    /// `dim_S μ`, the value at `θ = 1`.
    pub fn sobolev_dim(&self) -> T {
        self.points[self.points.len() - 1].value.clone()
    }

    /// Linear interpolation; exact at breakpoints.
    pub fn eval(&self, theta: &T) -> Result<T, SpectrumError> {
        if *theta < T::zero() || *theta > T::one() {
            return Err(SpectrumError::ThetaOutOfRange(theta.to_f64()));
        }
        // index of the first breakpoint with theta strictly greater
        let hi = self.points.partition_point(|p| p.theta <= *theta);
        if hi == 0 {
            return Ok(self.points[0].value.clone());
        }
        let a = &self.points[hi - 1];
        if a.theta == *theta || hi == self.points.len() {
            return Ok(a.value.clone());
        }
        let b = &self.points[hi];
        Ok(a.value.clone() + (theta.clone() - a.theta.clone()) * segment_slope(a, b))
    }

    /// Infallible evaluation for thetas known to lie in `[0, 1]`.
    pub(crate) fn value_at(&self, theta: &T) -> T {
        let clamped = if *theta < T::zero() {
            T::zero()
        } else if *theta > T::one() {
            T::one()
        } else {
            theta.clone()
        };
        self.eval(&clamped).expect("theta clamped to [0, 1]")
    }

    /// `g(θ) = value(θ) − dθ` at every breakpoint.
    fn diagonal_gaps(&self) -> Vec<T> {
        let d = self.d();
        self.points
            .iter()
            .map(|p| p.value.clone() - d.clone() * p.theta.clone())
            .collect()
    }

    /// `θ* = sup{θ ∈ [0,1] : value(θ) > dθ}`.
    ///
    /// The gap `value(θ) − dθ` is concave, so its positivity set is an
    /// interval starting at 0 and the crossing is found on a single segment
    /// in closed form.
    pub fn diagonal_crossing(&self) -> FeasibilityBoundary<T> {
        let gaps = self.diagonal_gaps();
        if !gaps[0].gt_tol(&T::zero()) {
            // value(θ) ≤ dim_F + dθ = dθ everywhere.
            return FeasibilityBoundary { theta_star: T::zero(), regime: FeasibilityRegime::EmptyFeasible };
        }
        let last = gaps.len() - 1;
        if !gaps[last].lt_tol(&T::zero()) {
            return FeasibilityBoundary { theta_star: T::one(), regime: FeasibilityRegime::FullFeasible };
        }
        for i in 0..last {
            if gaps[i].gt_tol(&T::zero()) && !gaps[i + 1].gt_tol(&T::zero()) {
                let p = &self.points;
                let theta_star = if gaps[i + 1].approx_eq(&T::zero()) {
                    p[i + 1].theta.clone()
                } else {
                    affine_root(&p[i].theta, &gaps[i], &p[i + 1].theta, &gaps[i + 1])
                };
                return FeasibilityBoundary { theta_star, regime: FeasibilityRegime::Interior };
            }
        }
        unreachable!("concave gap positive at 0 and negative at 1 must cross")
    }

    /// `sup{θ ∈ [0,1] : value(θ) ≥ dθ}`; the failure set `{value < dθ}` is
    /// the half-open interval to its right.
    ///
    /// Agrees with [`Self::diagonal_crossing`] when the crossing is
    /// transversal; differs when the spectrum runs along the diagonal.
    pub fn diagonal_exit(&self) -> T {
        let gaps = self.diagonal_gaps();
        let last = gaps.len() - 1;
        if !gaps[last].lt_tol(&T::zero()) {
            return T::one();
        }
        // gaps[0] = dim_F ≥ 0, so some prefix of breakpoints is non-negative.
        let mut i = 0;
        while i < last && !gaps[i + 1].lt_tol(&T::zero()) {
            i += 1;
        }
        if gaps[i].gt_tol(&T::zero()) {
            let p = &self.points;
            affine_root(&p[i].theta, &gaps[i], &p[i + 1].theta, &gaps[i + 1])
        } else {
            self.points[i].theta.clone()
        }
    }

    /// Lower bound for `μ ∗ ν_ε` with `ν_ε` Salem of dimension `ε`:
    /// every value rises by `eps` and the result is a lower bound.
    pub fn shift_by_convolution(&self, eps: T) -> Result<Self, SpectrumError> {
        if eps.lt_tol(&T::zero()) {
            return Err(SpectrumError::NegativeShift(eps.to_f64()));
        }
        let points = self
            .points
            .iter()
            .map(|p| SpectrumPoint::new(p.theta.clone(), p.value.clone() + eps.clone()))
            .collect();
        Ok(Self::new(self.ambient_dim, points, SpectrumKind::LowerBound)?)
    }

    /// The concavity chord `dim_F + θ(dim_S − dim_F)`, always a lower bound.
    pub fn affine_chord(&self) -> Self {
        let pairs = vec![(T::zero(), self.fourier_dim()), (T::one(), self.sobolev_dim())];
        Self::from_pairs(self.ambient_dim, pairs, SpectrumKind::LowerBound)
            .expect("chord of a valid spectrum is valid")
    }

    /// Same spectrum over `f64`.
    pub fn to_f64(&self) -> PiecewiseLinearSpectrum<f64> {
        PiecewiseLinearSpectrum {
            ambient_dim: self.ambient_dim,
            points: self
                .points
                .iter()
                .map(|p| SpectrumPoint::new(p.theta.to_f64(), p.value.to_f64()))
                .collect(),
            kind: self.kind,
        }
    }

    pub fn to_json(&self) -> SpectrumJson {
        SpectrumJson {
            d: self.ambient_dim,
            kind: self.kind,
            breakpoints: self.points.iter().map(|p| [p.theta.to_f64(), p.value.to_f64()]).collect(),
        }
    }
}

impl PiecewiseLinearSpectrum<f64> {
    pub fn from_json(json: SpectrumJson) -> Result<Self, ValidationError> {
        let points = json.breakpoints.into_iter().map(|[t, v]| SpectrumPoint::new(t, v)).collect();
        Self::new(json.d, points, json.kind)
    }
}

/// Serialized spectrum: `{"d": 5, "kind": "exact", "breakpoints": [[0, 2], ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub d: u32,
    pub kind: SpectrumKind,
    pub breakpoints: Vec<[f64; 2]>,
}

impl Serialize for PiecewiseLinearSpectrum<f64> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PiecewiseLinearSpectrum<f64> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let json = SpectrumJson::deserialize(deserializer)?;
        Self::from_json(json).map_err(serde::de::Error::custom)
    }
}
