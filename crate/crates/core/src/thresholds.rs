//! Restriction and extension exponent thresholds computed from a spectrum.
//!
//! Positive results (the range of `q` for which `‖(fμ)^‖_q ≲ ‖f‖_{L²(μ)}`
//! holds) need lower information on the spectrum; failure results need
//! upper information. Every threshold is computed exactly over the
//! spectrum's scalar type, so analytic spectra produce rational answers.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::measures::{MeasureDescriptor, MeasureDims};
use crate::scalar::{rational_parts, Rational, Scalar};
use crate::spectrum::{FeasibilityRegime, PiecewiseLinearSpectrum, SpectrumError, SpectrumKind};

/// Whether the threshold itself is included (`q ≥ x`) or not (`q > x`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Openness {
    Open,
    Closed,
}

/// Which side of the threshold the statement is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// The statement holds for exponents above the threshold.
    Above,
    /// The statement holds for exponents below the threshold.
    Below,
}

impl Side {
    fn flip(self) -> Self {
        match self {
            Side::Above => Side::Below,
            Side::Below => Side::Above,
        }
    }
}

/// A Lebesgue exponent threshold, possibly infinite, with exact value when known.
#[derive(Clone, Debug, PartialEq)]
pub struct Exponent {
    value: f64,
    exact: Option<Rational>,
    openness: Openness,
    side: Side,
}

impl Exponent {
    pub fn finite<T: Scalar>(value: &T, openness: Openness, side: Side) -> Self {
        Self { value: value.to_f64(), exact: value.to_rational(), openness, side }
    }

    pub fn infinite(openness: Openness, side: Side) -> Self {
        Self { value: f64::INFINITY, exact: None, openness, side }
    }

    /// `f64::INFINITY` for infinite exponents.
    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn exact(&self) -> Option<Rational> {
        self.exact
    }

    pub fn is_infinite(&self) -> bool {
        self.value.is_infinite()
    }

    pub fn openness(&self) -> Openness {
        self.openness
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Table rendering: `11/3` when exact, else the float, `inf` when infinite.
    pub fn display(&self) -> String {
        match (&self.exact, self.is_infinite()) {
            (_, true) => "inf".to_string(),
            (Some(q), _) => crate::scalar::format_rational(q),
            (None, false) => format!("{:.6}", self.value),
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Exact {
            num: i128,
            den: i128,
        }
        let mut st = serializer.serialize_struct("Exponent", 5)?;
        st.serialize_field("value", &if self.is_infinite() { None } else { Some(self.value) })?;
        st.serialize_field("infinite", &self.is_infinite())?;
        st.serialize_field(
            "exact",
            &self.exact.as_ref().map(|q| {
                let (num, den) = rational_parts(q);
                Exact { num, den }
            }),
        )?;
        st.serialize_field("openness", &self.openness)?;
        st.serialize_field("side", &self.side)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum ThresholdError {
    #[error("Frostman dimension {alpha} must lie in (0, {d})")]
    InvalidFrostman { alpha: f64, d: u32 },
    #[error("Fourier dimension is zero; no decay-based threshold exists")]
    FourierDimZero,
    #[error("no theta in [0, 1] has dim_F^theta > d*theta")]
    EmptyFeasibleSet,
    #[error("theta = {0} does not satisfy dim_F^theta > d*theta")]
    InfeasibleTheta(f64),
    #[error("Sobolev dimension {dim_s} is not below the ambient dimension {d}")]
    SobolevDimTooLarge { dim_s: f64, d: u32 },
    #[error("need 0 < t < s < d, got d = {d}, s = {s}, t = {t}")]
    ParameterOrderViolated { d: u32, s: f64, t: f64 },
    #[error("endpoint hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("exponent must be at least 1, got {0}")]
    ExponentBelowOne(f64),
    #[error("a lower-bound spectrum cannot certify failure of restriction")]
    LowerBoundSpectrum,
    #[error("an upper-bound spectrum cannot certify restriction estimates")]
    UpperBoundSpectrum,
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

pub type Result<T, E = ThresholdError> = std::result::Result<T, E>;

fn check_alpha<T: Scalar>(d: u32, alpha: &T) -> Result<()> {
    let dd = T::from_int(d as i64);
    if *alpha <= T::zero() || *alpha >= dd {
        return Err(ThresholdError::InvalidFrostman { alpha: alpha.to_f64(), d });
    }
    Ok(())
}

fn require_lower<T: Scalar>(spec: &PiecewiseLinearSpectrum<T>) -> Result<()> {
    if spec.kind().bounds_from_below() {
        Ok(())
    } else {
        Err(ThresholdError::UpperBoundSpectrum)
    }
}

fn require_upper<T: Scalar>(spec: &PiecewiseLinearSpectrum<T>) -> Result<()> {
    if spec.kind().bounds_from_above() {
        Ok(())
    } else {
        Err(ThresholdError::LowerBoundSpectrum)
    }
}

fn two<T: Scalar>() -> T {
    T::from_int(2)
}

/// Dual exponent `q' = q/(q−1)`, with `1 ↔ ∞`.
///
/// A range `q > x` becomes `q' < x'`, so the side flips while the openness
/// is kept.
pub fn conjugate(q: &Exponent) -> Result<Exponent> {
    let side = q.side.flip();
    if q.is_infinite() {
        return Ok(Exponent { value: 1.0, exact: Some(Rational::from_integer(1)), openness: q.openness, side });
    }
    if q.value < 1.0 {
        return Err(ThresholdError::ExponentBelowOne(q.value));
    }
    if q.value == 1.0 {
        return Ok(Exponent::infinite(q.openness, side));
    }
    let exact = q.exact.map(|e| e / (e - Rational::from_integer(1)));
    let value = match exact {
        Some(e) => Scalar::to_f64(&e),
        None => q.value / (q.value - 1.0),
    };
    Ok(Exponent { value, exact, openness: q.openness, side })
}

/// Classical Stein–Tomas exponent `2 + 4(d − α)/β` (closed range).
pub fn stein_tomas_q<T: Scalar>(d: u32, alpha: &T, beta: &T) -> Result<Exponent> {
    check_alpha(d, alpha)?;
    if *beta <= T::zero() {
        return Err(ThresholdError::FourierDimZero);
    }
    let q = stein_tomas_value(d, alpha, beta);
    Ok(Exponent::finite(&q, Openness::Closed, Side::Above))
}

fn stein_tomas_value<T: Scalar>(d: u32, alpha: &T, beta: &T) -> T {
    let d = T::from_int(d as i64);
    two::<T>() + T::from_int(4) * (d - alpha.clone()) / beta.clone()
}

/// Stein–Tomas with `β = dim_F μ`; the range is open since `dim_F` is a supremum.
pub fn stein_tomas_q_dim<T: Scalar>(spec: &PiecewiseLinearSpectrum<T>, alpha: &T) -> Result<Exponent> {
    require_lower(spec)?;
    check_alpha(spec.ambient_dim(), alpha)?;
    let beta = spec.fourier_dim();
    if !beta.gt_tol(&T::zero()) {
        return Err(ThresholdError::FourierDimZero);
    }
    let q = stein_tomas_value(spec.ambient_dim(), alpha, &beta);
    Ok(Exponent::finite(&q, Openness::Open, Side::Above))
}

/// The interpolated exponent `2 + 2(d−α)(2−θ)/(dim_F^θ − αθ)` at one theta.
///
/// Only defined where `dim_F^θ > dθ`.
pub fn main_objective<T: Scalar>(spec: &PiecewiseLinearSpectrum<T>, alpha: &T, theta: &T) -> Result<T> {
    check_alpha(spec.ambient_dim(), alpha)?;
    let value = spec.eval(theta)?;
    let d = spec.d();
    if !value.gt_tol(&(d.clone() * theta.clone())) {
        return Err(ThresholdError::InfeasibleTheta(theta.to_f64()));
    }
    Ok(objective_unchecked(&d, alpha, theta, &value))
}

fn objective_unchecked<T: Scalar>(d: &T, alpha: &T, theta: &T, value: &T) -> T {
    two::<T>()
        + two::<T>() * (d.clone() - alpha.clone()) * (two::<T>() - theta.clone())
            / (value.clone() - alpha.clone() * theta.clone())
}

/// Optimised interpolation threshold together with its witnesses.
#[derive(Clone, Debug, PartialEq)]
pub struct MainThreshold<T = f64> {
    pub exponent: Exponent,
    pub value: T,
    pub theta_opt: T,
    /// Every candidate `(θ, objective)` that was compared.
    pub candidates: Vec<(T, T)>,
}

/// `2 + 2 inf_θ (d−α)(2−θ)/(dim_F^θ − αθ)` over `{θ : dim_F^θ > dθ}`.
///
/// On each linear piece of the spectrum the objective is a ratio of affine
/// functions of θ with positive denominator, hence monotone; the infimum is
/// therefore attained at a breakpoint inside the feasible interval or at its
/// right end θ*, where the objective tends to `4/θ*`. Ties go to the smallest θ.
pub fn main_q<T: Scalar>(spec: &PiecewiseLinearSpectrum<T>, alpha: &T) -> Result<MainThreshold<T>> {
    require_lower(spec)?;
    check_alpha(spec.ambient_dim(), alpha)?;
    let boundary = spec.diagonal_crossing();
    if boundary.regime == FeasibilityRegime::EmptyFeasible {
        return Err(ThresholdError::EmptyFeasibleSet);
    }
    let d = spec.d();
    let theta_star = boundary.theta_star;
    let mut candidates: Vec<(T, T)> = spec
        .breakpoints()
        .iter()
        .filter(|p| p.theta < theta_star)
        .map(|p| {
            let q = objective_unchecked(&d, alpha, &p.theta, &p.value);
            (p.theta.clone(), q)
        })
        .collect();
    let at_star = if boundary.regime == FeasibilityRegime::Interior {
        T::from_int(4) / theta_star.clone()
    } else {
        objective_unchecked(&d, alpha, &theta_star, &spec.value_at(&theta_star))
    };
    candidates.push((theta_star, at_star));

    let (theta_opt, value) = candidates
        .iter()
        .fold(None::<&(T, T)>, |best, c| match best {
            Some(b) if !c.1.lt_tol(&b.1) => Some(b),
            _ => Some(c),
        })
        .cloned()
        .expect("at least θ* is a candidate");
    Ok(MainThreshold {
        exponent: Exponent::finite(&value, Openness::Open, Side::Above),
        value,
        theta_opt,
        candidates,
    })
}

/// `inf{4/θ : dim_F^θ > dθ} = 4/θ*`; infinite when nothing is feasible.
pub fn corollary_q<T: Scalar>(spec: &PiecewiseLinearSpectrum<T>) -> Result<Exponent> {
    require_lower(spec)?;
    let boundary = spec.diagonal_crossing();
    Ok(match boundary.regime {
        FeasibilityRegime::EmptyFeasible => Exponent::infinite(Openness::Open, Side::Above),
        _ => Exponent::finite(&(T::from_int(4) / boundary.theta_star), Openness::Open, Side::Above),
    })
}

/// `4 + 4(d − dim_S)/dim_F`, the corollary applied to the concavity chord.
pub fn sobolev_q<T: Scalar>(spec: &PiecewiseLinearSpectrum<T>) -> Result<Exponent> {
    require_lower(spec)?;
    let d = spec.d();
    let dim_s = spec.sobolev_dim();
    let dim_f = spec.fourier_dim();
    if !dim_s.lt_tol(&d) {
        return Err(ThresholdError::SobolevDimTooLarge { dim_s: dim_s.to_f64(), d: spec.ambient_dim() });
    }
    if !dim_f.gt_tol(&T::zero()) {
        return Err(ThresholdError::FourierDimZero);
    }
    let four = T::from_int(4);
    let q = four.clone() + four * (d - dim_s) / dim_f;
    Ok(Exponent::finite(&q, Openness::Open, Side::Above))
}

/// Endpoint Sobolev exponent and its dual.
#[derive(Clone, Debug, PartialEq)]
pub struct SobolevEndpoint {
    pub q: Exponent,
    pub dual: Exponent,
}

/// `q = 4 + 4(d−s)/t` (closed) and `q' = 1 + t/(4(d−s+t) − t)`, for `0 < t < s < d`.
pub fn sobolev_endpoint_q<T: Scalar>(d: u32, s: &T, t: &T) -> Result<SobolevEndpoint> {
    let dd = T::from_int(d as i64);
    if !(*t > T::zero() && *t < *s && *s < dd) {
        return Err(ThresholdError::ParameterOrderViolated { d, s: s.to_f64(), t: t.to_f64() });
    }
    let four = T::from_int(4);
    let q = four.clone() + four.clone() * (dd.clone() - s.clone()) / t.clone();
    let dual = T::one() + t.clone() / (four * (dd - s.clone() + t.clone()) - t.clone());
    Ok(SobolevEndpoint {
        q: Exponent::finite(&q, Openness::Closed, Side::Above),
        dual: Exponent::finite(&dual, Openness::Closed, Side::Below),
    })
}

/// Exponents of the endpoint and Lorentz-space estimates for given `(d, α, θ, s)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EndpointExponents<T = f64> {
    pub q0: T,
    pub q0_dual: T,
    pub lambda: T,
    pub gamma: T,
    pub rho: T,
    pub sigma: T,
}

/// Closed forms for `q₀`, `q₀'`, the interpolation parameters `λ`, `γ`, and
/// the Lorentz exponents `ρ`, `σ`.
///
/// `ρ` and `σ` are evaluated in the shifted variables `A = d − α > 0`,
/// `S = s − dθ > 0`, in which both are ratios of polynomials with positive
/// coefficients:
/// `ρ = 4(2A+S)(A+S) / ((8−2θ)A² + (12−3θ)AS + 2S²)`, `σ = 4(A+S)/(θA + 2S)`.
pub fn endpoint_exponents<T: Scalar>(d: u32, alpha: &T, theta: &T, s: &T) -> Result<EndpointExponents<T>> {
    let dd = T::from_int(d as i64);
    if *alpha <= T::zero() || *alpha >= dd {
        return Err(ThresholdError::HypothesisViolated(format!("alpha = {alpha} must lie in (0, {d})")));
    }
    if *theta < T::zero() || *theta > T::one() {
        return Err(ThresholdError::HypothesisViolated(format!("theta = {theta} must lie in [0, 1]")));
    }
    if *s <= dd.clone() * theta.clone() {
        return Err(ThresholdError::HypothesisViolated(format!("need d*theta < s, got s = {s}")));
    }
    let (one, two, three, four) = (T::one(), T::from_int(2), T::from_int(3), T::from_int(4));
    let a = dd.clone() - alpha.clone();
    let gap = s.clone() - dd * theta.clone();

    let q0 = two.clone() + two.clone() * a.clone() * (two.clone() - theta.clone()) / (s.clone() - alpha.clone() * theta.clone());
    let q0_dual = one.clone()
        + (s.clone() - alpha.clone() * theta.clone())
            / (s.clone() + four.clone() * a.clone() - theta.clone() * (T::from_int(2 * d as i64) - alpha.clone()));
    let lambda = gap.clone() / (two.clone() * a.clone() + gap.clone());
    let gamma = gap.clone() / (a.clone() + gap.clone());

    let rho_num = four.clone() * (two.clone() * a.clone() + gap.clone()) * (a.clone() + gap.clone());
    let rho_den = (T::from_int(8) - two.clone() * theta.clone()) * a.clone() * a.clone()
        + (T::from_int(12) - three * theta.clone()) * a.clone() * gap.clone()
        + two.clone() * gap.clone() * gap.clone();
    let rho = rho_num / rho_den;
    let sigma = four * (a.clone() + gap.clone()) / (theta.clone() * a + two * gap);

    Ok(EndpointExponents { q0, q0_dual, lambda, gamma, rho, sigma })
}

/// `sup{2/θ : dim_F^θ < dθ}`: restriction fails for every `p` below it.
///
/// The failure set is `(θ_e, 1]` with `θ_e` the diagonal exit, so the value
/// is `2/θ_e`; infinite when `θ_e = 0` and unknown (`None`) when the
/// spectrum never drops below the diagonal.
pub fn converse_q<T: Scalar>(spec: &PiecewiseLinearSpectrum<T>) -> Result<Option<Exponent>> {
    require_upper(spec)?;
    let exit = spec.diagonal_exit();
    if exit == T::one() {
        return Ok(None);
    }
    if exit == T::zero() {
        return Ok(Some(Exponent::infinite(Openness::Open, Side::Below)));
    }
    Ok(Some(Exponent::finite(&(two::<T>() / exit), Openness::Open, Side::Below)))
}

/// `2d/dim_S`, the failure range from the Sobolev dimension alone.
pub fn hambrook_laba_q<T: Scalar>(spec: &PiecewiseLinearSpectrum<T>) -> Result<Option<Exponent>> {
    require_upper(spec)?;
    let d = spec.d();
    let dim_s = spec.sobolev_dim();
    if !dim_s.lt_tol(&d) {
        return Ok(None);
    }
    if !dim_s.gt_tol(&T::zero()) {
        return Ok(Some(Exponent::infinite(Openness::Open, Side::Below)));
    }
    Ok(Some(Exponent::finite(&(two::<T>() * d / dim_s), Openness::Open, Side::Below)))
}

/// Open interval of θ on which
/// `dim_F^θ > max{θ(α − dim_F/2) + dim_F, dθ}`, i.e. where the interpolated
/// exponent beats Stein–Tomas.
///
/// The difference is concave and affine between the spectrum breakpoints and
/// the crossing of the two lines, so it is evaluated there and the interval
/// ends are found by affine root finding.
pub fn improvement_interval<T: Scalar>(spec: &PiecewiseLinearSpectrum<T>, alpha: &T) -> Result<Option<(T, T)>> {
    require_lower(spec)?;
    check_alpha(spec.ambient_dim(), alpha)?;
    let d = spec.d();
    let f = spec.fourier_dim();
    let frost_slope = alpha.clone() - f.clone() / two::<T>();
    let lower = |theta: &T| {
        let l1 = theta.clone() * frost_slope.clone() + f.clone();
        let l2 = d.clone() * theta.clone();
        if l1 > l2 {
            l1
        } else {
            l2
        }
    };

    let mut thetas: Vec<T> = spec.breakpoints().iter().map(|p| p.theta.clone()).collect();
    // l1 = l2 at θ = dim_F / (d − α + dim_F/2)
    let meet = f.clone() / (d.clone() - alpha.clone() + f.clone() / two::<T>());
    if meet > T::zero() && meet < T::one() {
        thetas.push(meet);
    }
    thetas.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    thetas.dedup();
    let gaps: Vec<T> = thetas.iter().map(|t| spec.value_at(t) - lower(t)).collect();

    let positive = |g: &T| g.gt_tol(&T::zero());
    let Some(first) = gaps.iter().position(positive) else {
        return Ok(None);
    };
    let last = gaps.iter().rposition(positive).expect("some gap is positive");
    let lo = if first == 0 {
        thetas[0].clone()
    } else {
        root(&thetas[first - 1], &gaps[first - 1], &thetas[first], &gaps[first])
    };
    let hi = if last + 1 == thetas.len() {
        thetas[last].clone()
    } else {
        root(&thetas[last], &gaps[last], &thetas[last + 1], &gaps[last + 1])
    };
    Ok(Some((lo, hi)))
}

fn root<T: Scalar>(x0: &T, y0: &T, x1: &T, y1: &T) -> T {
    x0.clone() + y0.clone() / (y0.clone() - y1.clone()) * (x1.clone() - x0.clone())
}

/// True iff `dim_F^θ < dθ` on all of `(0, 1]`, in which case no restriction
/// estimate with finite `q` holds.
pub fn no_restriction_guard<T: Scalar>(spec: &PiecewiseLinearSpectrum<T>) -> Result<bool> {
    require_upper(spec)?;
    Ok(spec.diagonal_exit() == T::zero())
}

/// Every threshold for one measure.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThresholdReport {
    pub measure: String,
    pub d: u32,
    pub kind: SpectrumKind,
    pub frostman_dim: f64,
    pub fourier_dim: f64,
    pub sobolev_dim: f64,
    pub theta_star: f64,
    pub regime: FeasibilityRegime,
    /// `None` when the spectrum carries no lower information.
    pub stein_tomas: Option<Exponent>,
    pub main: Option<Exponent>,
    pub theta_opt: Option<f64>,
    pub corollary_4_over_theta: Option<Exponent>,
    pub sobolev: Option<Exponent>,
    pub converse_fail_below: Option<Exponent>,
    pub hambrook_laba_fail_below: Option<Exponent>,
    pub improvement_interval: Option<(f64, f64)>,
    pub no_restriction_flag: bool,
    /// Why optional fields are missing.
    pub notes: Vec<String>,
}

/// Thresholds for a spectrum and Frostman dimension.
pub fn report_for_spectrum<T: Scalar>(label: &str, spec: &PiecewiseLinearSpectrum<T>, alpha: &T) -> Result<ThresholdReport> {
    check_alpha(spec.ambient_dim(), alpha)?;
    let mut notes = Vec::new();
    let boundary = spec.diagonal_crossing();
    let lower = spec.kind().bounds_from_below();

    let (stein_tomas, main, theta_opt, corollary, sobolev, improvement) = if lower {
        let stein_tomas = match stein_tomas_q_dim(spec, alpha) {
            Ok(e) => e,
            Err(ThresholdError::FourierDimZero) => Exponent::infinite(Openness::Open, Side::Above),
            Err(e) => return Err(e),
        };
        let (main, theta_opt) = match main_q(spec, alpha) {
            Ok(m) => (m.exponent, Some(m.theta_opt.to_f64())),
            Err(ThresholdError::EmptyFeasibleSet) => {
                notes.push("feasible set empty: main threshold infinite".to_string());
                (Exponent::infinite(Openness::Open, Side::Above), None)
            }
            Err(e) => return Err(e),
        };
        let corollary = corollary_q(spec)?;
        let sobolev = match sobolev_q(spec) {
            Ok(e) => Some(e),
            Err(e @ (ThresholdError::FourierDimZero | ThresholdError::SobolevDimTooLarge { .. })) => {
                notes.push(format!("sobolev: {e}"));
                None
            }
            Err(e) => return Err(e),
        };
        let improvement = improvement_interval(spec, alpha)?.map(|(a, b)| (a.to_f64(), b.to_f64()));
        (Some(stein_tomas), Some(main), theta_opt, Some(corollary), sobolev, improvement)
    } else {
        notes.push("upper-bound spectrum: restriction thresholds not derivable".to_string());
        (None, None, None, None, None, None)
    };

    let (converse, hambrook_laba, guard) = if spec.kind().bounds_from_above() {
        (converse_q(spec)?, hambrook_laba_q(spec)?, no_restriction_guard(spec)?)
    } else {
        notes.push("lower-bound spectrum: failure thresholds not derivable".to_string());
        (None, None, false)
    };

    Ok(ThresholdReport {
        measure: label.to_string(),
        d: spec.ambient_dim(),
        kind: spec.kind(),
        frostman_dim: alpha.to_f64(),
        fourier_dim: spec.fourier_dim().to_f64(),
        sobolev_dim: spec.sobolev_dim().to_f64(),
        theta_star: boundary.theta_star.to_f64(),
        regime: boundary.regime,
        stein_tomas,
        main,
        theta_opt,
        corollary_4_over_theta: corollary,
        sobolev,
        converse_fail_below: converse,
        hambrook_laba_fail_below: hambrook_laba,
        improvement_interval: improvement,
        no_restriction_flag: guard,
        notes,
    })
}

/// All thresholds for a model measure.
pub fn full_report(measure: &MeasureDescriptor) -> Result<ThresholdReport> {
    let label = measure.label();
    match measure.dims() {
        MeasureDims::Exact { spectrum, frostman } => report_for_spectrum(&label, spectrum, frostman),
        MeasureDims::Float { spectrum, frostman } => report_for_spectrum(&label, spectrum, frostman),
    }
}
