//! Numeric field abstraction shared by the spectrum and threshold code.
//!
//! Analytic spectra (cone, moment curve, sphere) are built over exact
//! rationals so that thresholds such as `(3d-4)/(d-2)` come out exactly;
//! sampled or transcendental spectra use `f64` with a small comparison
//! tolerance.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational used for analytic spectra.
pub type Rational = num_rational::Ratio<i128>;

/// Ordered field operations needed by the piecewise-linear machinery.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_int(n: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// Slack allowed when comparing derived quantities (zero for exact types).
    fn tolerance() -> Self;

    /// The exact value, when the representation carries one.
    fn to_rational(&self) -> Option<Rational>;

    fn abs_val(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// `self > other` beyond tolerance.
    fn gt_tol(&self, other: &Self) -> bool {
        self.clone() > other.clone() + Self::tolerance()
    }

    /// `self < other` beyond tolerance.
    fn lt_tol(&self, other: &Self) -> bool {
        self.clone() + Self::tolerance() < other.clone()
    }

    fn approx_eq(&self, other: &Self) -> bool {
        !self.gt_tol(other) && !self.lt_tol(other)
    }
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn tolerance() -> Self {
        1e-12
    }

    fn to_rational(&self) -> Option<Rational> {
        None
    }
}

impl Scalar for Rational {
    fn from_int(n: i64) -> Self {
        Rational::from_integer(n as i128)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or_else(|| {
            *self.numer() as f64 / *self.denom() as f64
        })
    }

    fn tolerance() -> Self {
        Rational::zero()
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(*self)
    }

    fn abs_val(&self) -> Self {
        self.abs()
    }
}

/// Shorthand for building `num/den` rationals in analytic formulas.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num as i128, den as i128)
}

/// Human rendering of an exact value: `11/3`, or `4` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Reduced `(num, den)` pair with positive denominator.
pub fn rational_parts(q: &Rational) -> (i128, i128) {
    let g = q.numer().gcd(q.denom());
    let (mut n, mut d) = (q.numer() / g, q.denom() / g);
    if d < 0 {
        n = -n;
        d = -d;
    }
    (n, d)
}
