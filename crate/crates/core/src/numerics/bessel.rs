//! Bessel functions `J_m` of integer and half-integer order.

use std::f64::consts::PI;

use super::NumericsError;

/// Below this argument integer orders use the ascending series.
const SERIES_LIMIT: f64 = 12.0;

/// `J_m(t)` for `m ∈ {-1/2, 0, 1/2, 1, 3/2, …}` (and negative integers) and `t ≥ 0`.
///
/// Integer orders: ascending series for small `t`, otherwise the
/// large-argument expansion for `J_0`, `J_1` followed by forward
/// recurrence. Half-integer orders: closed forms for `J_{±1/2}` and
/// forward recurrence, with the series when `t` is below the order.
pub fn bessel_j(order: f64, t: f64) -> Result<f64, NumericsError> {
    let twice = 2.0 * order;
    if twice.fract() != 0.0 || twice.abs() > 1e6 || (twice < -1.0 && twice.rem_euclid(2.0) != 0.0) {
        return Err(NumericsError::UnsupportedOrder(order));
    }
    if !(t >= 0.0) {
        return Err(NumericsError::NegativeArgument(t));
    }
    Ok(bessel_j2(twice as i32, t))
}

/// `J_{n/2}(t)` given the doubled order `n`; callers guarantee a supported order.
pub(crate) fn bessel_j2(twice: i32, t: f64) -> f64 {
    if twice % 2 == 0 {
        let n = twice / 2;
        if n < 0 {
            let v = integer_order(-n, t);
            return if n % 2 == 0 { v } else { -v };
        }
        integer_order(n, t)
    } else {
        half_order(twice, t)
    }
}

fn integer_order(n: i32, t: f64) -> f64 {
    if t < SERIES_LIMIT || t < n as f64 {
        return series(2 * n, t);
    }
    let j0 = hankel(0.0, t);
    if n == 0 {
        return j0;
    }
    let j1 = hankel(1.0, t);
    recur_up(0.0, j0, j1, n - 1, t)
}

fn half_order(twice: i32, t: f64) -> f64 {
    let m = twice as f64 / 2.0;
    if t == 0.0 {
        return if twice == -1 { f64::INFINITY } else { 0.0 };
    }
    if t <= m {
        return series(twice, t);
    }
    let scale = (2.0 / (PI * t)).sqrt();
    let (s, c) = t.sin_cos();
    let jm = scale * c; // J_{-1/2}
    let jp = scale * s; // J_{1/2}
    if twice == -1 {
        return jm;
    }
    recur_up(-0.5, jm, jp, (twice - 1) / 2, t)
}

/// Starting from `J_{m0}`, `J_{m0+1}`, apply `steps` forward steps and return the last value.
fn recur_up(m0: f64, mut lo: f64, mut hi: f64, steps: i32, t: f64) -> f64 {
    let mut m = m0 + 1.0;
    for _ in 0..steps {
        let next = 2.0 * m / t * hi - lo;
        lo = hi;
        hi = next;
        m += 1.0;
    }
    hi
}

/// `Γ(n/2 + 1)` for `n ≥ -1`.
pub(crate) fn gamma_half_plus_one(twice: i32) -> f64 {
    // Γ(1/2) = √π, Γ(1) = 1, Γ(x + 1) = xΓ(x)
    let (mut x, mut g) = if twice % 2 == 0 { (1.0, 1.0) } else { (0.5, PI.sqrt()) };
    let target = twice as f64 / 2.0 + 1.0;
    while x < target - 0.25 {
        g *= x;
        x += 1.0;
    }
    g
}

/// Ascending series `Σ (−1)^k (t/2)^{2k+m} / (k! Γ(k+m+1))`.
fn series(twice: i32, t: f64) -> f64 {
    let m = twice as f64 / 2.0;
    if t == 0.0 {
        return if twice == 0 { 1.0 } else { 0.0 };
    }
    let half = 0.5 * t;
    let q = half * half;
    let mut term = half.powf(m) / gamma_half_plus_one(twice);
    let mut sum = term;
    let mut k = 0.0;
    loop {
        k += 1.0;
        term *= -q / (k * (k + m));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() && k > q.sqrt() {
            break;
        }
        if k > 500.0 {
            break;
        }
    }
    sum
}

/// Large-argument expansion `√(2/πt)(P cos χ − Q sin χ)`, `χ = t − (m/2 + 1/4)π`.
fn hankel(m: f64, t: f64) -> f64 {
    let mu = 4.0 * m * m;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut c = 1.0_f64;
    let mut k = 1.0_f64;
    loop {
        let next = c * (mu - (2.0 * k - 1.0).powi(2)) / (k * 8.0 * t);
        if next.abs() > c.abs() || next == 0.0 {
            break;
        }
        c = next;
        // c_k alternates into Q (odd k) and P (even k) with sign (−1)^{⌊k/2⌋}
        let ki = k as i64;
        let sign = if (ki / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if ki % 2 == 1 {
            q += sign * c;
        } else {
            p += sign * c;
        }
        if c.abs() < 1e-17 {
            break;
        }
        k += 1.0;
    }
    let chi = t - (0.5 * m + 0.25) * PI;
    let (s, co) = chi.sin_cos();
    (2.0 / (PI * t)).sqrt() * (p * co - q * s)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `J_n(t) = (1/2π) ∫_0^{2π} cos(nφ − t sin φ) dφ` by the periodic trapezoid rule.
    fn oracle(n: i32, t: f64) -> f64 {
        let steps = 2 * t as usize + 200;
        let h = 2.0 * PI / steps as f64;
        (0..steps)
            .map(|i| {
                let phi = i as f64 * h;
                (n as f64 * phi - t * phi.sin()).cos()
            })
            .sum::<f64>()
            / steps as f64
    }

    #[test]
    fn special_values() {
        assert_eq!(bessel_j(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(2.0, 0.0).unwrap(), 0.0);
        assert!((bessel_j(0.5, PI / 2.0).unwrap() - 2.0 / PI).abs() < 1e-15);
        assert!((bessel_j(0.0, 10.0).unwrap() - -0.24593576445).abs() < 1e-10);
        assert!((bessel_j(0.0, 12.0).unwrap() - 0.04768931080).abs() < 1e-10);
        assert!((bessel_j(1.0, 5.0).unwrap() - -0.32757913759).abs() < 1e-10);
    }

    #[test]
    fn unsupported() {
        assert_eq!(bessel_j(0.3, 1.0), Err(NumericsError::UnsupportedOrder(0.3)));
        assert_eq!(bessel_j(-1.5, 1.0), Err(NumericsError::UnsupportedOrder(-1.5)));
        assert!(bessel_j(1.0, -1.0).is_err());
    }

    #[test]
    fn integer_orders_match_integral_oracle() {
        let ts = [0.1, 1.0, 5.0, 11.9, 12.0, 12.5, 20.0, 47.3, 100.0, 999.0, 5_000.0, 40_000.0, 100_000.0];
        for n in 0..=4 {
            for &t in &ts {
                let got = bessel_j2(2 * n, t);
                let want = oracle(n, t);
                assert!((got - want).abs() < 1e-10, "n = {n}, t = {t}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn half_orders_match_closed_forms() {
        for &t in &[0.01, 0.3, 1.0, 1.7, 3.0, 10.0, 250.0, 1e5] {
            let s = (2.0 / (PI * t)).sqrt();
            let (sn, cs) = t.sin_cos();
            let j32 = s * (sn / t - cs);
            let j52 = s * ((3.0 / (t * t) - 1.0) * sn - 3.0 * cs / t);
            assert!((bessel_j2(3, t) - j32).abs() < 1e-12, "t = {t}");
            assert!((bessel_j2(5, t) - j52).abs() < 1e-12, "t = {t}");
            assert!((bessel_j2(-1, t) - s * cs).abs() < 1e-15);
        }
    }

    #[test]
    fn reflection() {
        assert!((bessel_j2(-2, 3.3) + bessel_j2(2, 3.3)).abs() < 1e-15);
        assert_eq!(bessel_j2(-4, 3.3), bessel_j2(4, 3.3));
    }
}
