//! Fourier transform of the Cantor measure `μ_p` on the IFS `{x/3, x/3 + 2/3}`.

use std::f64::consts::PI;

use num_complex::Complex64;

/// Smallest `n ≥ 0` with `3^n ≥ x`.
fn ceil_log3(x: f64) -> u32 {
    let mut n = 0;
    let mut pow = 1.0;
    while pow < x {
        pow *= 3.0;
        n += 1;
    }
    n
}

/// Number of product factors used at frequency `xi` for tolerance `tol`.
pub fn cantor_factor_count(xi: f64, tol: f64) -> u32 {
    ceil_log3(xi.abs().max(1.0)).max(1) + ceil_log3(1.0 / tol) + 5
}

/// `μ̂_p(ξ) = Π_{k≥1} (p + (1−p) e^{−4πiξ/3^k})`.
///
/// The product is truncated after [`cantor_factor_count`] factors; the
/// remaining factors are `1 + O(ξ3^{−k})` and are replaced by the linear
/// phase of their first-order expansion.
pub fn cantor_fourier(p: f64, xi: f64, tol: f64) -> Complex64 {
    let k_max = cantor_factor_count(xi, tol);
    let q = 1.0 - p;
    let mut acc = Complex64::new(1.0, 0.0);
    let mut pow = 1.0;
    for _ in 0..k_max {
        pow *= 3.0;
        // frequency in turns, reduced mod 1 so integer turns give exactly 1
        let turns = 2.0 * xi / pow;
        let frac = turns - turns.round();
        let (s, c) = (-2.0 * PI * frac).sin_cos();
        acc *= Complex64::new(p + q * c, q * s);
    }
    // Σ_{k>K} 2ξ/3^k = ξ/3^K turns
    let tail = -2.0 * PI * q * xi / pow;
    acc * Complex64::from_polar(1.0, tail)
}

/// `|μ̂_p(ξ)|`, the quantity the shell integrals need.
pub fn cantor_fourier_abs(p: f64, xi: f64, tol: f64) -> f64 {
    cantor_fourier(p, xi, tol).norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(p: f64, xi: f64, k: u32) -> Complex64 {
        (1..=k).fold(Complex64::new(1.0, 0.0), |acc, i| {
            let phase = -4.0 * PI * xi / 3f64.powi(i as i32);
            acc * (Complex64::new(p, 0.0) + Complex64::from_polar(1.0 - p, phase))
        })
    }

    #[test]
    fn normalisation() {
        for p in [0.5, 0.6, 0.9] {
            assert_eq!(cantor_fourier(p, 0.0, 1e-12), Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn matches_long_product() {
        for xi in [1.0, 0.3, 17.25, 1000.5] {
            let got = cantor_fourier(0.6, xi, 1e-14);
            let want = brute(0.6, xi, 60);
            assert!((got - want).norm() < 1e-12, "xi = {xi}: {got} vs {want}");
        }
    }

    #[test]
    fn symmetric_case_does_not_decay_along_powers_of_three() {
        let base = cantor_fourier_abs(0.5, 1.0, 1e-14);
        assert!(base > 0.1);
        for k in 0..=12 {
            let v = cantor_fourier_abs(0.5, 3f64.powi(k), 1e-14);
            assert!((v - base).abs() < 1e-12, "k = {k}");
        }
    }

    #[test]
    fn conjugate_symmetry() {
        let a = cantor_fourier(0.7, 12.3, 1e-12);
        let b = cantor_fourier(0.7, -12.3, 1e-12);
        assert!((a - b.conj()).norm() < 1e-14);
    }

    #[test]
    fn factor_count() {
        assert_eq!(cantor_factor_count(0.0, 1.0), 6);
        assert_eq!(cantor_factor_count(9.0, 1.0 / 9.0), 2 + 2 + 5);
        assert_eq!(cantor_factor_count(10.0, 1.0), 3 + 5);
    }
}
