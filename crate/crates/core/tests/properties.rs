mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spectral_restriction::measures::{
    cantor, cantor_dims, cantor_example_ranges, khalil_comparison, parse_descriptor, salem_convolved,
};
use spectral_restriction::numerics::{bessel_j, cantor_fourier};
use spectral_restriction::report::format_float;
use spectral_restriction::scalar::ratio;
use spectral_restriction::spectrum::{FeasibilityRegime, SpectrumKind};
use spectral_restriction::thresholds::{
    conjugate, converse_q, corollary_q, endpoint_exponents, main_objective, main_q, sobolev_q, stein_tomas_q_dim,
    Exponent, Openness, Side,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn threshold_ordering(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (spec, alpha) = common::random_spectrum(&mut rng, SpectrumKind::Exact);
        let main = main_q(&spec, &alpha).unwrap();
        let st = stein_tomas_q_dim(&spec, &alpha).unwrap().value();
        let cor = corollary_q(&spec).unwrap().value();
        let tol = 1e-9 * st;
        prop_assert!(main.value <= st + tol);
        prop_assert!(main.value <= cor + tol);
        if let Ok(sob) = sobolev_q(&spec) {
            prop_assert!(cor <= sob.value() + tol);
        }
        prop_assert!(main.value > 2.0);
        // the minimiser is one of the compared candidates
        prop_assert!(main.candidates.iter().any(|c| c.0 == main.theta_opt && c.1 == main.value));
    }

    #[test]
    fn objective_at_optimum(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (spec, alpha) = common::random_spectrum(&mut rng, SpectrumKind::LowerBound);
        let main = main_q(&spec, &alpha).unwrap();
        let boundary = spec.diagonal_crossing();
        if main.theta_opt < boundary.theta_star {
            let direct = main_objective(&spec, &alpha, &main.theta_opt).unwrap();
            prop_assert!((direct - main.value).abs() <= 1e-9 * direct);
        }
    }

    #[test]
    fn converse_is_half_corollary(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (spec, _) = common::random_exact_spectrum(&mut rng);
        prop_assume!(spec.diagonal_crossing().regime == FeasibilityRegime::Interior);
        let c = converse_q(&spec).unwrap().unwrap().exact().unwrap();
        let k = corollary_q(&spec).unwrap().exact().unwrap();
        prop_assert_eq!(c * ratio(2, 1), k);
    }

    #[test]
    fn conjugate_involution(q in 1.0001f64..1e4) {
        let e = Exponent::finite(&q, Openness::Open, Side::Above);
        let back = conjugate(&conjugate(&e).unwrap()).unwrap();
        prop_assert!((back.value() - q).abs() <= 1e-9 * q);
        prop_assert_eq!(back.side(), Side::Above);
    }

    #[test]
    fn endpoint_identities(d in 1u32..=5, a in 0.001f64..0.999, theta in 0.001f64..=1.0, s in 0.001f64..0.999) {
        let df = d as f64;
        let alpha = a * df;
        let s = df * theta + s * (df + 2.0 - df * theta);
        let e = endpoint_exponents(d, &alpha, &theta, &s).unwrap();
        prop_assert!((1.0 / e.q0 + 1.0 / e.q0_dual - 1.0).abs() < 1e-12);
        prop_assert!((1.0 / e.q0 - ((1.0 - e.lambda) * theta / 4.0 + e.lambda / 2.0)).abs() < 1e-12);
        prop_assert!((1.0 / e.q0 - (1.0 / e.sigma + 1.0 - 1.0 / e.rho) / 2.0).abs() < 1e-12);
        prop_assert!(e.lambda > 0.0 && e.lambda < 1.0 && e.gamma > 0.0 && e.gamma < 1.0);
        prop_assert!(e.rho > 1.0 && e.rho < 2.0);
    }

    #[test]
    fn bessel_recurrence(n in 1i32..20, t in 0.1f64..200.0) {
        // J_{n-1} + J_{n+1} = (2n/t) J_n
        let lhs = bessel_j(n as f64 - 1.0, t).unwrap() + bessel_j(n as f64 + 1.0, t).unwrap();
        let rhs = 2.0 * n as f64 / t * bessel_j(n as f64, t).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-10, "{} vs {}", lhs, rhs);
    }

    #[test]
    fn half_integer_recurrence(m in 0i32..12, t in 0.1f64..200.0) {
        let nu = m as f64 + 0.5;
        let lhs = bessel_j(nu - 1.0, t).unwrap() + bessel_j(nu + 1.0, t).unwrap();
        let rhs = 2.0 * nu / t * bessel_j(nu, t).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-10, "{} vs {}", lhs, rhs);
    }

    #[test]
    fn cantor_transform_bounded_and_hermitian(p in 0.5f64..0.99, xi in -1e6f64..1e6) {
        let z = cantor_fourier(p, xi, 1e-14);
        let w = cantor_fourier(p, -xi, 1e-14);
        prop_assert!(z.norm() <= 1.0 + 1e-12);
        prop_assert!((z - w.conj()).norm() < 1e-10);
    }

    #[test]
    fn khalil_scaling(c in 0.1f64..10.0, k in 1u32..6) {
        let eps = c * 10f64.powi(-(k as i32));
        let row = khalil_comparison(c, 1, 0.3, &[eps]).unwrap()[0];
        prop_assert!((row.q_spectrum * eps.sqrt() - 4.0 * c.sqrt()).abs() < 1e-9 * c.sqrt());
    }

    #[test]
    fn cantor_spectrum_valid(p in 0.5f64..0.999) {
        let m = cantor(p).unwrap();
        let spec = m.spectrum();
        let dims = cantor_dims(p);
        prop_assert!((spec.eval(&0.5).unwrap() - dims.half).abs() < 1e-12);
        prop_assert!((spec.eval(&1.0).unwrap() - dims.sobolev).abs() < 1e-12);
        prop_assert!(dims.frostman <= dims.sobolev + 1e-12);
    }

    #[test]
    fn ranges_match_pipeline(p in 0.5f64..0.9, t in 0.0f64..1.0) {
        let dims = cantor_dims(p);
        let lo = (0.5 - dims.half).max(0.0) + 1e-3;
        let hi = 1.0 - dims.frostman - 1e-3;
        prop_assume!(lo < hi);
        let eps = lo + t * (hi - lo);
        let (q, st) = cantor_example_ranges(p, eps).unwrap();
        let m = salem_convolved(&cantor(p).unwrap(), eps).unwrap();
        let direct = main_objective(&m.spectrum(), &m.frostman_dim(), &0.5).unwrap();
        prop_assert!((direct - q).abs() < 1e-9 * q);
        let st_pipe = stein_tomas_q_dim(&m.spectrum(), &m.frostman_dim()).unwrap().value();
        prop_assert!((st_pipe - st).abs() < 1e-9 * st);
    }

    #[test]
    fn float_format_round_trips_twelve_digits(x in -1e12f64..1e12) {
        let s = format_float(x);
        let back: f64 = s.parse().unwrap();
        prop_assert!((back - x).abs() <= 1e-11 * x.abs().max(1e-300));
        prop_assert_eq!(format_float(back), s);
    }

    #[test]
    fn descriptor_labels_parse_back(d in 3u32..20, p in 0.5f64..0.99) {
        for desc in [format!("cone:{d}"), format!("moment:{d}"), format!("sphere:{d}"), format!("cantor:{p}")] {
            let m = parse_descriptor(&desc).unwrap();
            prop_assert_eq!(m.label(), desc.clone());
            prop_assert_eq!(parse_descriptor(&m.label()).unwrap(), m);
        }
    }
}
