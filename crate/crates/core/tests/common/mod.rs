//! Random valid spectra shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use spectral_restriction::scalar::{ratio, Rational};
use spectral_restriction::spectrum::{PiecewiseLinearSpectrum, SpectrumKind};

/// Concave non-decreasing spectrum in `R^d`, `d ∈ 1..=5`, with `dim_F > 0`,
/// plus a Frostman exponent in `(0, d)`.
pub fn random_spectrum<R: Rng>(rng: &mut R, kind: SpectrumKind) -> (PiecewiseLinearSpectrum, f64) {
    let d = rng.gen_range(1..=5u32);
    let df = d as f64;
    let f = rng.gen_range(0.02..df - 0.02);
    let pieces = rng.gen_range(1..=4);
    let mut cuts: Vec<f64> = (1..pieces).map(|_| rng.gen_range(0.05..0.95)).collect();
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    cuts.dedup_by(|a, b| (*a - *b).abs() < 0.02);
    let mut slopes: Vec<f64> = (0..=cuts.len()).map(|_| rng.gen_range(0.0..1.0) * (df - f)).collect();
    slopes.sort_by(|a, b| b.partial_cmp(a).unwrap());

    let mut thetas = vec![0.0];
    thetas.extend(cuts);
    thetas.push(1.0);
    let mut pairs = vec![(0.0, f)];
    let mut v = f;
    for (w, s) in thetas.windows(2).zip(&slopes) {
        v += s * (w[1] - w[0]);
        pairs.push((w[1], v));
    }
    let alpha = rng.gen_range(0.01..df - 0.01);
    (PiecewiseLinearSpectrum::from_pairs(d, pairs, kind).unwrap(), alpha)
}

/// Exact spectrum on breakpoints `k/12` with rational slopes.
pub fn random_exact_spectrum<R: Rng>(rng: &mut R) -> (PiecewiseLinearSpectrum<Rational>, Rational) {
    let d = rng.gen_range(1..=5i64);
    let den = rng.gen_range(2..=9i64);
    let f = ratio(rng.gen_range(1..d * den), den);
    let room = ratio(d, 1) - f;
    let mut cuts: Vec<i64> = (1..12).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<i64> = cuts[..rng.gen_range(0..4)].to_vec();
    cuts.sort();
    let mut numer: Vec<i64> = (0..10).collect();
    numer.shuffle(rng);
    let mut numer: Vec<i64> = numer[..=cuts.len()].to_vec();
    numer.sort_by(|a, b| b.cmp(a));

    let mut thetas = vec![ratio(0, 1)];
    thetas.extend(cuts.iter().map(|&k| ratio(k, 12)));
    thetas.push(ratio(1, 1));
    let mut pairs = vec![(ratio(0, 1), f)];
    let mut v = f;
    for (w, &m) in thetas.windows(2).zip(&numer) {
        v += room * ratio(m, 10) * (w[1] - w[0]);
        pairs.push((w[1], v));
    }
    let alpha = ratio(rng.gen_range(1..d * 7), 7);
    (PiecewiseLinearSpectrum::from_pairs(d as u32, pairs, SpectrumKind::Exact).unwrap(), alpha)
}

/// Piecewise-linear interpolation of `(θ, value)` pairs, independent of the library.
pub fn interp(pairs: &[(f64, f64)], t: f64) -> f64 {
    let i = pairs.windows(2).position(|w| t <= w[1].0).unwrap_or(pairs.len() - 2);
    let (a, b) = (pairs[i], pairs[i + 1]);
    a.1 + (b.1 - a.1) * (t - a.0) / (b.0 - a.0)
}
