//! Radial profile of the Fourier transform of the cone measure.
//!
//! With `z = (x, y) ∈ ℝ^{d−1} × ℝ` and `r = |x|`, the transform is
//! `F(r, y) = r^{(3−d)/2} ∫_0^1 v^{(d−1)/2} J_{(d−3)/2}(2πvr) e^{−2πiyv} dv`
//! (normalising constant set to 1).

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::bessel::bessel_j2;
use super::quadrature::gl8;
use super::NumericsError;

fn check(d: u32, r: f64) -> Result<(), NumericsError> {
    if d < 3 {
        return Err(NumericsError::BadDimension(d));
    }
    if !(r > 0.0) {
        return Err(NumericsError::NonpositiveRadius(r));
    }
    Ok(())
}

/// `v^{(d−1)/2} J_{(d−3)/2}(2πvr)`.
fn integrand(d: u32, r: f64, v: f64) -> f64 {
    let twice = d as i32 - 3;
    let weight = if d % 2 == 1 { v.powi((d as i32 - 1) / 2) } else { v.powf((d as f64 - 1.0) / 2.0) };
    weight * bessel_j2(twice, 2.0 * PI * v * r)
}

fn prefactor(d: u32, r: f64) -> f64 {
    r.powf((3.0 - d as f64) / 2.0)
}

/// Pointwise profile by composite 8-node Gauss–Legendre with panels of
/// width at most `min(0.05, 1/(4(r + |y|)))`.
pub fn cone_profile(d: u32, r: f64, y: f64) -> Result<Complex64, NumericsError> {
    check(d, r)?;
    let width = 0.05f64.min(1.0 / (4.0 * (r + y.abs())));
    let panels = (1.0 / width).ceil() as usize;
    let omega = -2.0 * PI * y;
    let integral: Complex64 = gl8().integrate_composite(0.0, 1.0, panels, |v| {
        Complex64::from_polar(integrand(d, r, v), omega * v)
    });
    Ok(integral * prefactor(d, r))
}

/// `{start + k·step : 0 ≤ k < len}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UniformGrid {
    pub start: f64,
    pub step: f64,
    pub len: usize,
}

impl UniformGrid {
    pub fn new(start: f64, step: f64, len: usize) -> Self {
        Self { start, step, len }
    }

    pub fn point(&self, k: usize) -> f64 {
        self.start + k as f64 * self.step
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len).map(|k| self.point(k))
    }

    pub fn max_abs(&self) -> f64 {
        if self.len == 0 {
            return 0.0;
        }
        self.start.abs().max(self.point(self.len - 1).abs())
    }
}

/// Sampling density of the batched profile.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct BatchOptions {
    /// Samples of `[0, 1]` per unit of `r + max|y|`; at least 8.
    pub samples_per_unit: f64,
    /// Combine `N` and `2N` samples to cancel the leading `h²` error.
    pub richardson: bool,
}

impl Default for BatchOptions {
    fn default() -> Self {
        Self { samples_per_unit: 32.0, richardson: true }
    }
}

/// Sample count: a power of two, at least `max(64, density·(r + max|y|))`.
fn sample_count(r: f64, grid: &UniformGrid, opts: &BatchOptions) -> usize {
    let density = opts.samples_per_unit.max(8.0);
    let need = (density * (r + grid.max_abs())).max(64.0).ceil() as usize;
    need.next_power_of_two()
}

/// `I(θ) = ∫_0^1 (1 − u) e^{−iθu} du`.
fn end_weight(theta: f64) -> Complex64 {
    if theta.abs() < 1.0 {
        // Σ_k (−iθ)^k / (k! (k+1)(k+2))
        let mut sum = Complex64::new(0.0, 0.0);
        let mut pow = Complex64::new(1.0, 0.0);
        let step = Complex64::new(0.0, -theta);
        let mut fact = 1.0;
        for k in 0..25 {
            let kf = k as f64;
            if k > 0 {
                fact *= kf;
                pow *= step;
            }
            sum += pow / (fact * (kf + 1.0) * (kf + 2.0));
        }
        sum
    } else {
        let i = Complex64::new(0.0, 1.0);
        let e = Complex64::from_polar(1.0, -theta);
        let t2 = theta * theta;
        (1.0 - e) / (i * theta) - e * (i / theta + 1.0 / t2) + 1.0 / t2
    }
}

/// `W(θ) = (sin(θ/2)/(θ/2))²`.
fn interior_weight(theta: f64) -> f64 {
    let h = 0.5 * theta;
    if h.abs() < 1e-4 {
        1.0 - h * h / 3.0
    } else {
        let s = h.sin() / h;
        s * s
    }
}

fn direct_sums(g: &[f64], grid: &UniformGrid) -> Vec<Complex64> {
    let nf = (g.len() - 1) as f64;
    grid.points()
        .map(|y| {
            g.iter()
                .enumerate()
                .map(|(i, &gi)| Complex64::from_polar(gi, -2.0 * PI * y * i as f64 / nf))
                .sum()
        })
        .collect()
}

/// `Σ_n g_n e^{−2πi y_k n/N}` for every grid point, by FFT when `1/step`
/// is an integer and by direct summation otherwise.
fn phase_sums(g: &[f64], grid: &UniformGrid, planner: &mut FftPlanner<f64>) -> Vec<Complex64> {
    let n = g.len() - 1;
    let inv = 1.0 / grid.step;
    let oversample = inv.round();
    let m = n * oversample as usize;
    if (inv - oversample).abs() > 1e-9 || m <= n || grid.len > m {
        return direct_sums(g, grid);
    }
    // e^{−2πi(start + kΔ)i/N} = e^{−2πi·start·i/N} e^{−2πi·ki/M} with M = N/Δ
    let nf = n as f64;
    let mut buf = vec![Complex64::new(0.0, 0.0); m];
    for (i, &gi) in g.iter().enumerate() {
        buf[i] = Complex64::from_polar(gi, -2.0 * PI * grid.start * i as f64 / nf);
    }
    let fft: Arc<dyn rustfft::Fft<f64>> = planner.plan_fft_forward(m);
    fft.process(&mut buf);
    buf.truncate(grid.len);
    buf
}

fn filon(d: u32, r: f64, g: &[f64], grid: &UniformGrid, planner: &mut FftPlanner<f64>) -> Vec<Complex64> {
    let n = g.len() - 1;
    let h = 1.0 / n as f64;
    let sums = phase_sums(g, grid, planner);
    let (g0, g_end) = (g[0], g[n]);
    let pre = prefactor(d, r);
    grid.points()
        .zip(sums)
        .map(|(y, s)| {
            let omega = 2.0 * PI * y;
            let theta = omega * h;
            let tail = Complex64::from_polar(g_end, -omega);
            let ends = end_weight(theta) * g0 + end_weight(-theta) * tail;
            (interior_weight(theta) * (s - g0 - tail) + ends) * (h * pre)
        })
        .collect()
}

/// Profile at every `y` of a uniform grid by the Filon-trapezoid rule:
/// the sampled integrand is interpolated linearly and integrated exactly
/// against `e^{−2πiyv}`, all `y` at once through one FFT.
pub fn cone_profile_batch_with(
    d: u32,
    r: f64,
    grid: &UniformGrid,
    opts: &BatchOptions,
    planner: &mut FftPlanner<f64>,
) -> Result<Vec<Complex64>, NumericsError> {
    check(d, r)?;
    if grid.step > 0.25 + 1e-12 || !(grid.step > 0.0) {
        return Err(NumericsError::GridTooCoarse(grid.step));
    }
    let n = sample_count(r, grid, opts);
    let big = if opts.richardson { 2 * n } else { n };
    let samples: Vec<f64> = (0..=big).map(|i| integrand(d, r, i as f64 / big as f64)).collect();
    if !opts.richardson {
        return Ok(filon(d, r, &samples, grid, planner));
    }
    let coarse: Vec<f64> = samples.iter().step_by(2).copied().collect();
    let fine = filon(d, r, &samples, grid, planner);
    let rough = filon(d, r, &coarse, grid, planner);
    Ok(fine.into_iter().zip(rough).map(|(f, c)| (4.0 * f - c) / 3.0).collect())
}

/// [`cone_profile_batch_with`] with default options and a private FFT planner.
pub fn cone_profile_batch(d: u32, r: f64, grid: &UniformGrid) -> Result<Vec<Complex64>, NumericsError> {
    cone_profile_batch_with(d, r, grid, &BatchOptions::default(), &mut FftPlanner::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_radius_limit_for_d3() {
        for y in [0.0, 0.7, 3.0] {
            let b = 2.0 * PI * y;
            let want = if y == 0.0 {
                Complex64::new(0.5, 0.0)
            } else {
                let i = Complex64::new(0.0, 1.0);
                let e = Complex64::from_polar(1.0, -b);
                e * (i / b + 1.0 / (b * b)) - 1.0 / (b * b)
            };
            let got = cone_profile(3, 1e-9, y).unwrap();
            assert!((got - want).norm() < 1e-12, "y = {y}");
        }
    }

    #[test]
    fn half_integer_closed_form_d4() {
        // F(4, r, 0) = (1/(πr)) (sin a − a cos a)/a², a = 2πr
        for r in [10.0, 2.3, 0.4] {
            let a = 2.0 * PI * r;
            let want = (a.sin() - a * a.cos()) / (a * a) / (PI * r);
            let got = cone_profile(4, r, 0.0).unwrap();
            assert!((got.re - want).abs() < 1e-12 && got.im.abs() < 1e-14, "r = {r}");
        }
        assert!((cone_profile(4, 10.0, 0.0).unwrap().re + 1.0 / (200.0 * PI * PI)).abs() < 1e-12);
    }

    #[test]
    fn conjugation_symmetry() {
        let a = cone_profile(5, 3.2, 7.5).unwrap();
        let b = cone_profile(5, 3.2, -7.5).unwrap();
        assert!((a - b.conj()).norm() < 1e-15);
    }

    #[test]
    fn errors() {
        assert_eq!(cone_profile(3, 0.0, 1.0), Err(NumericsError::NonpositiveRadius(0.0)));
        let grid = UniformGrid::new(0.0, 0.5, 4);
        assert_eq!(cone_profile_batch(3, 1.0, &grid), Err(NumericsError::GridTooCoarse(0.5)));
    }

    #[test]
    fn batch_single_point() {
        let grid = UniformGrid::new(0.0, 0.25, 1);
        let b = cone_profile_batch(3, 1.0, &grid).unwrap();
        let p = cone_profile(3, 1.0, 0.0).unwrap();
        assert!((b[0] - p).norm() < 1e-6 * p.norm());
    }

    #[test]
    fn batch_matches_pointwise() {
        for (d, r) in [(3, 100.0), (4, 37.0), (5, 12.5)] {
            let grid = UniformGrid::new(-128.0, 0.25, 1024);
            let batch = cone_profile_batch(d, r, &grid).unwrap();
            let point: Vec<Complex64> = grid.points().map(|y| cone_profile(d, r, y).unwrap()).collect();
            let sup = point.iter().map(|z| z.norm()).fold(0.0, f64::max);
            let dev = batch.iter().zip(&point).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
            assert!(dev < 1e-5 * sup, "d = {d}, r = {r}: {dev} vs sup {sup}");
        }
    }

    #[test]
    fn batch_conjugate_symmetric() {
        let grid = UniformGrid::new(-10.0, 0.25, 81);
        let b = cone_profile_batch(3, 5.0, &grid).unwrap();
        for k in 0..81 {
            assert!((b[k] - b[80 - k].conj()).norm() < 1e-10);
        }
    }

    #[test]
    fn non_fft_step_falls_back() {
        let grid = UniformGrid::new(-1.0, 0.15, 15);
        let b = cone_profile_batch(3, 2.0, &grid).unwrap();
        for (k, y) in grid.points().enumerate() {
            let p = cone_profile(3, 2.0, y).unwrap();
            assert!((b[k] - p).norm() < 1e-6, "y = {y}");
        }
    }
}
