//! Scale stability of the constants in the cone decay bounds.
//!
//! For each region the ratio `|F(r, y)| / bound(r, y)` is sampled over
//! dyadic `|y|` bands; a bounded implied constant shows up as a band
//! maximum that does not drift with scale.

use rayon::prelude::*;
use serde::Serialize;

use super::cone::cone_profile;
use super::NumericsError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    /// `r/|y| ∉ (1/2, 2)`, bound `r^{(2−d)/2} |y|^{−1}`.
    GoodForBigY,
    /// `r/|y| ∈ (1/2, 2)` with `||y| − r| ≥ 1`, bound `r^{(2−d)/2} ||y| − r|^{−1}`.
    Hard,
    /// Every sample, bound `r^{(2−d)/2}`.
    Uniform,
}

impl Region {
    pub const ALL: [Region; 3] = [Region::GoodForBigY, Region::Hard, Region::Uniform];

    /// `|F| / bound`, or `None` when the point is outside the region.
    fn ratio(self, d: u32, r: f64, y: f64, value: f64) -> Option<f64> {
        let y = y.abs();
        let base = r.powf((2.0 - d as f64) / 2.0);
        let q = r / y;
        let near = q > 0.5 && q < 2.0;
        match self {
            Region::GoodForBigY if !near => Some(value * y / base),
            Region::Hard if near && (y - r).abs() >= 1.0 => Some(value * (y - r).abs() / base),
            Region::Uniform => Some(value / base),
            _ => None,
        }
    }
}

/// Where to sample `(r, y)`.
#[derive(Clone, Debug, PartialEq)]
pub enum SampleSpec {
    /// `|y|` log-spaced in bands `[2^b, 2^{b+1})` for `b` in `bands`, and
    /// `r = |y|·2^w` for `w` on a uniform grid of `[−octaves, octaves]`; points with `r < 1` are dropped.
    LogGrid { bands: (u32, u32), per_band: usize, ratio_steps_per_octave: usize, octaves: u32 },
    Points(Vec<(f64, f64)>),
}

impl Default for SampleSpec {
    /// `|y| ∈ [4, 512)`.
    fn default() -> Self {
        SampleSpec::LogGrid { bands: (2, 8), per_band: 6, ratio_steps_per_octave: 4, octaves: 3 }
    }
}

impl SampleSpec {
    pub fn points(&self) -> Vec<(f64, f64)> {
        match self {
            SampleSpec::Points(p) => p.clone(),
            SampleSpec::LogGrid { bands, per_band, ratio_steps_per_octave, octaves } => {
                let mut out = Vec::new();
                let steps = (*ratio_steps_per_octave).max(1) as i64;
                let span = *octaves as i64 * steps;
                for b in bands.0..=bands.1 {
                    for i in 0..*per_band {
                        let y = (b as f64 + i as f64 / *per_band as f64).exp2();
                        for w in -span..=span {
                            let r = y * (w as f64 / steps as f64).exp2();
                            if r >= 1.0 {
                                out.push((r, y));
                            }
                        }
                    }
                }
                out
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BandMax {
    /// `⌊log₂ |y|⌋`.
    pub band: i32,
    pub max_constant: f64,
    pub samples: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegionReport {
    pub region: Region,
    pub max_constant: f64,
    /// Band maximum at the largest scale over that at the smallest; 1 with a single band.
    pub scale_drift: f64,
    pub bands: Vec<BandMax>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub d: u32,
    pub samples: usize,
    pub regions: Vec<RegionReport>,
}

impl BoundReport {
    pub fn region(&self, region: Region) -> Option<&RegionReport> {
        self.regions.iter().find(|r| r.region == region)
    }
}

/// Sample the three decay bounds of the cone profile.
pub fn stationary_phase_check(d: u32, spec: &SampleSpec) -> Result<BoundReport, NumericsError> {
    if d < 3 {
        return Err(NumericsError::BadDimension(d));
    }
    let points = spec.points();
    let values: Result<Vec<f64>, NumericsError> =
        points.par_iter().map(|&(r, y)| cone_profile(d, r, y).map(|z| z.norm())).collect();
    let values = values?;

    let regions = Region::ALL
        .iter()
        .map(|&region| {
            let mut bands: Vec<BandMax> = Vec::new();
            for (&(r, y), &v) in points.iter().zip(&values) {
                let Some(ratio) = region.ratio(d, r, y, v) else { continue };
                let band = y.abs().log2().floor() as i32;
                match bands.iter_mut().find(|b| b.band == band) {
                    Some(b) => {
                        b.max_constant = b.max_constant.max(ratio);
                        b.samples += 1;
                    }
                    None => bands.push(BandMax { band, max_constant: ratio, samples: 1 }),
                }
            }
            bands.sort_by_key(|b| b.band);
            let max_constant = bands.iter().map(|b| b.max_constant).fold(0.0, f64::max);
            let scale_drift = match (bands.first(), bands.last()) {
                (Some(lo), Some(hi)) if bands.len() > 1 => hi.max_constant / lo.max_constant,
                _ => 1.0,
            };
            RegionReport { region, max_constant, scale_drift, bands }
        })
        .collect();
    Ok(BoundReport { d, samples: points.len(), regions })
}
