//! When does a spectrum improve on Stein-Tomas? Prints the interval for a
//! few spectra and the region data for one (F, alpha, S, d).
//!
//!     cargo run --example improvement_region

use spectral_restriction::report::{figure_table, FigureName, FigureParams};
use spectral_restriction::spectrum::{PiecewiseLinearSpectrum, SpectrumKind};
use spectral_restriction::thresholds::improvement_interval;

fn main() {
    let cases = [
        ("chord 0.4 -> 0.9", vec![(0.0, 0.4), (1.0, 0.9)], 0.7),
        ("bent", vec![(0.0, 0.4), (0.3, 0.65), (1.0, 0.9)], 0.7),
        ("flat", vec![(0.0, 0.5), (1.0, 0.5)], 0.5),
    ];
    for (name, pts, alpha) in cases {
        let s = PiecewiseLinearSpectrum::from_pairs(1, pts, SpectrumKind::LowerBound).unwrap();
        println!("{name:<18} alpha = {alpha}: {:?}", improvement_interval(&s, &alpha).unwrap());
    }

    let params = FigureParams { grid: 11, ..Default::default() };
    let t = figure_table(FigureName::Improvement, &params).unwrap();
    println!("\n{}", t.columns.join(","));
    for row in &t.rows {
        let cells: Vec<String> = row.iter().map(|c| c.render()).collect();
        println!("{}", cells.join(","));
    }
}
