//! Estimate the spectrum of a Cantor measure from its Fourier transform.
//!
//!     cargo run --release --example estimate_cantor -- 0.6

use std::time::Instant;

use spectral_restriction::measures::cantor;
use spectral_restriction::numerics::{estimate_spectrum, FourierEvaluator, QuadratureBudget};

fn main() {
    let p: f64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(0.6);
    let model = cantor(p).unwrap().spectrum();
    let t = Instant::now();
    let fits = estimate_spectrum(&FourierEvaluator::Cantor { p }, &[0.25, 0.5, 0.75, 1.0], 6, 16, &QuadratureBudget::default())
        .unwrap();
    for f in &fits {
        println!(
            "theta = {:<4}  s = {:.4} +- {:.4}  (model {:.4}, r^2 {:.2}{})",
            f.theta,
            f.s_estimate,
            f.s_std_err,
            model.eval(&f.theta).unwrap(),
            f.r_squared,
            if f.reliable { "" } else { ", unreliable" }
        );
    }
    println!("{:.1?}", t.elapsed());
}
