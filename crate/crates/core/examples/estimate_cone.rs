//! Estimate the spectrum of the cone in R^3, where it equals 1 + theta.
//! Takes about half a minute in release mode.
//!
//!     cargo run --release --example estimate_cone

use std::time::Instant;

use spectral_restriction::numerics::{estimate_spectrum, FourierEvaluator, QuadratureBudget};

fn main() {
    let t = Instant::now();
    let fits = estimate_spectrum(&FourierEvaluator::Cone { d: 3 }, &[0.3, 0.6, 0.9], 3, 8, &QuadratureBudget::default())
        .unwrap();
    for f in &fits {
        println!("theta = {}  s = {:.4} +- {:.4}  want {}", f.theta, f.s_estimate, f.s_std_err, 1.0 + f.theta);
        for s in &f.shells {
            println!("    j = {}  A_j = {:.5e}  rel err ~ {:.1e}", s.j, s.a_j, s.est_rel_error);
        }
    }
    println!("{:.1?}", t.elapsed());
}
