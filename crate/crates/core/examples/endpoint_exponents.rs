//! Endpoint and Lorentz-space exponents, exact and in floating point.
//!
//!     cargo run --example endpoint_exponents

use spectral_restriction::scalar::{format_rational, ratio};
use spectral_restriction::thresholds::{endpoint_exponents, sobolev_endpoint_q};

fn main() {
    let e = endpoint_exponents(2, &ratio(1, 1), &ratio(1, 2), &ratio(6, 5)).unwrap();
    println!("d=2 alpha=1 theta=1/2 s=6/5");
    for (name, v) in [("q0", e.q0), ("q0'", e.q0_dual), ("lambda", e.lambda), ("gamma", e.gamma), ("rho", e.rho), ("sigma", e.sigma)] {
        println!("  {name:<7}{:>12}  {:.6}", format_rational(&v), *v.numer() as f64 / *v.denom() as f64);
    }

    let f = endpoint_exponents(3, &2.2, &0.7, &2.6).unwrap();
    println!("\nd=3 alpha=2.2 theta=0.7 s=2.6: rho = {:.6}, sigma = {:.6}", f.rho, f.sigma);

    let sob = sobolev_endpoint_q(2, &ratio(3, 2), &ratio(1, 1)).unwrap();
    println!("\nSobolev endpoint (d=2, s=3/2, t=1): q = {}, dual = {}", sob.q.display(), sob.dual.display());
}
