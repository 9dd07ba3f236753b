//! The moment curve: breakpoints of its spectrum and the resulting exponents.
//!
//!     cargo run --example moment_curve -- 8

use spectral_restriction::measures::moment_curve;
use spectral_restriction::scalar::format_rational;
use spectral_restriction::thresholds::full_report;

fn main() {
    let d: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let m = moment_curve(d).unwrap();
    println!("breakpoints of the spectrum in R^{d}:");
    for p in m.exact_spectrum().unwrap().breakpoints() {
        println!("  theta = {:>8}  value = {}", format_rational(&p.theta), format_rational(&p.value));
    }
    let r = full_report(&m).unwrap();
    print!("\n{}", spectral_restriction::report::render_report(&r));
    println!("sharp conjecture: q > {}", d * d + d);
}
