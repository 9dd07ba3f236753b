//! Cantor measure convolved with a Salem measure of dimension eps: the
//! theta = 1/2 exponent against Stein-Tomas, and the small-eps comparison.
//!
//!     cargo run --example cantor_salem

use spectral_restriction::measures::{
    cantor_example_ranges, cantor_feasibility_cutoff, khalil_comparison, parse_descriptor,
};
use spectral_restriction::thresholds::full_report;

fn main() {
    let p = 0.6;
    println!("feasible once eps > {:.4}", cantor_feasibility_cutoff(p).unwrap());
    println!("{:>6} {:>10} {:>12}", "eps", "theta=1/2", "Stein-Tomas");
    for eps in [0.067, 0.1, 0.2, 0.3, 0.5, 0.7] {
        let (q, st) = cantor_example_ranges(p, eps).unwrap();
        println!("{eps:>6} {q:>10.4} {st:>12.4}");
    }

    let r = full_report(&parse_descriptor("cantor:0.6+salem:0.067").unwrap()).unwrap();
    println!("\nfull pipeline: main q > {:.4} at theta = {:?}", r.main.unwrap().value(), r.theta_opt);

    // f(theta) = d*theta - c*theta^2 near theta = 0
    println!("\n{:>8} {:>10} {:>12}", "eps", "4/theta0", "Stein-Tomas");
    for row in khalil_comparison(1.0, 1, 0.2, &[0.1, 0.01, 0.001]).unwrap() {
        println!("{:>8} {:>10.2} {:>12.2}", row.eps, row.q_spectrum, row.q_stein_tomas);
    }
}
