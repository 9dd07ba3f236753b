//! Restriction thresholds for the light cone, exact in rational arithmetic.
//!
//!     cargo run --example cone_thresholds

use spectral_restriction::measures::cone;
use spectral_restriction::scalar::format_rational;
use spectral_restriction::thresholds::{converse_q, hambrook_laba_q, main_q, stein_tomas_q_dim};

fn main() {
    println!("{:>3} {:>8} {:>8} {:>10} {:>9} {:>9}", "d", "ST", "main", "theta_opt", "converse", "HL");
    for d in 3..=12 {
        let m = cone(d).unwrap();
        let spec = m.exact_spectrum().unwrap();
        let alpha = spectral_restriction::scalar::ratio(d as i64 - 1, 1);
        let st = stein_tomas_q_dim(spec, &alpha).unwrap();
        let main = main_q(spec, &alpha).unwrap();
        let conv = converse_q(spec).unwrap().unwrap();
        let hl = hambrook_laba_q(spec).unwrap().unwrap();
        println!(
            "{d:>3} {:>8} {:>8} {:>10} {:>9} {:>9}",
            st.display(),
            main.exponent.display(),
            format_rational(&main.theta_opt),
            conv.display(),
            hl.display()
        );
    }
}
