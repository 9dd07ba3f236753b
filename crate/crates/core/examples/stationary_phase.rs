//! Do the decay bounds for the cone transform hold with a scale-free constant?
//!
//!     cargo run --release --example stationary_phase

use spectral_restriction::numerics::{stationary_phase_check, SampleSpec};

fn main() {
    for d in [3, 4] {
        let rep = stationary_phase_check(d, &SampleSpec::default()).unwrap();
        println!("d = {d}, {} samples", rep.samples);
        for r in &rep.regions {
            let bands: Vec<String> = r.bands.iter().map(|b| format!("{:.3}", b.max_constant)).collect();
            println!("  {:<14} max {:.3}  drift {:.3}  [{}]", format!("{:?}", r.region), r.max_constant, r.scale_drift, bands.join(" "));
        }
    }
}
