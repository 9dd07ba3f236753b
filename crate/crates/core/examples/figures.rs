//! Write every figure as CSV into a directory (default ./figures).
//!
//!     cargo run --example figures -- out/

use spectral_restriction::report::cli::run;

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "figures".into());
    std::fs::create_dir_all(&dir).unwrap();
    let jobs: [&[&str]; 5] = [
        &["figure", "cone", "--dmin", "3", "--dmax", "12"],
        &["figure", "moment", "--dmin", "3", "--dmax", "12", "--paper-overlay"],
        &["figure", "fractal", "--p", "0.6"],
        &["figure", "improvement"],
        &["figure", "spectrum", "--measure", "cone:5"],
    ];
    for job in jobs {
        let path = format!("{dir}/{}.csv", job[1]);
        let args = std::iter::once("fsl").chain(job.iter().copied()).chain(["--out", path.as_str()]);
        let code = run(args, &mut std::io::stdout(), &mut std::io::stderr());
        println!("{path}: exit {code}");
    }
}
