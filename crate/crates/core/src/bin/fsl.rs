use std::process::ExitCode;

fn main() -> ExitCode {
    if let Some(n) = std::env::var("FSL_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let code = spectral_restriction::report::cli::run(std::env::args(), &mut std::io::stdout(), &mut std::io::stderr());
    ExitCode::from(code as u8)
}
