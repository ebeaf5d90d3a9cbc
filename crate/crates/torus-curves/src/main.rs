use std::process::ExitCode;

fn main() -> ExitCode {
    torus_curves::cli::run()
}
