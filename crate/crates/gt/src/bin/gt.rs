use std::process::ExitCode;

fn main() -> ExitCode {
    gt::cli::run()
}
