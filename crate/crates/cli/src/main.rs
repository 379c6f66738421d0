use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(hcf_cli::run(std::env::args_os()))
}
