use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(mcover_cli::run(std::env::args_os()) as u8)
}
