use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(lhbound::cli::run() as u8)
}
