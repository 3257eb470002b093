use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let report = jordan_cli::run(std::env::args_os());
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(report.text.as_bytes());
    ExitCode::from(report.status.code())
}
